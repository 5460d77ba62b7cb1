#include "fourcolor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "fourcolor/surfaces.hpp"

namespace fourcolor {

std::vector<Color> ColorSet::colors() const {
  std::vector<Color> out;
  for (Color c = 0; c < kNumColors; ++c)
    if (contains(c)) out.push_back(c);
  return out;
}

std::string ColorSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (Color c : colors()) {
    if (!first) s += ',';
    s += static_cast<char>('0' + c);
    first = false;
  }
  return s + "}";
}

void check_involutions(const std::vector<ColoredGraph::Row>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 2 || n % 2 != 0)
    throw Error(ErrorKind::NotInvolution, "order must be a positive even number, got " + std::to_string(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Color c = 0; c < kNumColors; ++c) {
      const Vertex w = rows[v][c];
      if (w < 0 || w >= n)
        throw Error(ErrorKind::NotInvolution,
                    "color " + std::to_string(c) + " maps vertex " + std::to_string(v) + " outside the vertex set");
      if (w == v)
        throw Error(ErrorKind::FixedPoint, "color " + std::to_string(c) + " fixes vertex " + std::to_string(v) +
                                               " (a loop)");
      if (rows[w][c] != v)
        throw Error(ErrorKind::NotInvolution,
                    "color " + std::to_string(c) + " is not an involution at vertex " + std::to_string(v));
    }
  }
}

namespace {

bool connected(const std::vector<ColoredGraph::Row>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : rows[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

}  // namespace

ColoredGraph ColoredGraph::from_rows(std::vector<Row> rows) {
  check_involutions(rows);
  if (!connected(rows)) throw Error(ErrorKind::Disconnected, "the union of the four color involutions is disconnected");
  return ColoredGraph(std::move(rows));
}

ColoredGraph ColoredGraph::from_involutions(const std::array<std::vector<Vertex>, kNumColors>& inv) {
  const std::size_t n = inv[0].size();
  for (const auto& m : inv)
    if (m.size() != n) throw Error(ErrorKind::NotInvolution, "involutions have different domain sizes");
  std::vector<Row> rows(n);
  for (std::size_t v = 0; v < n; ++v)
    for (Color c = 0; c < kNumColors; ++c) rows[v][c] = inv[c][v];
  return from_rows(std::move(rows));
}

ColoredGraph ColoredGraph::order_two() { return ColoredGraph({Row{1, 1, 1, 1}, Row{0, 0, 0, 0}}); }

ColoredGraph ColoredGraph::recolored(const ColorPermutation& perm) const {
  std::vector<Row> out(rows_.size());
  for (std::size_t v = 0; v < rows_.size(); ++v)
    for (Color c = 0; c < kNumColors; ++c) out[v][perm[c]] = rows_[v][c];
  return from_rows(std::move(out));
}

ColoredGraph ColoredGraph::relabeled(const std::vector<Vertex>& relabel) const {
  const int n = order();
  if (static_cast<int>(relabel.size()) != n)
    throw Error(ErrorKind::NotAPermutation, "relabeling has the wrong size");
  std::vector<Row> out(n);
  std::vector<char> hit(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex r = relabel[v];
    if (r < 0 || r >= n || hit[r]) throw Error(ErrorKind::NotAPermutation, "relabeling is not a bijection");
    hit[r] = 1;
    for (Color c = 0; c < kNumColors; ++c) out[r][c] = relabel[rows_[v][c]];
  }
  return from_rows(std::move(out));
}

bool Residue::contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

std::vector<int> residue_index(const ColoredGraph& g, ColorSet colors) {
  const int n = g.order();
  std::vector<int> index(n, -1);
  const auto cols = colors.colors();
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (index[s] >= 0) continue;
    index[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Color c : cols) {
        const Vertex w = g.neighbor(v, c);
        if (index[w] < 0) {
          index[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return index;
}

std::vector<Residue> residues(const ColoredGraph& g, ColorSet colors) {
  const auto index = residue_index(g, colors);
  const int count = index.empty() ? 0 : *std::max_element(index.begin(), index.end()) + 1;
  std::vector<Residue> out(count);
  for (auto& r : out) r.colors = colors;
  for (Vertex v = 0; v < g.order(); ++v) out[index[v]].vertices.push_back(v);
  return out;
}

int count_residues(const ColoredGraph& g, ColorSet colors) {
  const auto index = residue_index(g, colors);
  return index.empty() ? 0 : *std::max_element(index.begin(), index.end()) + 1;
}

Residue residue_of(const ColoredGraph& g, ColorSet colors, Vertex v) {
  const auto index = residue_index(g, colors);
  Residue r{colors, {}};
  for (Vertex w = 0; w < g.order(); ++w)
    if (index[w] == index[v]) r.vertices.push_back(w);
  return r;
}

ResidueCounts residue_counts(const ColoredGraph& g) {
  ResidueCounts rc;
  for (Color i = 0; i < kNumColors; ++i) {
    for (Color j = i + 1; j < kNumColors; ++j) {
      const int n = count_residues(g, ColorSet{i, j});
      rc.pair[i][j] = rc.pair[j][i] = n;
    }
    rc.hat[i] = count_residues(g, ColorSet::hat(i));
  }
  return rc;
}

bool is_bipartite_on(const ColoredGraph& g, ColorSet colors, const std::vector<Vertex>& vertices) {
  std::vector<int> side(g.order(), -1);
  const auto cols = colors.colors();
  std::vector<Vertex> stack;
  for (Vertex s : vertices) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Color c : cols) {
        const Vertex w = g.neighbor(v, c);
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_bipartite(const ColoredGraph& g, ColorSet colors) {
  std::vector<Vertex> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return is_bipartite_on(g, colors, all);
}

// ---------------------------------------------------------------------------
// Bipartite letter codes

namespace {

int upper_index(char ch) { return ch >= 'A' && ch <= 'Z' ? ch - 'A' : -1; }

}  // namespace

ColoredGraph parse_paper_code(std::string_view text, int p) {
  if (p < 1 || p > 26) throw Error(ErrorKind::BadLength, "p must lie in 1..26, got " + std::to_string(p));
  if (static_cast<int>(text.size()) != 3 * p)
    throw Error(ErrorKind::BadLength,
                "code length must be 3p = " + std::to_string(3 * p) + ", got " + std::to_string(text.size()));
  // lowercase j -> vertex j, uppercase j -> vertex p + j
  std::vector<ColoredGraph::Row> rows(2 * p);
  for (int j = 0; j < p; ++j) {
    rows[j][0] = p + j;
    rows[p + j][0] = j;
  }
  for (Color i = 1; i < kNumColors; ++i) {
    std::vector<char> hit(p, 0);
    for (int j = 0; j < p; ++j) {
      const int y = upper_index(text[p * (i - 1) + j]);
      if (y < 0 || y >= p || hit[y])
        throw Error(ErrorKind::NotAPermutation, "block for color " + std::to_string(i) +
                                                    " is not a permutation of the uppercase vertices");
      hit[y] = 1;
      rows[j][i] = p + y;
      rows[p + y][i] = j;
    }
  }
  return ColoredGraph::from_rows(std::move(rows));
}

std::string emit_paper_code(const ColoredGraph& g) {
  const int n = g.order();
  if (n > 52) throw Error(ErrorKind::BadLength, "letter codes support at most 52 vertices");
  // 2-color the graph from vertex 0; vertex 0's side becomes the lowercase letters.
  std::vector<int> side(n, -1);
  side[0] = 0;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.row(v)) {
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        throw Error(ErrorKind::NotBipartite, "letter codes require a bipartite graph");
      }
    }
  }
  const int p = n / 2;
  std::vector<int> letter(n, -1);
  int next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (side[v] == 0) letter[v] = next++;
  for (Vertex v = 0; v < n; ++v)
    if (side[v] == 0) letter[g.neighbor(v, 0)] = letter[v];
  std::vector<Vertex> lower(p);
  for (Vertex v = 0; v < n; ++v)
    if (side[v] == 0) lower[letter[v]] = v;
  std::string out;
  out.reserve(3 * p);
  for (Color i = 1; i < kNumColors; ++i)
    for (int j = 0; j < p; ++j) out += static_cast<char>('A' + letter[g.neighbor(lower[j], i)]);
  return out;
}

// ---------------------------------------------------------------------------
// Canonical codes

namespace {

constexpr std::string_view kLabelAlphabet = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

const std::vector<ColorPermutation>& all_color_permutations() {
  static const std::vector<ColorPermutation> perms = [] {
    std::vector<ColorPermutation> out;
    ColorPermutation p = kIdentityColors;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

// Breadth-first relabeling from `start`, reading color k of the relabeled
// graph as color read[k] of g. Writes the neighbor-label sequence into `seq`
// while comparing against `best`; returns false as soon as the sequence is
// known to exceed `best` (when `best` is non-empty).
bool relabel_sequence(const ColoredGraph& g, Vertex start, const ColorPermutation& read, std::vector<int>& label,
                      std::vector<Vertex>& order, std::vector<int>& seq, const std::vector<int>& best) {
  const int n = g.order();
  std::fill(label.begin(), label.end(), -1);
  order.clear();
  seq.clear();
  label[start] = 0;
  order.push_back(start);
  bool tied = !best.empty();
  for (int head = 0; head < n; ++head) {
    const Vertex u = order[head];
    for (Color k = 0; k < kNumColors; ++k) {
      const Vertex w = g.neighbor(u, read[k]);
      if (label[w] < 0) {
        label[w] = static_cast<int>(order.size());
        order.push_back(w);
      }
      const int value = label[w];
      if (tied) {
        const int b = best[seq.size()];
        if (value > b) return false;
        if (value < b) tied = false;
      }
      seq.push_back(value);
    }
  }
  return true;
}

std::string encode_labels(const std::vector<int>& seq, int n) {
  std::string body;
  if (n <= static_cast<int>(kLabelAlphabet.size())) {
    body.reserve(seq.size());
    for (int x : seq) body += kLabelAlphabet[x];
  } else {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) body += '.';
      body += std::to_string(seq[i]);
    }
  }
  return std::to_string(n) + ":" + body;
}

}  // namespace

std::string canonical_text(const ColoredGraph& g) {
  const int n = g.order();
  std::vector<int> label(n), best, seq;
  std::vector<Vertex> order;
  label.reserve(n);
  order.reserve(n);
  seq.reserve(4 * n);
  best.reserve(4 * n);
  for (const auto& sigma : all_color_permutations()) {
    // new color k is old color sigma^{-1}(k)
    ColorPermutation read;
    for (Color c = 0; c < kNumColors; ++c) read[sigma[c]] = c;
    for (Vertex s = 0; s < n; ++s) {
      if (relabel_sequence(g, s, read, label, order, seq, best)) {
        if (best.empty() || seq < best) best.swap(seq);
      }
    }
  }
  return encode_labels(best, n);
}

CanonicalCode canonical_code(const ColoredGraph& g) { return {canonical_text(g), bipartiteness_class(g)}; }

bool are_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.order() != b.order()) return false;
  return canonical_text(a) == canonical_text(b);
}

ColoredGraph parse_canonical_code(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::BadCode, "canonical code lacks the order prefix");
  int n = 0;
  const auto order_part = text.substr(0, colon);
  const auto [ptr, ec] = std::from_chars(order_part.data(), order_part.data() + order_part.size(), n);
  if (ec != std::errc() || ptr != order_part.data() + order_part.size() || n < 2)
    throw Error(ErrorKind::BadCode, "bad order prefix in canonical code");
  const auto body = text.substr(colon + 1);
  std::vector<int> seq;
  if (n <= static_cast<int>(kLabelAlphabet.size())) {
    for (char ch : body) {
      const auto pos = kLabelAlphabet.find(ch);
      if (pos == std::string_view::npos) throw Error(ErrorKind::BadCode, "invalid character in canonical code");
      seq.push_back(static_cast<int>(pos));
    }
  } else {
    std::size_t i = 0;
    while (i <= body.size()) {
      const auto dot = std::min(body.find('.', i), body.size());
      int x = 0;
      const auto [p2, ec2] = std::from_chars(body.data() + i, body.data() + dot, x);
      if (ec2 != std::errc() || p2 != body.data() + dot) throw Error(ErrorKind::BadCode, "bad label in canonical code");
      seq.push_back(x);
      i = dot + 1;
    }
  }
  if (static_cast<int>(seq.size()) != 4 * n)
    throw Error(ErrorKind::BadLength, "canonical code body must hold 4 labels per vertex");
  std::vector<ColoredGraph::Row> rows(n);
  for (Vertex v = 0; v < n; ++v)
    for (Color c = 0; c < kNumColors; ++c) rows[v][c] = seq[4 * v + c];
  return ColoredGraph::from_rows(std::move(rows));
}

// ---------------------------------------------------------------------------
// Plain graph files

std::string format_graph_text(const ColoredGraph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (Color c = 0; c < kNumColors; ++c) {
    for (Vertex v = 0; v < g.order(); ++v) out << (v ? " " : "") << g.neighbor(v, c) + 1;
    out << '\n';
  }
  return out.str();
}

ColoredGraph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.size() != 1 + kNumColors)
    throw Error(ErrorKind::CorruptFile, "graph text needs 5 lines (order and four involutions), got " +
                                            std::to_string(lines.size()));
  auto numbers = [](const std::string& line, int lineno) {
    std::istringstream ls(line);
    std::vector<long long> out;
    std::string tok;
    while (ls >> tok) {
      long long x = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw Error(ErrorKind::CorruptFile, "line " + std::to_string(lineno) + ": bad number '" + tok + "'");
      out.push_back(x);
    }
    return out;
  };
  const auto head = numbers(lines[0], 1);
  if (head.size() != 1 || head[0] < 2 || head[0] % 2 != 0)
    throw Error(ErrorKind::CorruptFile, "line 1: order must be one even number >= 2");
  const auto n = static_cast<int>(head[0]);
  std::vector<ColoredGraph::Row> rows(n);
  for (Color c = 0; c < kNumColors; ++c) {
    const auto images = numbers(lines[c + 1], c + 2);
    if (static_cast<int>(images.size()) != n)
      throw Error(ErrorKind::BadLength, "color " + std::to_string(c) + " lists " + std::to_string(images.size()) +
                                            " images, expected " + std::to_string(n));
    for (Vertex v = 0; v < n; ++v) {
      if (images[v] < 1 || images[v] > n)
        throw Error(ErrorKind::NotAPermutation, "color " + std::to_string(c) + ": image out of range");
      rows[v][c] = static_cast<Vertex>(images[v] - 1);
    }
  }
  return ColoredGraph::from_rows(std::move(rows));
}

}  // namespace fourcolor
