#include "fourcolor/pi1.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "fourcolor/surfaces.hpp"

namespace fourcolor {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

namespace {

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

GroupPresentation c_group(const ColoredGraph& g, Color c) {
  const int n = g.order();
  std::vector<int> gen(n, 0);
  int count = 0;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex w = g.neighbor(v, c);
    if (v < w) gen[v] = gen[w] = ++count;
  }
  GroupPresentation p{numbered("x", count), {}};
  for (Color i = 0; i < kNumColors; ++i) {
    if (i == c) continue;
    for (const auto& r : residues(g, ColorSet{i, c})) {
      const Vertex start = r.vertices.front();
      Word w;
      Vertex u = start;
      do {
        const Vertex next = g.neighbor(u, c);
        w.push_back(u < next ? gen[u] : -gen[u]);
        u = g.neighbor(next, i);
      } while (u != start);
      p.relators.push_back(std::move(w));
    }
  }
  return p;
}

GroupPresentation spanning_tree_presentation(const ColoredGraph& g) {
  const int n = g.order();
  // tree[v][c] marks the edge (v, c) as a tree edge
  std::vector<std::array<char, kNumColors>> tree(n, {0, 0, 0, 0});
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Color c = 0; c < kNumColors; ++c) {
      const Vertex w = g.neighbor(v, c);
      if (!seen[w]) {
        seen[w] = 1;
        tree[v][c] = tree[w][c] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::array<int, kNumColors>> gen(n, {0, 0, 0, 0});
  int count = 0;
  for (Vertex v = 0; v < n; ++v)
    for (Color c = 0; c < kNumColors; ++c) {
      const Vertex w = g.neighbor(v, c);
      if (v < w && !tree[v][c]) gen[v][c] = gen[w][c] = ++count;
    }
  GroupPresentation p{numbered("x", count), {}};
  for (Color i = 0; i < kNumColors; ++i) {
    for (Color j = i + 1; j < kNumColors; ++j) {
      for (const auto& r : residues(g, ColorSet{i, j})) {
        const Vertex start = r.vertices.front();
        Word w;
        Vertex u = start;
        Color step = i;
        do {
          const Vertex next = g.neighbor(u, step);
          if (gen[u][step]) w.push_back(u < next ? gen[u][step] : -gen[u][step]);
          u = next;
          step = step == i ? j : i;
        } while (!(u == start && step == i));
        p.relators.push_back(std::move(w));
      }
    }
  }
  return p;
}

GroupPresentation fundamental_group(const ColoredGraph& g, Color c) {
  GroupPresentation p = c_group(g, c);
  const int n = g.order();
  const auto index = residue_index(g, ColorSet::hat(c));
  const int nodes = *std::max_element(index.begin(), index.end()) + 1;
  std::vector<std::vector<Vertex>> members(nodes);
  for (Vertex v = 0; v < n; ++v) members[index[v]].push_back(v);
  std::vector<int> gen(n, 0);
  int count = 0;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex w = g.neighbor(v, c);
    if (v < w) gen[v] = gen[w] = ++count;
  }
  std::vector<char> visited(nodes, 0);
  std::vector<int> queue{index[0]};
  visited[index[0]] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex v : members[queue[head]]) {
      const int other = index[g.neighbor(v, c)];
      if (!visited[other]) {
        visited[other] = 1;
        queue.push_back(other);
        p.relators.push_back({gen[v]});
      }
    }
  }
  return p;
}

GroupPresentation fundamental_group(const ColoredGraph& g) {
  const auto s = three_residue_surfaces(g);
  int chosen = -1;
  for (Color c = 0; c < kNumColors; ++c) {
    bool singular = false;
    for (std::size_t r = 0; r < s.surfaces[c].size(); ++r) singular |= s.singular(c, static_cast<int>(r));
    if (singular) continue;
    if (s.surfaces[c].size() == 1) {
      chosen = c;
      break;
    }
    if (chosen < 0) chosen = c;
  }
  if (chosen < 0) return spanning_tree_presentation(g);
  return fundamental_group(g, chosen);
}

GroupPresentation simplify(const GroupPresentation& input) {
  GroupPresentation p = input;
  for (;;) {
    std::vector<Word> cleaned;
    for (const auto& r : p.relators) {
      Word w = cyclic_reduce(r);
      if (w.empty()) continue;
      if (std::find(cleaned.begin(), cleaned.end(), w) != cleaned.end()) continue;
      cleaned.push_back(std::move(w));
    }
    p.relators = std::move(cleaned);

    // shortest relator holding a generator exactly once
    int best_rel = -1, best_pos = -1;
    for (int ri = 0; ri < static_cast<int>(p.relators.size()); ++ri) {
      const auto& w = p.relators[ri];
      if (best_rel >= 0 && w.size() >= p.relators[best_rel].size()) continue;
      std::map<int, int> occurrences;
      for (int x : w) ++occurrences[std::abs(x)];
      for (int pos = 0; pos < static_cast<int>(w.size()); ++pos) {
        if (occurrences[std::abs(w[pos])] == 1) {
          best_rel = ri;
          best_pos = pos;
          break;
        }
      }
    }
    if (best_rel < 0) return p;

    // w = A x^e B, so x^e = (B A)^{-1}
    const Word w = p.relators[best_rel];
    const int x = std::abs(w[best_pos]);
    const bool positive = w[best_pos] > 0;
    Word rest(w.begin() + best_pos + 1, w.end());
    rest.insert(rest.end(), w.begin(), w.begin() + best_pos);
    const Word value = positive ? inverse(rest) : rest;  // word equal to x
    const Word value_inv = inverse(value);

    std::vector<Word> next;
    for (int ri = 0; ri < static_cast<int>(p.relators.size()); ++ri) {
      if (ri == best_rel) continue;
      Word out;
      for (int y : p.relators[ri]) {
        if (std::abs(y) == x) {
          const Word& sub = y > 0 ? value : value_inv;
          out.insert(out.end(), sub.begin(), sub.end());
        } else {
          out.push_back(y);
        }
      }
      for (int& y : out)
        if (std::abs(y) > x) y += y > 0 ? -1 : 1;
      next.push_back(free_reduce(out));
    }
    p.relators = std::move(next);
    p.generators.erase(p.generators.begin() + (x - 1));
  }
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in Smith normal form");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer overflow in Smith normal form");
  return r;
}

using Matrix = std::vector<std::vector<std::int64_t>>;

// row[dst] -= q * row[src]
void row_op(Matrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] = checked_add(m[dst][j], -checked_mul(q, m[src][j]));
}

void col_op(Matrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
  for (auto& row : m) row[dst] = checked_add(row[dst], -checked_mul(q, row[src]));
}

// Diagonal entries of the Smith normal form (absolute values, zeros omitted).
std::vector<std::int64_t> smith_diagonal(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // pivot: smallest nonzero absolute value in the trailing block
      std::size_t pi = rows, pj = cols;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
            best = std::llabs(m[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) return diag;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        row_op(m, i, t, m[i][t] / m[t][t]);
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        col_op(m, j, t, m[t][j] / m[t][t]);
        if (m[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(std::llabs(m[t][t]));
  }
  return diag;
}

}  // namespace

AbelianInvariants abelianization(const GroupPresentation& p) {
  const std::size_t n = p.generators.size();
  Matrix m;
  for (const auto& w : p.relators) {
    std::vector<std::int64_t> row(n, 0);
    for (int x : w) {
      const auto k = static_cast<std::size_t>(std::abs(x) - 1);
      row[k] = checked_add(row[k], x > 0 ? 1 : -1);
    }
    m.push_back(std::move(row));
  }
  std::vector<std::int64_t> diag = n ? smith_diagonal(std::move(m)) : std::vector<std::int64_t>{};
  // enforce the divisibility chain: (a, b) -> (gcd, lcm)
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const std::int64_t g = std::gcd(diag[i], diag[j]);
      if (g == diag[i]) continue;
      const std::int64_t l = checked_mul(diag[i] / g, diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  AbelianInvariants out;
  out.rank = static_cast<int>(n - diag.size());
  for (std::int64_t d : diag)
    if (d > 1) out.torsion.push_back(d);
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

std::string AbelianInvariants::to_string() const {
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (auto t : torsion) parts.push_back("Z/" + std::to_string(t));
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::string export_presentation(const GroupPresentation& p, ExportFormat format) {
  std::ostringstream out;
  if (format == ExportFormat::Gap) {
    out << "F := FreeGroup(";
    if (p.generators.empty()) {
      out << "0";
    } else {
      for (std::size_t i = 0; i < p.generators.size(); ++i) out << (i ? ", " : "") << "\"f" << i + 1 << '"';
    }
    out << ");;\n";
    out << "G := F / [";
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      out << (r ? ",\n  " : "\n  ");
      if (p.relators[r].empty()) {
        out << "One(F)";
        continue;
      }
      for (std::size_t k = 0; k < p.relators[r].size(); ++k) {
        const int x = p.relators[r][k];
        out << (k ? "*" : "") << "F.";
        out << std::abs(x);
        if (x < 0) out << "^-1";
      }
    }
    out << (p.relators.empty() ? "];;\n" : "\n];;\n");
    return out.str();
  }
  out << "generators:";
  for (const auto& name : p.generators) out << ' ' << name;
  out << '\n';
  for (const auto& w : p.relators) {
    out << "relator:";
    if (w.empty()) out << " 1";
    for (int x : w) {
      out << ' ' << p.generators[std::abs(x) - 1];
      if (x < 0) out << "^-1";
    }
    out << '\n';
  }
  return out.str();
}

GroupPresentation parse_plain_presentation(const std::string& text) {
  GroupPresentation p;
  std::istringstream in(text);
  std::string line;
  std::map<std::string, int> index;
  bool have_generators = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string key;
    fields >> key;
    if (key == "generators:") {
      std::string name;
      while (fields >> name) {
        p.generators.push_back(name);
        index[name] = static_cast<int>(p.generators.size());
      }
      have_generators = true;
    } else if (key == "relator:") {
      if (!have_generators) throw Error(ErrorKind::CorruptFile, "relator before generator list");
      Word w;
      std::string token;
      while (fields >> token) {
        if (token == "1") continue;
        int sign = 1;
        const auto caret = token.find("^-1");
        if (caret != std::string::npos) {
          sign = -1;
          token.erase(caret);
        }
        const auto it = index.find(token);
        if (it == index.end()) throw Error(ErrorKind::CorruptFile, "unknown generator '" + token + "'");
        w.push_back(sign * it->second);
      }
      p.relators.push_back(std::move(w));
    } else {
      throw Error(ErrorKind::CorruptFile, "unexpected line '" + line + "'");
    }
  }
  return p;
}

}  // namespace fourcolor
