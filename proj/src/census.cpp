#include "fourcolor/census.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "fourcolor/embeddings.hpp"

namespace fourcolor {

namespace {

constexpr int kMaxCensusOrder = 32;

// ---------------------------------------------------------------------------
// Perfect matchings (fixed-point-free involutions)

template <typename Fn>
void for_each_matching_rec(std::vector<Vertex>& mate, int n, const Fn& fn) {
  Vertex first = -1;
  for (Vertex v = 0; v < n; ++v)
    if (mate[v] < 0) {
      first = v;
      break;
    }
  if (first < 0) {
    fn(mate);
    return;
  }
  for (Vertex w = first + 1; w < n; ++w) {
    if (mate[w] >= 0) continue;
    mate[first] = w;
    mate[w] = first;
    for_each_matching_rec(mate, n, fn);
    mate[first] = mate[w] = -1;
  }
}

template <typename Fn>
void for_each_matching(int n, const Fn& fn) {
  std::vector<Vertex> mate(n, -1);
  for_each_matching_rec(mate, n, fn);
}

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    current.push_back(k);
    partitions_rec(remaining - k, k, current, out);
    current.pop_back();
  }
}

// ---------------------------------------------------------------------------
// 3-colored seeds

struct SeedComponent {
  std::vector<Vertex> vertices;
};

std::vector<std::vector<Vertex>> seed_components(const SeedGraph& s) {
  const int n = s.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<Vertex> members{start};
    comp[start] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < members.size(); ++head)
      for (Vertex w : s.rows[members[head]])
        if (comp[w] < 0) {
          comp[w] = comp[start];
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

// BFS relabeling code of one component (labels relative to the component).
std::string component_code(const SeedGraph& s, const std::vector<Vertex>& members, const std::array<int, 3>& read) {
  static constexpr std::string_view alphabet = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
  const int n = s.order();
  std::vector<int> label(n, -1);
  std::vector<Vertex> order;
  std::vector<int> best, seq;
  for (Vertex start : members) {
    std::fill(label.begin(), label.end(), -1);
    order.assign(1, start);
    label[start] = 0;
    seq.clear();
    bool tied = !best.empty();
    bool worse = false;
    for (std::size_t head = 0; head < order.size() && !worse; ++head) {
      for (int k = 0; k < 3; ++k) {
        const Vertex w = s.rows[order[head]][read[k]];
        if (label[w] < 0) {
          label[w] = static_cast<int>(order.size());
          order.push_back(w);
        }
        if (tied) {
          const int b = best[seq.size()];
          if (label[w] > b) {
            worse = true;
            break;
          }
          if (label[w] < b) tied = false;
        }
        seq.push_back(label[w]);
      }
    }
    if (!worse && (best.empty() || seq < best)) best.swap(seq);
  }
  std::string out;
  for (int x : best) out += alphabet[static_cast<std::size_t>(x)];
  return out;
}

// Surface of each seed component: euler = F - q, orientable iff bipartite.
bool component_is_sphere(const SeedGraph& s, const std::vector<Vertex>& members) {
  const int n = s.order();
  int faces = 0;
  std::vector<char> seen(n);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Vertex start : members) {
        if (seen[start]) continue;
        ++faces;
        Vertex v = start;
        do {
          seen[v] = 1;
          const Vertex w = s.rows[v][i];
          seen[w] = 1;
          v = s.rows[w][j];
        } while (v != start);
      }
    }
  if (faces - static_cast<int>(members.size()) / 2 != 2) return false;
  std::vector<int> side(n, -1);
  side[members.front()] = 0;
  std::vector<Vertex> stack{members.front()};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : s.rows[v]) {
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Fast checks on small 4-colored graphs

struct SmallGraph {
  int n = 0;
  std::array<std::array<std::uint8_t, 4>, kMaxCensusOrder> nb{};
};

constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int k = 0; k < 6; ++k)
    if (kPairs[k][0] == i && kPairs[k][1] == j) return k;
  return -1;
}

bool small_connected(const SmallGraph& g) {
  std::uint32_t seen = 1u, frontier = 1u;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) {
      const int v = __builtin_ctz(f);
      for (int c = 0; c < 4; ++c) next |= 1u << g.nb[v][c];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (g.n == 32 ? 0xFFFFFFFFu : ((1u << g.n) - 1));
}

// Labels of the bicolored cycles for every color pair.
void pair_labels(const SmallGraph& g, std::array<std::array<std::int8_t, kMaxCensusOrder>, 6>& labels,
                 std::array<int, 6>& counts) {
  for (int k = 0; k < 6; ++k) {
    const int i = kPairs[k][0], j = kPairs[k][1];
    auto& lab = labels[k];
    std::fill(lab.begin(), lab.begin() + g.n, static_cast<std::int8_t>(-1));
    int count = 0;
    for (int start = 0; start < g.n; ++start) {
      if (lab[start] >= 0) continue;
      int v = start;
      do {
        lab[v] = static_cast<std::int8_t>(count);
        const int w = g.nb[v][i];
        lab[w] = static_cast<std::int8_t>(count);
        v = g.nb[w][j];
      } while (v != start);
      ++count;
    }
    counts[k] = count;
  }
}

bool small_has_2dipole(const SmallGraph& g, const std::array<std::array<std::int8_t, kMaxCensusOrder>, 6>& labels) {
  for (int v = 0; v < g.n; ++v) {
    for (int a = 0; a < 4; ++a) {
      const int w = g.nb[v][a];
      if (w < v) continue;
      for (int b = a + 1; b < 4; ++b) {
        if (g.nb[v][b] != w) continue;
        int rest[2], r = 0;
        for (int c = 0; c < 4; ++c)
          if (c != a && c != b) rest[r++] = c;
        // exactly two joining colors
        if (g.nb[v][rest[0]] == w || g.nb[v][rest[1]] == w) continue;
        const auto& lab = labels[pair_index(rest[0], rest[1])];
        if (lab[v] != lab[w]) return true;
      }
    }
  }
  return false;
}

bool small_contracted(const SmallGraph& g, const std::array<std::array<std::int8_t, kMaxCensusOrder>, 6>& labels) {
  for (int c = 0; c < 4; ++c) {
    int cols[3], r = 0;
    for (int k = 0; k < 4; ++k)
      if (k != c) cols[r++] = k;
    std::array<std::int8_t, kMaxCensusOrder> comp;
    std::fill(comp.begin(), comp.begin() + g.n, static_cast<std::int8_t>(-1));
    std::array<std::uint32_t, kMaxCensusOrder> members{};
    int count = 0;
    for (int start = 0; start < g.n; ++start) {
      if (comp[start] >= 0) continue;
      std::uint32_t seen = 1u << start, frontier = seen;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) {
          const int v = __builtin_ctz(f);
          next |= (1u << g.nb[v][cols[0]]) | (1u << g.nb[v][cols[1]]) | (1u << g.nb[v][cols[2]]);
        }
        frontier = next & ~seen;
        seen |= next;
      }
      for (std::uint32_t f = seen; f; f &= f - 1) comp[__builtin_ctz(f)] = static_cast<std::int8_t>(count);
      members[count++] = seen;
    }
    if (count == 1) continue;
    const int pairs[3] = {pair_index(cols[0], cols[1]), pair_index(cols[0], cols[2]), pair_index(cols[1], cols[2])};
    for (int r2 = 0; r2 < count; ++r2) {
      const std::uint32_t m = members[r2];
      int faces = 0;
      for (int pk : pairs) {
        std::uint64_t seen_labels = 0;
        for (std::uint32_t f = m; f; f &= f - 1) seen_labels |= 1ull << labels[pk][__builtin_ctz(f)];
        faces += __builtin_popcountll(seen_labels);
      }
      const int q = __builtin_popcount(m) / 2;
      if (faces - q != 2) continue;  // not a sphere
      // bipartite check on the residue
      std::array<std::int8_t, kMaxCensusOrder> side;
      std::fill(side.begin(), side.begin() + g.n, static_cast<std::int8_t>(-1));
      const int s0 = __builtin_ctz(m);
      side[s0] = 0;
      int stack[kMaxCensusOrder], top = 0;
      stack[top++] = s0;
      bool bip = true;
      while (top && bip) {
        const int v = stack[--top];
        for (int col : cols) {
          const int w = g.nb[v][col];
          if (side[w] < 0) {
            side[w] = static_cast<std::int8_t>(1 - side[v]);
            stack[top++] = w;
          } else if (side[w] == side[v]) {
            bip = false;
            break;
          }
        }
      }
      if (bip) return false;  // an ordinary residue among several
    }
  }
  return true;
}

ColoredGraph to_graph(const SmallGraph& g) {
  std::vector<ColoredGraph::Row> rows(g.n);
  for (int v = 0; v < g.n; ++v)
    for (int c = 0; c < 4; ++c) rows[v][c] = g.nb[v][c];
  return ColoredGraph::from_rows(std::move(rows));
}

}  // namespace

std::string seed_canonical_text(const SeedGraph& seed) {
  const auto comps = seed_components(seed);
  std::array<int, 3> sigma{0, 1, 2};
  std::string best;
  bool have = false;
  do {
    std::array<int, 3> read;
    for (int c = 0; c < 3; ++c) read[sigma[c]] = c;
    std::vector<std::string> codes;
    for (const auto& members : comps) codes.push_back(component_code(seed, members, read));
    std::sort(codes.begin(), codes.end());
    std::string joined;
    for (const auto& code : codes) {
      if (!joined.empty()) joined += '|';
      joined += code;
    }
    if (!have || joined < best) {
      best = std::move(joined);
      have = true;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::to_string(seed.order()) + ":" + best;
}

std::vector<SeedGraph> enumerate_seed_3graphs(int order) {
  if (order < 2 || order % 2 != 0 || order > kMaxCensusOrder)
    throw Error(ErrorKind::BudgetExceeded, "seed order must be even and in 2.." + std::to_string(kMaxCensusOrder));
  const int p = order / 2;
  std::vector<std::vector<int>> parts;
  std::vector<int> current;
  partitions_rec(p, p, current, parts);

  std::map<std::string, SeedGraph> unique;
  for (const auto& partition : parts) {
    // colors 0 and 1 form bicolored cycles of lengths 2k for the parts k
    SeedGraph base;
    base.rows.assign(order, {-1, -1, -1});
    int offset = 0;
    for (int k : partition) {
      const int len = 2 * k;
      for (int t = 0; t < len; t += 2) {
        const Vertex a = offset + t, b = offset + t + 1, c = offset + (t + 2) % len;
        base.rows[a][0] = b;
        base.rows[b][0] = a;
        base.rows[b][1] = c;
        base.rows[c][1] = b;
      }
      offset += len;
    }
    for_each_matching(order, [&](const std::vector<Vertex>& mate) {
      SeedGraph s = base;
      for (Vertex v = 0; v < order; ++v) s.rows[v][2] = mate[v];
      const auto comps = seed_components(s);
      if (comps.size() > 1)
        for (const auto& members : comps)
          if (component_is_sphere(s, members)) return;
      auto text = seed_canonical_text(s);
      unique.try_emplace(std::move(text), std::move(s));
    });
  }
  std::vector<SeedGraph> out;
  out.reserve(unique.size());
  for (auto& [text, s] : unique) out.push_back(std::move(s));
  return out;
}

void extend_seeds(const SeedGraph& seed, const std::function<void(const ColoredGraph&)>& emit) {
  const int n = seed.order();
  SmallGraph g;
  g.n = n;
  for (int v = 0; v < n; ++v)
    for (int c = 0; c < 3; ++c) g.nb[v][c] = static_cast<std::uint8_t>(seed.rows[v][c]);
  std::array<std::array<std::int8_t, kMaxCensusOrder>, 6> labels;
  std::array<int, 6> counts;
  for_each_matching(n, [&](const std::vector<Vertex>& mate) {
    for (int v = 0; v < n; ++v) g.nb[v][3] = static_cast<std::uint8_t>(mate[v]);
    if (!small_connected(g)) return;
    pair_labels(g, labels, counts);
    if (small_has_2dipole(g, labels)) return;
    if (!small_contracted(g, labels)) return;
    emit(to_graph(g));
  });
}

std::vector<ColoredGraph> extend_seeds(const SeedGraph& seed) {
  std::vector<ColoredGraph> out;
  extend_seeds(seed, [&](const ColoredGraph& g) { out.push_back(g); });
  return out;
}

CatalogueEntry make_entry(const ColoredGraph& graph) {
  CatalogueEntry e;
  e.code = canonical_code(graph);
  // color-dependent fields are read off the canonical representative
  const ColoredGraph g = parse_canonical_code(e.code.text);
  e.order = g.order();
  e.class_m = e.code.class_m;
  e.boundary = boundary_surfaces(g);
  e.singular_colors = e.boundary.singular_colors;
  e.chi = manifold_euler_characteristic(g);
  e.rho = regular_genus_rho(g).genus;
  e.abelian = abelianization(fundamental_group(g));
  return e;
}

CensusStats compute_stats(int order, const std::vector<CatalogueEntry>& entries) {
  CensusStats stats;
  stats.order = order;
  for (const auto& e : entries) {
    auto& counts = stats.by_class[e.class_m];
    ++counts.total;
    if (e.boundary.components.size() == 1) {
      ++counts.connected_boundary;
      if (e.boundary.components.front().is_torus()) ++counts.toric_boundary;
    }
  }
  return stats;
}

namespace {

template <typename Fn>
void parallel_for(std::size_t count, int jobs, const Fn& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  const auto stride = static_cast<std::size_t>(jobs);
  for (std::size_t t = 0; t < stride && t < count; ++t)
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += stride) fn(i);
    });
  for (auto& w : workers) w.join();
}

void append_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::app);
  for (const auto& l : lines) out << l << '\n';
  out.flush();
  if (!out) throw Error(ErrorKind::CorruptFile, "cannot append to " + path);
}

}  // namespace

Catalogue build_catalogue(int order, const CensusOptions& options) {
  if (order > options.max_order)
    throw Error(ErrorKind::BudgetExceeded,
                "order " + std::to_string(order) + " exceeds the configured maximum " + std::to_string(options.max_order));
  if (order < 2 || order % 2 != 0) throw Error(ErrorKind::BudgetExceeded, "census order must be even and >= 2");
  const auto seeds = enumerate_seed_3graphs(order);
  const int jobs = std::max(1, options.jobs);

  std::vector<CatalogueEntry> entries;
  std::unordered_set<std::string> known;
  std::unordered_set<std::string> closed;
  std::size_t first_seed = 0;
  bool resumed = false;
  if (!options.checkpoint_path.empty()) {
    std::ifstream probe(options.checkpoint_path);
    if (probe.good()) {
      probe.close();
      auto file = read_catalogue(options.checkpoint_path);
      if (file.order != order) throw Error(ErrorKind::CorruptFile, "checkpoint file is for a different order");
      entries = std::move(file.entries);
      for (const auto& e : entries) known.insert(e.code.text);
      first_seed = file.checkpoint < 0 ? seeds.size() : static_cast<std::size_t>(file.checkpoint);
      resumed = true;
    } else {
      append_lines(options.checkpoint_path, {"# fourcolor catalogue v1", "# order " + std::to_string(order)});
    }
  }

  const std::size_t chunk = static_cast<std::size_t>(jobs) * 4;
  for (std::size_t begin = first_seed; begin < seeds.size(); begin += chunk) {
    const std::size_t end = std::min(seeds.size(), begin + chunk);
    // per seed: locally deduplicated (code, graph) pairs in discovery order
    std::vector<std::vector<std::pair<std::string, ColoredGraph>>> found(end - begin);
    parallel_for(end - begin, jobs, [&](std::size_t k) {
      std::unordered_set<std::string> local;
      extend_seeds(seeds[begin + k], [&](const ColoredGraph& g) {
        auto text = canonical_text(g);
        if (local.insert(text).second) found[k].emplace_back(std::move(text), g);
      });
    });
    std::vector<const ColoredGraph*> fresh;
    for (auto& list : found)
      for (auto& [text, g] : list) {
        if (known.count(text) || closed.count(text)) continue;
        if (is_closed(g)) {
          closed.insert(text);
          continue;
        }
        known.insert(text);
        fresh.push_back(&g);
      }
    std::vector<CatalogueEntry> made(fresh.size());
    parallel_for(fresh.size(), jobs, [&](std::size_t k) { made[k] = make_entry(*fresh[k]); });
    if (!options.checkpoint_path.empty()) {
      std::vector<std::string> lines;
      for (const auto& e : made) lines.push_back(format_entry(e));
      lines.push_back("#checkpoint " + std::to_string(end));
      append_lines(options.checkpoint_path, lines);
    }
    entries.insert(entries.end(), std::make_move_iterator(made.begin()), std::make_move_iterator(made.end()));
    if (options.progress) options.progress(end, seeds.size());
  }

  std::sort(entries.begin(), entries.end(),
            [](const CatalogueEntry& a, const CatalogueEntry& b) { return a.code.text < b.code.text; });
  Catalogue cat;
  cat.stats = compute_stats(order, entries);
  cat.stats.closed_dropped = static_cast<std::int64_t>(closed.size());
  cat.stats.resumed = resumed;
  cat.entries = std::move(entries);
  if (!options.checkpoint_path.empty()) write_catalogue(cat.entries, order, options.checkpoint_path);
  return cat;
}

// ---------------------------------------------------------------------------
// Catalogue files

namespace {

constexpr char kSep = '|';

std::string encode_boundary(const BoundaryProfile& b) {
  if (b.components.empty()) return "-";
  std::string out;
  for (const auto& s : b.components) {
    if (!out.empty()) out += ',';
    out += (s.orientable ? 'o' : 'n') + std::to_string(s.genus);
  }
  return out;
}

std::string encode_colors(ColorSet s) {
  if (s.empty()) return "-";
  std::string out;
  for (Color c : s.colors()) out += static_cast<char>('0' + c);
  return out;
}

std::string encode_abelian(const AbelianInvariants& a) {
  std::string out = std::to_string(a.rank) + "/";
  for (std::size_t i = 0; i < a.torsion.size(); ++i) out += (i ? "," : "") + std::to_string(a.torsion[i]);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument("trailing characters");
  return v;
}

}  // namespace

std::string format_entry(const CatalogueEntry& e) {
  std::ostringstream out;
  out << e.code.text << kSep << e.class_m << kSep << encode_colors(e.singular_colors) << kSep
      << encode_boundary(e.boundary) << kSep << e.chi << kSep << e.rho << kSep << encode_abelian(e.abelian);
  return out.str();
}

CatalogueEntry parse_entry(const std::string& line) {
  const auto f = split(line, kSep);
  if (f.size() != 7) throw std::invalid_argument("expected 7 fields, got " + std::to_string(f.size()));
  CatalogueEntry e;
  const auto colon = f[0].find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad code field");
  e.order = parse_int(f[0].substr(0, colon));
  e.class_m = parse_int(f[1]);
  if (e.class_m < 2 || e.class_m > 4) throw std::invalid_argument("bad bipartiteness class");
  e.code = {f[0], e.class_m};
  if (f[2] != "-")
    for (char ch : f[2]) {
      if (ch < '0' || ch > '3') throw std::invalid_argument("bad singular color");
      e.singular_colors = e.singular_colors.with(ch - '0');
    }
  e.boundary.singular_colors = e.singular_colors;
  if (f[3] != "-")
    for (const auto& item : split(f[3], ',')) {
      if (item.size() < 2 || (item[0] != 'o' && item[0] != 'n')) throw std::invalid_argument("bad boundary item");
      const int genus = parse_int(item.substr(1));
      e.boundary.components.push_back(item[0] == 'o' ? SurfaceType::orientable_genus(genus)
                                                     : SurfaceType::nonorientable_genus(genus));
    }
  e.chi = parse_int(f[4]);
  e.rho = parse_int(f[5]);
  const auto slash = f[6].find('/');
  if (slash == std::string::npos) throw std::invalid_argument("bad abelian field");
  e.abelian.rank = parse_int(f[6].substr(0, slash));
  const auto tors = f[6].substr(slash + 1);
  if (!tors.empty())
    for (const auto& t : split(tors, ',')) e.abelian.torsion.push_back(parse_int(t));
  return e;
}

void write_catalogue(const std::vector<CatalogueEntry>& entries, int order, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  out << "# fourcolor catalogue v1\n";
  out << "# order " << order << '\n';
  for (const auto& e : entries) out << format_entry(e) << '\n';
  out << "# end " << entries.size() << '\n';
  out.flush();
  if (!out) throw Error(ErrorKind::CorruptFile, "cannot write " + path);
}

CatalogueFile read_catalogue(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::CorruptFile, "cannot open " + path);
  CatalogueFile file;
  std::string line;
  int lineno = 0;
  bool ended = false;
  auto corrupt = [&](const std::string& why) {
    return Error(ErrorKind::CorruptFile, path + ":" + std::to_string(lineno) + ": " + why);
  };
  // entries after the last checkpoint belong to an unfinished chunk
  std::size_t committed = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (ended) throw corrupt("content after end marker");
    if (lineno == 1) {
      if (line != "# fourcolor catalogue v1") throw corrupt("missing or unsupported format header");
      continue;
    }
    if (lineno == 2) {
      if (line.rfind("# order ", 0) != 0) throw corrupt("missing order header");
      try {
        file.order = parse_int(line.substr(8));
      } catch (const std::exception&) {
        throw corrupt("bad order header");
      }
      continue;
    }
    if (line.rfind("#checkpoint ", 0) == 0) {
      try {
        file.checkpoint = std::stoll(line.substr(12));
      } catch (const std::exception&) {
        throw corrupt("bad checkpoint line");
      }
      committed = file.entries.size();
      continue;
    }
    if (line.rfind("# end ", 0) == 0) {
      std::size_t count = 0;
      try {
        count = static_cast<std::size_t>(std::stoull(line.substr(6)));
      } catch (const std::exception&) {
        throw corrupt("bad end marker");
      }
      if (count != file.entries.size()) throw corrupt("entry count does not match end marker");
      ended = true;
      continue;
    }
    try {
      auto e = parse_entry(line);
      if (e.order != file.order) throw std::invalid_argument("entry order differs from header");
      file.entries.push_back(std::move(e));
    } catch (const std::exception& ex) {
      throw corrupt(ex.what());
    }
  }
  if (lineno < 2) throw corrupt("truncated header");
  if (!ended) {
    if (file.checkpoint < 0) throw corrupt("truncated file (no end marker)");
    file.entries.resize(committed);
  }
  return file;
}

std::string format_stats_table(const std::vector<CensusStats>& stats) {
  std::ostringstream out;
  auto row = [&](const std::string& name, auto value) {
    out << std::left << std::setw(12) << name;
    for (const auto& s : stats) out << " | " << std::right << std::setw(9) << value(s);
    out << '\n';
  };
  auto ratio = [](const ClassCounts& c) { return std::to_string(c.toric_boundary) + "/" + std::to_string(c.connected_boundary); };
  row("2p", [](const CensusStats& s) { return std::to_string(s.order); });
  row("C", [](const CensusStats& s) { return std::to_string(s.bipartite().total); });
  // C~ covers every non-bipartite graph; the 3-bip row is its class-3 part
  auto non_bipartite = [](const CensusStats& s) {
    ClassCounts c = s.two_bipartite();
    c.total += s.three_bipartite().total;
    c.connected_boundary += s.three_bipartite().connected_boundary;
    c.toric_boundary += s.three_bipartite().toric_boundary;
    return c;
  };
  row("C~", [&](const CensusStats& s) { return std::to_string(non_bipartite(s).total); });
  row("C_t/C_c", [&](const CensusStats& s) { return ratio(s.bipartite()); });
  row("C~_t/C~_c", [&](const CensusStats& s) { return ratio(non_bipartite(s)); });
  row("3-bip", [](const CensusStats& s) { return std::to_string(s.three_bipartite().total); });
  row("closed", [](const CensusStats& s) { return std::to_string(s.closed_dropped); });
  return out.str();
}

}  // namespace fourcolor
