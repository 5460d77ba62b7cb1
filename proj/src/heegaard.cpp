#include "fourcolor/heegaard.hpp"

#include <algorithm>
#include <numeric>

namespace fourcolor {

namespace {

struct UnionFind {
  std::vector<int> parent;
  std::vector<int> parity;  // relative to the parent

  explicit UnionFind(int n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    int p = 0;
    int r = x;
    while (parent[r] != r) {
      p ^= parity[r];
      r = parent[r];
    }
    // path compression keeping parities
    int q = p;
    while (parent[x] != r) {
      const int next = parent[x];
      const int px = parity[x];
      parent[x] = r;
      parity[x] = q;
      q ^= px;
      x = next;
    }
    return r;
  }
  int parity_of(int x) {
    int p = 0;
    while (parent[x] != x) {
      p ^= parity[x];
      x = parent[x];
    }
    return p;
  }
  bool unite(int a, int b) { return unite_with_parity(a, b, 0) != 0; }
  // Returns 0 if already joined consistently, 1 if newly joined, -1 on a
  // parity conflict.
  int unite_with_parity(int a, int b, int rel) {
    const int pa = parity_of(a), pb = parity_of(b);
    const int ra = find(a), rb = find(b);
    if (ra == rb) return (pa ^ pb) == rel ? 0 : -1;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ rel;
    return 1;
  }
};

int edge_key(const ColoredGraph& g, Vertex v, Color c) { return std::min(v, g.neighbor(v, c)) * kNumColors + c; }

struct FaceGeometry {
  // sign of the traversal of edge key in slot 0/1 by its face's canonical walk
  std::vector<std::array<int, 2>> sign;
};

int position(const CyclicPermutation& eps, Color c) {
  for (int t = 0; t < 4; ++t)
    if (eps.at(t) == c) return t;
  return -1;
}

// Slot of an edge's face: 0 for the corner (c, next), 1 for (previous, c).
std::array<int, 2> edge_corners(const CyclicPermutation& eps, Color c) {
  const int t = position(eps, c);
  return {t, (t + 3) % 4};
}

FaceGeometry face_geometry(const Diagram& d) {
  const auto& g = d.graph;
  FaceGeometry geo;
  geo.sign.assign(static_cast<std::size_t>(g.order()) * kNumColors, {0, 0});
  for (int t = 0; t < 4; ++t) {
    const Color a = d.epsilon.at(t), b = d.epsilon.at(t + 1);
    const Color l = std::min(a, b), m = std::max(a, b);
    for (std::size_t f = 0; f < d.faces.size(); ++f) {
      if (d.faces[f].colors != ColorSet{a, b}) continue;
      const Vertex s = d.faces[f].vertices.front();
      Vertex v = s;
      do {
        for (Color c : {l, m}) {
          const Vertex w = g.neighbor(v, c);
          const int slot = position(d.epsilon, c) == t ? 0 : 1;
          geo.sign[edge_key(g, v, c)][slot] = v < w ? 1 : -1;
          v = w;
        }
      } while (v != s);
    }
  }
  return geo;
}

// Cut along the edges flagged in `cut` (indexed by edge key).
CutResult analyze_cut(const Diagram& d, const std::vector<char>& cut, bool want_surfaces) {
  const auto& g = d.graph;
  const int n = g.order();
  const int nf = static_cast<int>(d.faces.size());
  UnionFind faces(nf);
  FaceGeometry geo;
  if (want_surfaces) geo = face_geometry(d);
  std::vector<char> conflict_root(nf, 0);
  std::vector<std::pair<int, int>> conflicts;
  for (Vertex v = 0; v < n; ++v)
    for (Color c = 0; c < kNumColors; ++c) {
      if (g.neighbor(v, c) < v) continue;
      const int key = edge_key(g, v, c);
      if (cut[key]) continue;
      const auto f = d.edge_faces(v, c);
      if (want_surfaces) {
        const int rel = geo.sign[key][0] == geo.sign[key][1] ? 1 : 0;
        if (faces.unite_with_parity(f[0], f[1], rel) < 0) conflicts.emplace_back(f[0], f[1]);
      } else {
        faces.unite(f[0], f[1]);
      }
    }

  CutResult out;
  out.face_component.assign(nf, -1);
  std::vector<int> root_comp(nf, -1);
  for (int f = 0; f < nf; ++f) {
    const int r = faces.find(f);
    if (root_comp[r] < 0) {
      root_comp[r] = static_cast<int>(out.components.size());
      out.components.emplace_back();
    }
    out.face_component[f] = root_comp[r];
    out.components[root_comp[r]].faces.push_back(f);
  }
  if (!want_surfaces) return out;

  const std::size_t k = out.components.size();
  std::vector<int> vcount(k, 0), ecount(k, 0);
  std::vector<char> orientable(k, 1);
  for (auto [a, b] : conflicts) orientable[out.face_component[a]] = 0;

  // vertex copies: corners at v joined across uncut edges
  auto is_cut = [&](Vertex v, Color c) { return cut[edge_key(g, v, c)] != 0; };
  std::vector<std::array<int, 4>> corner_group(n);
  for (Vertex v = 0; v < n; ++v) {
    std::array<int, 4> grp{0, 1, 2, 3};
    // corner t-1 and t share the edge of color e_t
    for (int t = 0; t < 4; ++t)
      if (!is_cut(v, d.epsilon.at(t))) {
        const int from = grp[(t + 3) % 4], to = grp[t];
        for (int& x : grp)
          if (x == from) x = to;
      }
    corner_group[v] = grp;
    std::array<bool, 4> counted{};
    for (int t = 0; t < 4; ++t)
      if (!counted[grp[t]]) {
        counted[grp[t]] = true;
        ++vcount[out.face_component[d.corner_face[v][t]]];
      }
  }
  // boundary circles: nodes are vertex copies, arcs are sides of cut edges
  UnionFind boundary(n * 4);
  std::vector<char> on_boundary(static_cast<std::size_t>(n) * 4, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Color c = 0; c < kNumColors; ++c) {
      const Vertex w = g.neighbor(v, c);
      if (w < v) continue;
      const auto f = d.edge_faces(v, c);
      if (!is_cut(v, c)) {
        ++ecount[out.face_component[f[0]]];
        continue;
      }
      const auto corners = edge_corners(d.epsilon, c);
      for (int s = 0; s < 2; ++s) {
        ++ecount[out.face_component[f[s]]];
        const int a = v * 4 + corner_group[v][corners[s]];
        const int b = w * 4 + corner_group[w][corners[s]];
        on_boundary[a] = on_boundary[b] = 1;
        boundary.unite(a, b);
      }
    }
  std::vector<int> circles(k, 0);
  for (Vertex v = 0; v < n; ++v)
    for (int t = 0; t < 4; ++t) {
      const int node = v * 4 + t;
      if (!on_boundary[node] || corner_group[v][t] != t || boundary.find(node) != node) continue;
      ++circles[out.face_component[d.corner_face[v][t]]];
    }
  for (std::size_t c = 0; c < k; ++c) {
    auto& comp = out.components[c];
    comp.euler_with_boundary = vcount[c] - ecount[c] + static_cast<int>(comp.faces.size());
    comp.boundary_circles = circles[c];
    comp.surface = SurfaceType::from_euler(comp.euler_with_boundary + circles[c], orientable[c] != 0);
  }
  return out;
}

std::vector<char> cut_edges(const Diagram& d, Side side, const std::vector<bool>& kept) {
  const auto& g = d.graph;
  std::vector<char> cut(static_cast<std::size_t>(g.order()) * kNumColors, 0);
  const auto& of = side == Side::A ? d.curve_a_of : d.curve_b_of;
  for (Vertex v = 0; v < g.order(); ++v)
    for (Color c : d.colors(side).colors())
      if (kept[of[v]]) cut[edge_key(g, v, c)] = 1;
  return cut;
}

// Admissible T's are the spanning trees of G(C) with every positive-genus
// node merged into one root.
struct TreeProblem {
  int nodes = 0;
  std::vector<std::array<int, 2>> edges;  // loops removed
  std::vector<int> curve;                 // original curve index per edge
};

TreeProblem tree_problem(const CurveGraph& cg) {
  TreeProblem tp;
  std::vector<int> map(cg.nodes.size(), -1);
  bool any_positive = false;
  for (std::size_t i = 0; i < cg.nodes.size(); ++i)
    if (cg.positive[i]) any_positive = true;
  if (any_positive) tp.nodes = 1;
  for (std::size_t i = 0; i < cg.nodes.size(); ++i) map[i] = cg.positive[i] ? 0 : tp.nodes++;
  for (std::size_t e = 0; e < cg.edges.size(); ++e) {
    const int a = map[cg.edges[e][0]], b = map[cg.edges[e][1]];
    if (a == b) continue;
    tp.edges.push_back({a, b});
    tp.curve.push_back(static_cast<int>(e));
  }
  return tp;
}

bool connected_with(const TreeProblem& tp, const std::vector<char>& allowed) {
  UnionFind uf(tp.nodes);
  int comps = tp.nodes;
  for (std::size_t e = 0; e < tp.edges.size(); ++e)
    if (allowed[e] && uf.unite(tp.edges[e][0], tp.edges[e][1])) --comps;
  return comps <= 1;
}

void spanning_trees(const TreeProblem& tp, std::size_t e, UnionFind uf, int joined, std::vector<char>& allowed,
                    std::vector<int>& chosen, std::size_t limit, Reductions& out) {
  if (out.truncated) return;
  if (joined == tp.nodes - 1) {
    if (out.removal_sets.size() >= limit) {
      out.truncated = true;
      return;
    }
    std::vector<int> set;
    for (int idx : chosen) set.push_back(tp.curve[idx]);
    std::sort(set.begin(), set.end());
    out.removal_sets.push_back(std::move(set));
    return;
  }
  if (e == tp.edges.size()) return;
  const int a = tp.edges[e][0], b = tp.edges[e][1];
  if (uf.find(a) != uf.find(b)) {
    UnionFind next = uf;
    next.unite(a, b);
    chosen.push_back(static_cast<int>(e));
    spanning_trees(tp, e + 1, next, joined + 1, allowed, chosen, limit, out);
    chosen.pop_back();
  }
  // skip e when the remaining edges still connect everything
  allowed[e] = 0;
  if (connected_with(tp, allowed)) spanning_trees(tp, e + 1, uf, joined, allowed, chosen, limit, out);
  allowed[e] = 1;
}

}  // namespace

std::array<int, 2> Diagram::edge_faces(Vertex v, Color c) const {
  const auto corners = edge_corners(epsilon, c);
  return {corner_face[v][corners[0]], corner_face[v][corners[1]]};
}

bool CutResult::proper() const {
  return std::all_of(components.begin(), components.end(), [](const CutComponent& c) { return c.surface.genus == 0; });
}

bool CutResult::reduced() const {
  return components.size() == 1 ||
         std::none_of(components.begin(), components.end(), [](const CutComponent& c) { return c.surface.genus == 0; });
}

Diagram build_diagram(const ColoredGraph& g, ColorSet pair) {
  if (pair.size() != 2) throw Error(ErrorKind::BadColorPair, "a diagram needs two colors, got " + pair.to_string());
  const auto ij = pair.colors();
  const auto hk = pair.complement().colors();
  Diagram d;
  d.graph = g;
  d.pair = pair;
  d.epsilon = CyclicPermutation(ij[0], hk[0], ij[1], hk[1]);
  d.curves_a = residues(g, pair);
  d.curves_b = residues(g, pair.complement());
  d.curve_a_of = residue_index(g, pair);
  d.curve_b_of = residue_index(g, pair.complement());
  d.corner_face.assign(g.order(), {-1, -1, -1, -1});
  for (int t = 0; t < 4; ++t) {
    const ColorSet colors{d.epsilon.at(t), d.epsilon.at(t + 1)};
    const int offset = static_cast<int>(d.faces.size());
    const auto idx = residue_index(g, colors);
    for (Vertex v = 0; v < g.order(); ++v) d.corner_face[v][t] = offset + idx[v];
    for (auto& r : residues(g, colors)) d.faces.push_back(std::move(r));
  }
  d.surface = SurfaceType::from_euler(static_cast<int>(d.faces.size()) - g.order(), is_bipartite(g, ColorSet::all()));
  return d;
}

std::array<Diagram, 3> all_diagrams(const ColoredGraph& g) {
  return {build_diagram(g, {0, 1}), build_diagram(g, {0, 2}), build_diagram(g, {0, 3})};
}

CutResult cut_components(const Diagram& d, Side side, const std::vector<bool>& kept) {
  if (kept.size() != d.curves(side).size())
    throw Error(ErrorKind::BadLength, "kept flags must match the number of curves");
  return analyze_cut(d, cut_edges(d, side, kept), true);
}

CurveGraph curve_graph(const Diagram& d, Side side) {
  const auto& curves = d.curves(side);
  const auto cut = cut_components(d, side, std::vector<bool>(curves.size(), true));
  CurveGraph cg;
  cg.nodes = cut.components;
  for (const auto& c : cg.nodes) cg.positive.push_back(c.surface.genus > 0);
  const Color color = d.colors(side).colors().front();
  for (const auto& curve : curves) {
    const auto f = d.edge_faces(curve.vertices.front(), color);
    cg.edges.push_back({cut.face_component[f[0]], cut.face_component[f[1]]});
  }
  return cg;
}

Reductions enumerate_reductions(const Diagram& d, Side side, std::size_t limit) {
  const auto tp = tree_problem(curve_graph(d, side));
  Reductions out;
  std::vector<char> allowed(tp.edges.size(), 1);
  std::vector<int> chosen;
  spanning_trees(tp, 0, UnionFind(tp.nodes), 0, allowed, chosen, limit, out);
  return out;
}

std::vector<int> greedy_reduction(const Diagram& d, Side side) {
  const auto tp = tree_problem(curve_graph(d, side));
  const auto& curves = d.curves(side);
  std::vector<int> order(tp.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return curves[tp.curve[a]].size() > curves[tp.curve[b]].size();
  });
  UnionFind uf(tp.nodes);
  std::vector<int> removed;
  for (int e : order)
    if (uf.unite(tp.edges[e][0], tp.edges[e][1])) removed.push_back(tp.curve[e]);
  std::sort(removed.begin(), removed.end());
  return removed;
}

ReducedDiagram reduce_diagram(const Diagram& d, const std::vector<int>& removed_a, const std::vector<int>& removed_b) {
  const auto& g = d.graph;
  ReducedDiagram rd;
  rd.kept_a.assign(d.curves_a.size(), true);
  rd.kept_b.assign(d.curves_b.size(), true);
  for (int c : removed_a) rd.kept_a.at(c) = false;
  for (int c : removed_b) rd.kept_b.at(c) = false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (rd.kept_a[d.curve_a_of[v]] && rd.kept_b[d.curve_b_of[v]]) rd.singular_vertices.push_back(v);

  auto cut = cut_edges(d, Side::A, rd.kept_a);
  const auto cut_b = cut_edges(d, Side::B, rd.kept_b);
  for (std::size_t k = 0; k < cut.size(); ++k) cut[k] |= cut_b[k];
  const auto regions = analyze_cut(d, cut, false);
  for (const auto& comp : regions.components) rd.regions.push_back(comp.faces);
  rd.region_singular.assign(rd.regions.size(), 0);
  for (Vertex v : rd.singular_vertices) {
    std::array<int, 4> seen{-1, -1, -1, -1};
    for (int t = 0; t < 4; ++t) {
      const int r = regions.face_component[d.corner_face[v][t]];
      if (std::find(seen.begin(), seen.end(), r) == seen.end()) {
        seen[t] = r;
        ++rd.region_singular[r];
      }
    }
  }
  rd.proper_a = cut_components(d, Side::A, rd.kept_a).proper();
  rd.proper_b = cut_components(d, Side::B, rd.kept_b).proper();
  return rd;
}

int reduced_complexity(const ReducedDiagram& rd) {
  const int n = static_cast<int>(rd.singular_vertices.size());
  if (!rd.proper_a && !rd.proper_b) return n;
  int best = 0;
  for (int x : rd.region_singular) best = std::max(best, x);
  return n - best;
}

ComplexityBound modified_complexity_upper_bound(const ColoredGraph& g, std::int64_t budget) {
  if (budget < 1) budget = 1;
  ComplexityBound out;
  const auto diagrams = all_diagrams(g);
  for (int p = 0; p < 3; ++p) {
    const Diagram& d = diagrams[p];
    PairComplexity pc;
    pc.pair = d.pair;
    pc.value = g.order();
    const auto limit = static_cast<std::size_t>(budget);
    const auto ra = enumerate_reductions(d, Side::A, limit);
    const auto rb = enumerate_reductions(d, Side::B, limit);
    const auto total = static_cast<long double>(ra.removal_sets.size()) * rb.removal_sets.size();
    pc.exhaustive = !ra.truncated && !rb.truncated && total <= static_cast<long double>(budget);
    auto consider = [&](const std::vector<int>& a, const std::vector<int>& b) {
      pc.value = std::min(pc.value, reduced_complexity(reduce_diagram(d, a, b)));
      ++pc.evaluated;
    };
    if (!pc.exhaustive) consider(greedy_reduction(d, Side::A), greedy_reduction(d, Side::B));
    for (const auto& a : ra.removal_sets) {
      for (const auto& b : rb.removal_sets) {
        if (!pc.exhaustive && pc.evaluated > budget) break;
        consider(a, b);
      }
      if (!pc.exhaustive && pc.evaluated > budget) break;
    }
    out.pairs[p] = pc;
  }
  out.value = out.pairs[0].value;
  for (const auto& pc : out.pairs) {
    out.value = std::min(out.value, pc.value);
    out.exhaustive = out.exhaustive && pc.exhaustive;
  }
  return out;
}

}  // namespace fourcolor
