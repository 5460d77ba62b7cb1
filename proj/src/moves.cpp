#include "fourcolor/moves.hpp"

#include <algorithm>

#include "fourcolor/embeddings.hpp"
#include "fourcolor/surfaces.hpp"

namespace fourcolor {

namespace {

using Rows = std::vector<ColoredGraph::Row>;

ColorSet joining_colors(const ColoredGraph& g, Vertex v, Vertex w) {
  ColorSet s;
  for (Color c = 0; c < kNumColors; ++c)
    if (g.neighbor(v, c) == w) s = s.with(c);
  return s;
}

bool connected_rows(const Rows& rows) {
  if (rows.empty()) return false;
  std::vector<char> seen(rows.size(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : rows[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == rows.size();
}

// Drops the listed vertices and renumbers the rest in order.
Rows compact(const Rows& rows, const std::vector<char>& removed) {
  const int n = static_cast<int>(rows.size());
  std::vector<Vertex> map(n, -1);
  int next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) map[v] = next++;
  Rows out;
  out.reserve(next);
  for (Vertex v = 0; v < n; ++v) {
    if (removed[v]) continue;
    ColoredGraph::Row r;
    for (Color c = 0; c < kNumColors; ++c) r[c] = map[rows[v][c]];
    out.push_back(r);
  }
  return out;
}

// Properness of a dipole whose structural conditions already hold.
bool dipole_is_proper(const ColoredGraph& g, Vertex v1, Vertex v2, ColorSet colors,
                      const ThreeResidueSurfaces* surfaces) {
  if (colors.size() > 1) return true;
  const Color c = colors.colors().front();
  const auto s = surfaces ? *surfaces : three_residue_surfaces(g);
  return !s.singular(c, s.index[c][v1]) || !s.singular(c, s.index[c][v2]);
}

}  // namespace

std::optional<Dipole> dipole_at(const ColoredGraph& g, Vertex v1, Vertex v2) {
  if (v1 == v2 || v1 < 0 || v2 < 0 || v1 >= g.order() || v2 >= g.order()) return std::nullopt;
  const ColorSet s = joining_colors(g, v1, v2);
  if (s.empty() || s.size() == 4) return std::nullopt;
  const auto index = residue_index(g, s.complement());
  if (index[v1] == index[v2]) return std::nullopt;
  return Dipole{std::min(v1, v2), std::max(v1, v2), s, dipole_is_proper(g, v1, v2, s, nullptr)};
}

std::vector<Dipole> find_dipoles(const ColoredGraph& g, int h) {
  std::vector<Dipole> out;
  if (h < 1 || h > 3) return out;
  std::array<std::vector<int>, 16> index_cache;
  std::optional<ThreeResidueSurfaces> surfaces;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Color c = 0; c < kNumColors; ++c) {
      const Vertex w = g.neighbor(v, c);
      if (w <= v) continue;
      const ColorSet s = joining_colors(g, v, w);
      // report each pair once, from its smallest joining color
      if (s.size() != h || s.colors().front() != c) continue;
      auto& index = index_cache[s.complement().mask()];
      if (index.empty()) index = residue_index(g, s.complement());
      if (index[v] == index[w]) continue;
      if (h == 1 && !surfaces) surfaces = three_residue_surfaces(g);
      out.push_back({v, w, s, dipole_is_proper(g, v, w, s, surfaces ? &*surfaces : nullptr)});
    }
  }
  return out;
}

bool has_dipole(const ColoredGraph& g, int h) { return !find_dipoles(g, h).empty(); }

MoveResult cancel_dipole(const ColoredGraph& g, const Dipole& d) {
  const auto check = dipole_at(g, d.v1, d.v2);
  if (!check || check->colors != d.colors)
    throw Error(ErrorKind::NotADipole, "vertices " + std::to_string(d.v1) + "," + std::to_string(d.v2) +
                                           " do not form a dipole on colors " + d.colors.to_string());
  Rows rows = g.rows();
  for (Color c : d.colors.complement().colors()) {
    const Vertex a = rows[d.v1][c];
    const Vertex b = rows[d.v2][c];
    rows[a][c] = b;
    rows[b][c] = a;
  }
  std::vector<char> removed(rows.size(), 0);
  removed[d.v1] = removed[d.v2] = 1;
  Rows out = compact(rows, removed);
  if (!connected_rows(out)) throw Error(ErrorKind::WouldDisconnect, "dipole cancellation disconnects the graph");
  return {ColoredGraph::from_rows(std::move(out)), !check->proper};
}

ColoredGraph add_dipole(const ColoredGraph& g, Vertex v, Color color, ColorSet colors) {
  if (colors.empty() || colors.size() > 3)
    throw Error(ErrorKind::BadColors, "dipole colors must have size 1..3, got " + colors.to_string());
  if (colors.contains(color))
    throw Error(ErrorKind::BadColors, "the split edge color " + std::to_string(color) + " lies inside the dipole colors");
  if (v < 0 || v >= g.order()) throw Error(ErrorKind::BadColors, "vertex out of range");
  Rows rows = g.rows();
  const Vertex x = g.order();
  const Vertex y = x + 1;
  rows.push_back({});
  rows.push_back({});
  for (Color c = 0; c < kNumColors; ++c) {
    if (colors.contains(c)) {
      rows[x][c] = y;
      rows[y][c] = x;
    } else {
      const Vertex w = g.neighbor(v, c);
      rows[v][c] = x;
      rows[x][c] = v;
      rows[y][c] = w;
      rows[w][c] = y;
    }
  }
  return ColoredGraph::from_rows(std::move(rows));
}

const char* to_string(SumKind kind) {
  switch (kind) {
    case SumKind::Sphere: return "connected sum";
    case SumKind::Boundary: return "boundary connected sum";
    case SumKind::DoubleBoundary: return "double boundary connected sum";
    case SumKind::Unclassified: return "unclassified";
  }
  return "unclassified";
}

SumResult connected_sum(const ColoredGraph& g1, Vertex v1, const ColoredGraph& g2, Vertex v2,
                        const ColorPermutation& perm2) {
  if (v1 < 0 || v1 >= g1.order() || v2 < 0 || v2 >= g2.order())
    throw Error(ErrorKind::BadColors, "connected sum vertex out of range");
  const ColoredGraph h2 = g2.recolored(perm2);
  const int n1 = g1.order();
  Rows rows = g1.rows();
  for (const auto& r : h2.rows()) {
    ColoredGraph::Row shifted;
    for (Color c = 0; c < kNumColors; ++c) shifted[c] = r[c] + n1;
    rows.push_back(shifted);
  }
  const Vertex w2 = v2 + n1;
  for (Color c = 0; c < kNumColors; ++c) {
    const Vertex a = rows[v1][c];
    const Vertex b = rows[w2][c];
    rows[a][c] = b;
    rows[b][c] = a;
  }
  std::vector<char> removed(rows.size(), 0);
  removed[v1] = removed[w2] = 1;

  const auto s1 = three_residue_surfaces(g1);
  const auto s2 = three_residue_surfaces(h2);
  const ColorSet c1 = vertex_singular_colors(s1, v1);
  const ColorSet c2 = vertex_singular_colors(s2, v2);
  SumKind kind = SumKind::Unclassified;
  if (c1.empty() && c2.empty())
    kind = SumKind::Sphere;
  else if (c1 == c2 && c1.size() == 1)
    kind = SumKind::Boundary;
  else if (c1 == c2 && c1.size() == 2)
    kind = SumKind::DoubleBoundary;
  return {ColoredGraph::from_rows(compact(rows, removed)), kind};
}

namespace {

SwitchResult switch_rows(Rows rows, EdgeRef e1, EdgeRef e2, const ThreeResidueSurfaces& before) {
  if (e1.color != e2.color)
    throw Error(ErrorKind::ColorMismatch, "edge switching needs two edges of one color, got " +
                                              std::to_string(e1.color) + " and " + std::to_string(e2.color));
  const int n = static_cast<int>(rows.size());
  if (e1.v < 0 || e1.v >= n || e2.v < 0 || e2.v >= n) throw Error(ErrorKind::ColorMismatch, "edge out of range");
  const Color d = e1.color;
  const Vertex u1 = e1.v, w1 = rows[u1][d];
  const Vertex u2 = e2.v, w2 = rows[u2][d];
  if (u1 == u2 || u1 == w2)
    throw Error(ErrorKind::ColorMismatch, "edge switching needs two distinct edges");

  // Side conditions: for some c != d the c-hat residues through the edges are
  // singular, and for every other i the i-hat residues through them are ordinary.
  std::optional<Color> sum_color;
  for (Color c = 0; c < kNumColors && !sum_color; ++c) {
    if (c == d) continue;
    if (!before.singular(c, before.index[c][u1]) || !before.singular(c, before.index[c][u2])) continue;
    if (before.index[c][u1] == before.index[c][u2]) continue;
    bool ok = true;
    for (Color i = 0; i < kNumColors; ++i) {
      if (i == c || i == d) continue;
      if (before.singular(i, before.index[i][u1]) || before.singular(i, before.index[i][u2])) ok = false;
    }
    if (ok) sum_color = c;
  }

  rows[u1][d] = u2;
  rows[u2][d] = u1;
  rows[w1][d] = w2;
  rows[w2][d] = w1;
  if (!connected_rows(rows)) throw Error(ErrorKind::WouldDisconnect, "edge switching disconnects the graph");
  return {ColoredGraph::from_rows(std::move(rows)), sum_color};
}

}  // namespace

SwitchResult edge_switch(const ColoredGraph& g1, EdgeRef e1, EdgeRef e2) {
  return switch_rows(g1.rows(), e1, e2, three_residue_surfaces(g1));
}

SwitchResult edge_switch(const ColoredGraph& g1, EdgeRef e1, const ColoredGraph& g2, EdgeRef e2) {
  const int n1 = g1.order();
  Rows rows = g1.rows();
  for (const auto& r : g2.rows()) {
    ColoredGraph::Row shifted;
    for (Color c = 0; c < kNumColors; ++c) shifted[c] = r[c] + n1;
    rows.push_back(shifted);
  }
  // residue data of the disjoint union, assembled per component
  const auto s1 = three_residue_surfaces(g1);
  const auto s2 = three_residue_surfaces(g2);
  ThreeResidueSurfaces both;
  for (Color c = 0; c < kNumColors; ++c) {
    both.index[c] = s1.index[c];
    const int offset = static_cast<int>(s1.surfaces[c].size());
    for (int idx : s2.index[c]) both.index[c].push_back(idx + offset);
    both.surfaces[c] = s1.surfaces[c];
    both.surfaces[c].insert(both.surfaces[c].end(), s2.surfaces[c].begin(), s2.surfaces[c].end());
  }
  return switch_rows(std::move(rows), e1, {e2.v + n1, e2.color}, both);
}

ColoredGraph bisection(const ColoredGraph& g, const Residue& x, Color a, Color b) {
  if (a < 0 || a >= kNumColors || b < 0 || b >= kNumColors || a == b)
    throw Error(ErrorKind::BadColorPair, "bisection needs two distinct colors");
  if (x.colors != ColorSet::hat(a))
    throw Error(ErrorKind::BadColorPair, "residue colors " + x.colors.to_string() + " are not the complement of " +
                                             std::to_string(a));
  if (classify_residue_surface(g, x).is_sphere())
    throw Error(ErrorKind::NotSingular, "bisection requires a singular residue");
  const int n = g.order();
  const int r = x.size();
  std::vector<int> copy(n, -1);
  for (int j = 0; j < r; ++j) copy[x.vertices[j]] = n + j;
  Rows rows = g.rows();
  rows.resize(n + r);
  for (int j = 0; j < r; ++j) {
    const Vertex v = x.vertices[j];
    const Vertex bar = n + j;
    for (Color c = 0; c < kNumColors; ++c) {
      if (c == a) {
        rows[bar][a] = copy[g.neighbor(v, b)];
      } else if (c == b) {
        rows[bar][b] = v;
      } else {
        rows[bar][c] = copy[g.neighbor(v, c)];
      }
    }
    rows[v][b] = bar;
  }
  return ColoredGraph::from_rows(std::move(rows));
}

ColoredGraph reduce_singular_colors(const ColoredGraph& g) {
  ColoredGraph current = g;
  if (singular_colors(current).size() <= 2) return current;
  const CyclicPermutation eps = regular_genus_rho(g).minimizers.front();
  auto clear_color = [&](Color a) {
    const Color b = eps.opposite(a);
    for (;;) {
      const auto s = three_residue_surfaces(current);
      int target = -1;
      for (int i = 0; i < static_cast<int>(s.surfaces[a].size()); ++i)
        if (s.singular(a, i)) {
          target = i;
          break;
        }
      if (target < 0) return;
      Residue x{ColorSet::hat(a), {}};
      for (Vertex v = 0; v < current.order(); ++v)
        if (s.index[a][v] == target) x.vertices.push_back(v);
      current = bisection(current, x, a, b);
    }
  };
  const ColorSet start = singular_colors(current);
  const Color a = start.colors().front();
  clear_color(a);
  const Color b = eps.opposite(a);
  const ColorSet after = singular_colors(current);
  if (after.size() <= 2) return current;
  for (Color c : after.colors()) {
    if (c == a || c == b) continue;
    clear_color(c);
    break;
  }
  return current;
}

}  // namespace fourcolor
