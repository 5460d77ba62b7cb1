#include "fourcolor/families.hpp"

#include <numeric>

#include "fourcolor/surfaces.hpp"

namespace fourcolor {

namespace {

using Rows = std::vector<ColoredGraph::Row>;

void join(Rows& rows, Vertex a, Vertex b, Color c) {
  rows[a][c] = b;
  rows[b][c] = a;
}

// phi_k = f_k^{-1} o f_0 on the lowercase vertices 0..m-1; f_0(a_i) = A_i
// (vertex m + i), so the k-edge at A_i goes to phi_k(a_i).
void join_by_permutation(Rows& rows, const std::vector<int>& phi, Color k) {
  const int m = static_cast<int>(phi.size());
  for (int i = 0; i < m; ++i) join(rows, m + i, phi[i], k);
}

// The permutation of {0..m-1} given by one cycle (other points fixed).
std::vector<int> from_cycle(int m, const std::vector<int>& cycle) {
  std::vector<int> phi(m);
  std::iota(phi.begin(), phi.end(), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) phi[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return phi;
}

void verify(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadGenus, "family self-check failed: " + what);
}

}  // namespace

ColoredGraph handlebody_graph(int g, bool orientable) {
  if (g < 1) throw Error(ErrorKind::BadGenus, "handlebody genus must be >= 1, got " + std::to_string(g));
  const int m = 2 * g + 1;
  Rows rows(2 * m);
  for (int i = 0; i < m; ++i) join(rows, i, m + i, 0);

  std::vector<int> c1(m), c2, c3(g + 1);
  std::iota(c1.begin(), c1.end(), 0);
  std::iota(c3.begin(), c3.end(), 0);
  // (a_1 a_{2g+1} a_2 a_{2g} ... a_g a_{g+2} a_{g+1}), 0-based
  for (int i = 0; i < g; ++i) {
    c2.push_back(i);
    c2.push_back(2 * g - i);
  }
  c2.push_back(g);
  join_by_permutation(rows, from_cycle(m, c1), 1);
  join_by_permutation(rows, from_cycle(m, c3), 3);
  if (orientable) {
    join_by_permutation(rows, from_cycle(m, c2), 2);
  } else {
    // a_1 - A_{g+1}; a_i - a_{2g+3-i} (i = 2..g+1); A_i - A_{2g+2-i} (i = 1..g)
    join(rows, 0, m + g, 2);
    for (int i = 2; i <= g + 1; ++i) join(rows, i - 1, 2 * g + 3 - i - 1, 2);
    for (int i = 1; i <= g; ++i) join(rows, m + i - 1, m + 2 * g + 2 - i - 1, 2);
  }
  ColoredGraph graph = ColoredGraph::from_rows(std::move(rows));

  const auto boundary = boundary_surfaces(graph);
  verify(boundary.singular_colors == ColorSet{3}, "handlebody must have color 3 as its only singular color");
  verify(boundary.components.size() == 1, "handlebody boundary must be connected");
  const SurfaceType expected =
      orientable ? SurfaceType::orientable_genus(g) : SurfaceType::nonorientable_genus(2 * g);
  verify(boundary.components.front() == expected, "handlebody boundary has the wrong type");
  return graph;
}

std::vector<ColoredGraph::Row> surface_base_graph(int g, bool orientable) {
  if (g < 1) throw Error(ErrorKind::BadGenus, "surface genus must be >= 1, got " + std::to_string(g));
  const int n = orientable ? 2 * (2 * g + 1) : 2 * (g + 1);
  Rows rows(n, ColoredGraph::Row{-1, -1, -1, -1});
  // a cycle alternating colors 1 and 2
  for (Vertex v = 0; v < n; v += 2) {
    join(rows, v, v + 1, 1);
    join(rows, v + 1, (v + 2) % n, 2);
  }
  if (orientable) {
    for (Vertex v = 0; v < n / 2; ++v) join(rows, v, v + n / 2, 0);
  } else {
    // 0 - 2, odd j - j+3 for j = 1..n-5, and n-3 - n-1
    join(rows, 0, 2, 0);
    for (Vertex j = 1; j <= n - 5; j += 2) join(rows, j, j + 3, 0);
    join(rows, n - 3, n - 1, 0);
  }
  return rows;
}

ColoredGraph surface_times_interval_graph(int g, bool orientable) {
  Rows rows = surface_base_graph(g, orientable);
  const int n = static_cast<int>(rows.size());
  for (auto& r : rows) r[3] = r[0];
  ColoredGraph graph = ColoredGraph::from_rows(std::move(rows));

  const auto s = three_residue_surfaces(graph);
  const SurfaceType expected = orientable ? SurfaceType::orientable_genus(g) : SurfaceType::nonorientable_genus(g);
  verify(s.surfaces[3].size() == 1 && s.surfaces[3].front() == expected, "base graph does not represent S_g");
  const auto boundary = boundary_surfaces(s);
  verify(boundary.singular_colors == (ColorSet{0, 3}), "singular colors must be {0,3}");
  verify(boundary.components == std::vector<SurfaceType>(2, expected), "boundary must be two copies of S_g");
  verify(is_contracted(s), "graph must be contracted");
  const auto rc = residue_counts(graph);
  verify(rc.g(0, 1) + rc.g(1, 2) + rc.g(2, 3) + rc.g(0, 3) - n == 3 - n / 2, "chi(S_{0,2}) must be 3 - p/2");
  return graph;
}

}  // namespace fourcolor
