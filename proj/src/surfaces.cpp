#include "fourcolor/surfaces.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fourcolor {

SurfaceType SurfaceType::from_euler(int euler, bool orientable) {
  if (orientable) {
    if (euler > 2 || (2 - euler) % 2 != 0)
      throw Error(ErrorKind::BadGenus, "no orientable surface has Euler characteristic " + std::to_string(euler));
    return {true, (2 - euler) / 2, euler};
  }
  if (euler > 1)
    throw Error(ErrorKind::BadGenus, "no non-orientable surface has Euler characteristic " + std::to_string(euler));
  return {false, 2 - euler, euler};
}

std::string SurfaceType::name() const {
  if (orientable) {
    if (genus == 0) return "sphere";
    if (genus == 1) return "torus";
    return "orientable genus-" + std::to_string(genus) + " surface";
  }
  if (genus == 1) return "projective plane";
  if (genus == 2) return "Klein bottle";
  return "non-orientable genus-" + std::to_string(genus) + " surface";
}

SurfaceType classify_residue_surface(const ColoredGraph& g, const Residue& r) {
  if (r.colors.size() != 3)
    throw Error(ErrorKind::WrongArity, "surface classification needs a 3-residue, got colors " + r.colors.to_string());
  const auto cols = r.colors.colors();
  int faces = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      const auto index = residue_index(g, ColorSet{cols[a], cols[b]});
      std::vector<int> ids;
      for (Vertex v : r.vertices) ids.push_back(index[v]);
      std::sort(ids.begin(), ids.end());
      faces += static_cast<int>(std::unique(ids.begin(), ids.end()) - ids.begin());
    }
  }
  const int q = r.size() / 2;
  return SurfaceType::from_euler(faces - q, is_bipartite_on(g, r.colors, r.vertices));
}

ThreeResidueSurfaces three_residue_surfaces(const ColoredGraph& g) {
  const int n = g.order();
  ThreeResidueSurfaces out;
  std::array<std::array<std::vector<int>, kNumColors>, kNumColors> pair_index;
  for (Color i = 0; i < kNumColors; ++i)
    for (Color j = i + 1; j < kNumColors; ++j) pair_index[i][j] = residue_index(g, ColorSet{i, j});

  std::vector<char> seen;
  for (Color c = 0; c < kNumColors; ++c) {
    const ColorSet hat = ColorSet::hat(c);
    out.index[c] = residue_index(g, hat);
    const auto& idx = out.index[c];
    const int count = *std::max_element(idx.begin(), idx.end()) + 1;
    std::vector<int> faces(count, 0), verts(count, 0);
    for (Vertex v = 0; v < n; ++v) ++verts[idx[v]];
    for (Color i = 0; i < kNumColors; ++i) {
      for (Color j = i + 1; j < kNumColors; ++j) {
        if (i == c || j == c) continue;
        const auto& pidx = pair_index[i][j];
        seen.assign(n, 0);
        for (Vertex v = 0; v < n; ++v) {
          if (!seen[pidx[v]]) {
            seen[pidx[v]] = 1;
            ++faces[idx[v]];
          }
        }
      }
    }
    // bipartiteness per residue
    std::vector<int> side(n, -1);
    std::vector<char> bip(count, 1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
      if (side[s] >= 0) continue;
      side[s] = 0;
      stack.push_back(s);
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Color k = 0; k < kNumColors; ++k) {
          if (k == c) continue;
          const Vertex w = g.neighbor(v, k);
          if (side[w] < 0) {
            side[w] = 1 - side[v];
            stack.push_back(w);
          } else if (side[w] == side[v]) {
            bip[idx[v]] = 0;
          }
        }
      }
    }
    out.surfaces[c].resize(count);
    for (int r = 0; r < count; ++r) out.surfaces[c][r] = SurfaceType::from_euler(faces[r] - verts[r] / 2, bip[r]);
  }
  return out;
}

int BoundaryProfile::euler() const {
  int sum = 0;
  for (const auto& s : components) sum += s.euler;
  return sum;
}

std::string BoundaryProfile::describe() const {
  if (components.empty()) return "empty";
  std::vector<std::pair<SurfaceType, int>> groups;
  for (const auto& s : components) {
    if (!groups.empty() && groups.back().first == s)
      ++groups.back().second;
    else
      groups.emplace_back(s, 1);
  }
  std::string out;
  for (const auto& [s, k] : groups) {
    if (!out.empty()) out += " + ";
    out += std::to_string(k) + " × " + s.name();
  }
  return out;
}

BoundaryProfile boundary_surfaces(const ThreeResidueSurfaces& s) {
  BoundaryProfile profile;
  for (Color c = 0; c < kNumColors; ++c) {
    for (const auto& surf : s.surfaces[c]) {
      if (!surf.is_sphere()) {
        profile.components.push_back(surf);
        profile.singular_colors = profile.singular_colors.with(c);
      }
    }
  }
  std::sort(profile.components.begin(), profile.components.end());
  return profile;
}

BoundaryProfile boundary_surfaces(const ColoredGraph& g) { return boundary_surfaces(three_residue_surfaces(g)); }

ColorSet singular_colors(const ColoredGraph& g) { return boundary_surfaces(g).singular_colors; }

ColorSet vertex_singular_colors(const ThreeResidueSurfaces& s, Vertex v) {
  ColorSet out;
  for (Color c = 0; c < kNumColors; ++c)
    if (s.singular(c, s.index[c][v])) out = out.with(c);
  return out;
}

int vertex_boundary_order(const ThreeResidueSurfaces& s, Vertex v) { return vertex_singular_colors(s, v).size(); }

int vertex_boundary_order(const ColoredGraph& g, Vertex v) {
  return vertex_boundary_order(three_residue_surfaces(g), v);
}

namespace {

bool c_contracted(const ThreeResidueSurfaces& s, Color c) {
  const auto& surfs = s.surfaces[c];
  if (surfs.size() == 1) return true;
  return std::none_of(surfs.begin(), surfs.end(), [](const SurfaceType& t) { return t.is_sphere(); });
}

}  // namespace

bool is_contracted(const ThreeResidueSurfaces& s) {
  for (Color c = 0; c < kNumColors; ++c)
    if (!c_contracted(s, c)) return false;
  return true;
}

bool is_c_contracted(const ColoredGraph& g, Color c) { return c_contracted(three_residue_surfaces(g), c); }

bool is_contracted(const ColoredGraph& g) { return is_contracted(three_residue_surfaces(g)); }

int bipartiteness_class(const ColoredGraph& g) {
  if (is_bipartite(g, ColorSet::all())) return 4;
  for (Color c = 0; c < kNumColors; ++c)
    if (!is_bipartite(g, ColorSet::hat(c))) return 2;
  return 3;
}

int manifold_euler_characteristic(const ColoredGraph& g) {
  const auto rc = residue_counts(g);
  int sum = 0;
  for (Color i = 0; i < kNumColors; ++i)
    for (Color j = i + 1; j < kNumColors; ++j) sum += rc.g(i, j);
  const auto s = three_residue_surfaces(g);
  int ordinary = 0;
  for (Color c = 0; c < kNumColors; ++c)
    for (const auto& t : s.surfaces[c]) ordinary += t.is_sphere();
  return sum - g.order() - ordinary;
}

bool is_closed(const ColoredGraph& g) { return boundary_surfaces(g).closed(); }

bool is_orientable(const ColoredGraph& g) { return is_bipartite(g, ColorSet::all()); }

std::string invariant_report(const ColoredGraph& g) {
  const auto rc = residue_counts(g);
  const auto s = three_residue_surfaces(g);
  const auto boundary = boundary_surfaces(s);
  std::ostringstream out;
  out << "order: " << g.order() << '\n';
  out << "code: " << canonical_text(g) << '\n';
  out << "bipartiteness class: " << bipartiteness_class(g) << '\n';
  out << "orientable: " << (is_orientable(g) ? "yes" : "no") << '\n';
  out << "closed: " << (boundary.closed() ? "yes" : "no") << '\n';
  out << "contracted: " << (is_contracted(s) ? "yes" : "no") << '\n';
  out << "residues g_ij:";
  for (Color i = 0; i < kNumColors; ++i)
    for (Color j = i + 1; j < kNumColors; ++j) out << " g" << i << j << '=' << rc.g(i, j);
  out << '\n';
  out << "residues g_c:";
  for (Color c = 0; c < kNumColors; ++c) out << " g" << c << '=' << rc.hat[c];
  out << '\n';
  out << "singular colors: " << boundary.singular_colors.to_string() << '\n';
  out << "boundary: " << boundary.describe() << '\n';
  out << "euler characteristic: " << manifold_euler_characteristic(g) << '\n';
  return out.str();
}

}  // namespace fourcolor
