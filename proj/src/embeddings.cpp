#include "fourcolor/embeddings.hpp"

#include <algorithm>
#include <climits>

namespace fourcolor {

const std::array<CyclicPermutation, 3>& CyclicPermutation::all() {
  static const std::array<CyclicPermutation, 3> perms{CyclicPermutation{0, 1, 2, 3}, CyclicPermutation{0, 2, 1, 3},
                                                       CyclicPermutation{0, 1, 3, 2}};
  return perms;
}

bool CyclicPermutation::consecutive(Color a, Color b) const {
  for (int i = 0; i < 4; ++i)
    if (order_[i] == a) return at(i + 1) == b || at(i - 1) == b;
  return false;
}

Color CyclicPermutation::opposite(Color c) const {
  for (int i = 0; i < 4; ++i)
    if (order_[i] == c) return at(i + 2);
  return c;
}

int CyclicPermutation::class_index() const {
  // classes are determined by the partner of color 0
  switch (opposite(0)) {
    case 2: return 0;
    case 1: return 1;
    default: return 2;
  }
}

std::string CyclicPermutation::to_string() const {
  std::string s = "(";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ' ';
    s += static_cast<char>('0' + order_[i]);
  }
  return s + ")";
}

EmbeddingInfo embedding_surface(const ColoredGraph& g, const CyclicPermutation& eps) {
  const auto rc = residue_counts(g);
  int chi = -g.order();
  for (int i = 0; i < 4; ++i) chi += rc.g(eps.at(i), eps.at(i + 1));
  EmbeddingInfo info{eps, SurfaceType::from_euler(chi, is_orientable(g)), false};
  const ColorSet singular = singular_colors(g);
  for (int i = 0; i < 2; ++i)
    if (!singular.contains(eps.at(i)) && !singular.contains(eps.at(i + 2))) info.is_heegaard = true;
  return info;
}

std::array<EmbeddingInfo, 3> all_embeddings(const ColoredGraph& g) {
  const auto& perms = CyclicPermutation::all();
  return {embedding_surface(g, perms[0]), embedding_surface(g, perms[1]), embedding_surface(g, perms[2])};
}

RegularGenus regular_genus_rho(const ColoredGraph& g) {
  RegularGenus out{INT_MAX, {}};
  for (const auto& info : all_embeddings(g)) {
    if (info.surface.genus < out.genus) {
      out.genus = info.surface.genus;
      out.minimizers.clear();
    }
    if (info.surface.genus == out.genus) out.minimizers.push_back(info.permutation);
  }
  return out;
}

int boundary_genus_lower_bound(const BoundaryProfile& boundary, bool orientable_manifold) {
  std::vector<int> weights;
  for (const auto& s : boundary.components) weights.push_back(orientable_manifold ? s.genus : 2 - s.euler);
  const int h = static_cast<int>(weights.size());
  if (h == 0) return 0;
  if (h > 24) throw Error(ErrorKind::BudgetExceeded, "too many boundary components for exhaustive partitioning");
  int best = INT_MAX;
  for (unsigned mask = 0; mask < (1u << h); ++mask) {
    int left = 0, right = 0;
    for (int i = 0; i < h; ++i) ((mask >> i) & 1u ? left : right) += weights[i];
    best = std::min(best, std::max(left, right));
  }
  return best;
}

int boundary_genus_lower_bound(const ColoredGraph& g) {
  return boundary_genus_lower_bound(boundary_surfaces(g), is_orientable(g));
}

}  // namespace fourcolor
