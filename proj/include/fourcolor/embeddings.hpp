#pragma once

#include <array>
#include <string>
#include <vector>

#include "fourcolor/graph.hpp"
#include "fourcolor/surfaces.hpp"

namespace fourcolor {

// Cyclic order (e0 e1 e2 e3) of the colors, identified with its inverse.
class CyclicPermutation {
 public:
  constexpr CyclicPermutation(Color e0, Color e1, Color e2, Color e3) : order_{e0, e1, e2, e3} {}

  // The three classes of cyclic orders: (0 1 2 3), (0 2 1 3), (0 1 3 2).
  static const std::array<CyclicPermutation, 3>& all();

  Color at(int i) const { return order_[((i % 4) + 4) % 4]; }
  bool consecutive(Color a, Color b) const;
  // The color opposite to c, i.e. the one not consecutive to it.
  Color opposite(Color c) const;
  // The third class index in all() equivalent to this order (0..2).
  int class_index() const;
  std::string to_string() const;

  friend bool operator==(const CyclicPermutation& a, const CyclicPermutation& b) {
    return a.class_index() == b.class_index();
  }

 private:
  std::array<Color, 4> order_;
};

struct EmbeddingInfo {
  CyclicPermutation permutation{0, 1, 2, 3};
  SurfaceType surface;
  // Some pair of non-singular colors is non-consecutive in the order.
  bool is_heegaard = false;
};

// chi(S_e) = sum over i of g_{e_i, e_{i+1}} - #vertices; orientable iff bipartite.
EmbeddingInfo embedding_surface(const ColoredGraph& g, const CyclicPermutation& eps);
std::array<EmbeddingInfo, 3> all_embeddings(const ColoredGraph& g);

struct RegularGenus {
  int genus = 0;
  std::vector<CyclicPermutation> minimizers;
};
RegularGenus regular_genus_rho(const ColoredGraph& g);

// min over 2-partitions of the boundary components of the larger summed
// genus, in the units of the embedding genus: for orientable M the genus of
// each component, for non-orientable M the quantity 2 - chi.
int boundary_genus_lower_bound(const ColoredGraph& g);
int boundary_genus_lower_bound(const BoundaryProfile& boundary, bool orientable_manifold);

}  // namespace fourcolor
