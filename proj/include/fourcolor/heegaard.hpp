#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fourcolor/embeddings.hpp"
#include "fourcolor/graph.hpp"
#include "fourcolor/surfaces.hpp"

namespace fourcolor {

enum class Side { A, B };

// The diagram (S_{i,j}, A, B) of a graph: the surface is built from the faces
// of consecutive colors in (i h j k); A holds the {i,j}-residues and B the
// {h,k}-residues. Every vertex is a crossing of one A-curve and one B-curve.
struct Diagram {
  ColoredGraph graph = ColoredGraph::order_two();
  ColorSet pair;                          // {i,j}
  CyclicPermutation epsilon{0, 1, 2, 3};  // (i h j k)
  SurfaceType surface;
  std::vector<Residue> curves_a;
  std::vector<Residue> curves_b;
  std::vector<Residue> faces;
  std::vector<int> curve_a_of;                // vertex -> index in curves_a
  std::vector<int> curve_b_of;                // vertex -> index in curves_b
  std::vector<std::array<int, 4>> corner_face;  // [v][t]: face between colors e_t and e_{t+1}

  const std::vector<Residue>& curves(Side s) const { return s == Side::A ? curves_a : curves_b; }
  ColorSet colors(Side s) const { return s == Side::A ? pair : pair.complement(); }
  // The two faces bordering the c-edge at v.
  std::array<int, 2> edge_faces(Vertex v, Color c) const;
};

// Throws BadColorPair unless pair has exactly two colors.
Diagram build_diagram(const ColoredGraph& g, ColorSet pair);
// The three diagrams, for the pairs {0,1}, {0,2}, {0,3}.
std::array<Diagram, 3> all_diagrams(const ColoredGraph& g);

struct CutComponent {
  std::vector<int> faces;
  SurfaceType surface;  // after capping the boundary circles
  int boundary_circles = 0;
  int euler_with_boundary = 0;
};

struct CutResult {
  std::vector<CutComponent> components;
  std::vector<int> face_component;

  bool proper() const;   // every component has genus zero
  bool reduced() const;  // one component, or no genus-zero component
};

// Cuts the surface along the curves of `side` flagged in `kept` (indexed like
// d.curves(side)).
CutResult cut_components(const Diagram& d, Side side, const std::vector<bool>& kept);

// The dual graph G(C) of a full curve system: nodes are the cut components,
// each curve is an edge between the components on its two sides.
struct CurveGraph {
  std::vector<CutComponent> nodes;
  std::vector<std::array<int, 2>> edges;  // per curve
  std::vector<bool> positive;             // node has positive genus
};
CurveGraph curve_graph(const Diagram& d, Side side);

// Removal sets (sorted curve indices) of every admissible T: a spanning tree
// of G(C) when no component has positive genus, otherwise a spanning forest
// whose trees each hold exactly one positive-genus component. Stops after
// `limit` sets; `truncated` reports whether more exist.
struct Reductions {
  std::vector<std::vector<int>> removal_sets;
  bool truncated = false;
};
Reductions enumerate_reductions(const Diagram& d, Side side, std::size_t limit = SIZE_MAX);

// Kruskal-style admissible T preferring curves through many vertices.
std::vector<int> greedy_reduction(const Diagram& d, Side side);

struct ReducedDiagram {
  std::vector<bool> kept_a;
  std::vector<bool> kept_b;
  std::vector<Vertex> singular_vertices;
  std::vector<std::vector<int>> regions;  // partition of the faces
  std::vector<int> region_singular;       // distinct singular vertices on each region
  bool proper_a = false;
  bool proper_b = false;
};

ReducedDiagram reduce_diagram(const Diagram& d, const std::vector<int>& removed_a, const std::vector<int>& removed_b);

// n - max n(R) when a kept system is proper, n otherwise.
int reduced_complexity(const ReducedDiagram& rd);

struct PairComplexity {
  ColorSet pair;
  int value = 0;
  bool exhaustive = true;
  std::int64_t evaluated = 0;  // reduction pairs examined
};

struct ComplexityBound {
  int value = 0;
  bool exhaustive = true;
  std::array<PairComplexity, 3> pairs;
};

// Minimum of reduced_complexity over the three diagrams and their reduction
// pairs. A diagram with more than `budget` pairs is sampled (greedy pair plus
// the first `budget` pairs) and marked non-exhaustive.
ComplexityBound modified_complexity_upper_bound(const ColoredGraph& g, std::int64_t budget = 1000000);

}  // namespace fourcolor
