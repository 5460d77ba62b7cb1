#pragma once

#include <array>
#include <string>
#include <vector>

#include "fourcolor/graph.hpp"

namespace fourcolor {

// Closed connected surface. For orientable surfaces genus is the number of
// handles (euler = 2 - 2 genus); for non-orientable ones it is the number of
// cross-caps (euler = 2 - genus, Klein bottle = 2).
struct SurfaceType {
  bool orientable = true;
  int genus = 0;
  int euler = 2;

  // Throws BadGenus when the Euler characteristic is incompatible with the
  // orientability (odd for orientable, >= 2 for non-orientable).
  static SurfaceType from_euler(int euler, bool orientable);
  static SurfaceType orientable_genus(int g) { return from_euler(2 - 2 * g, true); }
  static SurfaceType nonorientable_genus(int k) { return from_euler(2 - k, false); }

  bool is_sphere() const { return orientable && genus == 0; }
  bool is_torus() const { return orientable && genus == 1; }
  std::string name() const;

  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
  friend auto operator<=>(const SurfaceType&, const SurfaceType&) = default;
};

// Classifies a 3-residue by chi = F - q (2q vertices, F bicolored cycles) and
// bipartiteness. Throws WrongArity unless the residue has exactly 3 colors.
SurfaceType classify_residue_surface(const ColoredGraph& g, const Residue& r);

// Surfaces of all 3-residues, grouped by the missing color c.
struct ThreeResidueSurfaces {
  std::array<std::vector<int>, kNumColors> index;             // vertex -> residue number within c-hat
  std::array<std::vector<SurfaceType>, kNumColors> surfaces;  // residue number -> surface

  bool singular(Color c, int residue) const { return !surfaces[c][residue].is_sphere(); }
};
ThreeResidueSurfaces three_residue_surfaces(const ColoredGraph& g);

struct BoundaryProfile {
  std::vector<SurfaceType> components;  // sorted
  ColorSet singular_colors;

  bool closed() const { return components.empty(); }
  int euler() const;
  // e.g. "3 × torus" or "1 × Klein bottle + 2 × projective plane"; "empty" when closed.
  std::string describe() const;

  friend bool operator==(const BoundaryProfile&, const BoundaryProfile&) = default;
};

ColorSet singular_colors(const ColoredGraph& g);
BoundaryProfile boundary_surfaces(const ColoredGraph& g);
BoundaryProfile boundary_surfaces(const ThreeResidueSurfaces& s);

// Number of singular 3-residues containing v (0 for internal vertices).
int vertex_boundary_order(const ColoredGraph& g, Vertex v);
int vertex_boundary_order(const ThreeResidueSurfaces& s, Vertex v);
// The colors c whose c-hat residue through v is singular.
ColorSet vertex_singular_colors(const ThreeResidueSurfaces& s, Vertex v);

bool is_c_contracted(const ColoredGraph& g, Color c);
bool is_contracted(const ColoredGraph& g);
bool is_contracted(const ThreeResidueSurfaces& s);

// m in {2,3,4}: 4 when the graph is bipartite, 3 when only some 4-residue
// (the whole graph) fails, 2 when some 3-residue is non-bipartite.
int bipartiteness_class(const ColoredGraph& g);

// chi(M) = sum of g_{i,j} - #vertices - #ordinary 3-residues.
int manifold_euler_characteristic(const ColoredGraph& g);

bool is_closed(const ColoredGraph& g);
bool is_orientable(const ColoredGraph& g);

// One "key: value" line per invariant.
std::string invariant_report(const ColoredGraph& g);

}  // namespace fourcolor
