#pragma once

#include <optional>
#include <vector>

#include "fourcolor/graph.hpp"

namespace fourcolor {

// Two vertices joined by exactly the edges of `colors` (h = colors.size()),
// lying in different residues of the complementary colors.
struct Dipole {
  Vertex v1 = 0;
  Vertex v2 = 0;
  ColorSet colors;
  bool proper = true;

  int h() const { return colors.size(); }
  friend bool operator==(const Dipole&, const Dipole&) = default;
};

std::vector<Dipole> find_dipoles(const ColoredGraph& g, int h);
bool has_dipole(const ColoredGraph& g, int h);
// Validates that (v1, v2) is a dipole of g and fills in colors and properness.
std::optional<Dipole> dipole_at(const ColoredGraph& g, Vertex v1, Vertex v2);

struct MoveResult {
  ColoredGraph graph;
  // Set when an improper 1-dipole was cancelled: the result represents the
  // manifold with a tunnel removed.
  bool manifold_changed = false;
};

// Removes the dipole and welds the hanging edges color by color. Remaining
// vertices keep their relative order.
MoveResult cancel_dipole(const ColoredGraph& g, const Dipole& d);

// Inserts a dipole with the given colors at vertex v: two new vertices x, y
// joined by `colors`; every edge of v whose color c is not in `colors` is cut,
// v is joined to x and y to the old c-neighbor of v. For |colors| = 3 this
// splits the single c-edge at v. `color` must lie outside `colors`.
// New vertices get indices order and order+1 (x and y).
ColoredGraph add_dipole(const ColoredGraph& g, Vertex v, Color color, ColorSet colors);

enum class SumKind { Sphere, Boundary, DoubleBoundary, Unclassified };
const char* to_string(SumKind kind);

struct SumResult {
  ColoredGraph graph;
  SumKind kind = SumKind::Unclassified;
};

// Removes v1 and v2 and welds the hanging edges of equal color. The colors of
// g2 are first renamed by `perm2`. Vertices of g1 (minus v1) come first.
SumResult connected_sum(const ColoredGraph& g1, Vertex v1, const ColoredGraph& g2, Vertex v2,
                        const ColorPermutation& perm2 = kIdentityColors);

struct EdgeRef {
  Vertex v = 0;
  Color color = 0;
};

struct SwitchResult {
  ColoredGraph graph;
  // The color c whose c-hat residues through the two edges are summed, when
  // the ordinariness side conditions hold for some c != d.
  std::optional<Color> boundary_sum_color;
};

// Replaces the d-edges {u1, w1} and {u2, w2} by {u1, u2} and {w1, w2}. With
// a second graph both edges are taken in the disjoint union (g2 vertices are
// shifted by g1.order()). Throws ColorMismatch when the colors differ.
SwitchResult edge_switch(const ColoredGraph& g1, EdgeRef e1, EdgeRef e2);
SwitchResult edge_switch(const ColoredGraph& g1, EdgeRef e1, const ColoredGraph& g2, EdgeRef e2);

// Bisection of type (a, b) on the singular a-hat residue x. The new vertices
// copy x (color b replaced by color a among the copies) and are joined to
// their originals by b-edges.
ColoredGraph bisection(const ColoredGraph& g, const Residue& x, Color a, Color b);

// Repeated bisections along a genus-minimizing cyclic order until at most two
// colors are singular.
ColoredGraph reduce_singular_colors(const ColoredGraph& g);

}  // namespace fourcolor
