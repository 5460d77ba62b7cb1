#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "fourcolor/error.hpp"

namespace fourcolor {

using Vertex = int;
using Color = int;

inline constexpr int kNumColors = 4;

// A subset of the color set {0,1,2,3}, stored as a bit mask.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors) mask_ |= static_cast<std::uint8_t>(1u << c);
  }

  static constexpr ColorSet from_mask(unsigned mask) {
    ColorSet s;
    s.mask_ = static_cast<std::uint8_t>(mask & 0xFu);
    return s;
  }
  static constexpr ColorSet all() { return from_mask(0xF); }
  // The complement of a single color, written c-hat in the literature.
  static constexpr ColorSet hat(Color c) { return from_mask(0xFu & ~(1u << c)); }

  constexpr bool contains(Color c) const { return (mask_ >> c) & 1u; }
  constexpr int size() const { return __builtin_popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr unsigned mask() const { return mask_; }
  constexpr ColorSet complement() const { return from_mask(~mask_); }
  constexpr ColorSet with(Color c) const { return from_mask(mask_ | (1u << c)); }
  constexpr ColorSet without(Color c) const { return from_mask(mask_ & ~(1u << c)); }

  std::vector<Color> colors() const;
  std::string to_string() const;

  friend constexpr bool operator==(ColorSet, ColorSet) = default;

 private:
  std::uint8_t mask_ = 0;
};

// A permutation of the four colors: perm[c] is the image of color c.
using ColorPermutation = std::array<Color, kNumColors>;

inline constexpr ColorPermutation kIdentityColors{0, 1, 2, 3};

// A regular 4-colored graph: every color is a fixed-point-free involution on
// the vertex set and the union of the four involutions is connected. Parallel
// edges of distinct colors are allowed, loops are not. Vertices are 0-based.
class ColoredGraph {
 public:
  using Row = std::array<Vertex, kNumColors>;

  // Validates the involutions and connectivity; throws Error.
  static ColoredGraph from_involutions(const std::array<std::vector<Vertex>, kNumColors>& inv);
  static ColoredGraph from_rows(std::vector<Row> rows);

  // The order-two graph (two vertices joined by four edges).
  static ColoredGraph order_two();

  int order() const { return static_cast<int>(rows_.size()); }
  Vertex neighbor(Vertex v, Color c) const { return rows_[v][c]; }
  const Row& row(Vertex v) const { return rows_[v]; }
  const std::vector<Row>& rows() const { return rows_; }

  // Same graph with every color c renamed to perm[c].
  ColoredGraph recolored(const ColorPermutation& perm) const;
  // Same graph with vertex v renamed to relabel[v]; relabel must be a bijection.
  ColoredGraph relabeled(const std::vector<Vertex>& relabel) const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  explicit ColoredGraph(std::vector<Row> rows) : rows_(std::move(rows)) {}
  std::vector<Row> rows_;
};

// Checks the involution conditions only (no connectivity); used by moves that
// assemble rows before validating.
void check_involutions(const std::vector<ColoredGraph::Row>& rows);

struct Residue {
  ColorSet colors;
  std::vector<Vertex> vertices;  // sorted ascending

  int size() const { return static_cast<int>(vertices.size()); }
  bool contains(Vertex v) const;
};

// Connected components of the subgraph spanned by the given colors, ordered
// by their smallest vertex.
std::vector<Residue> residues(const ColoredGraph& g, ColorSet colors);
int count_residues(const ColoredGraph& g, ColorSet colors);
// The residue containing v.
Residue residue_of(const ColoredGraph& g, ColorSet colors, Vertex v);

// For each vertex, the index (in residues() order) of its residue.
std::vector<int> residue_index(const ColoredGraph& g, ColorSet colors);

struct ResidueCounts {
  std::array<std::array<int, kNumColors>, kNumColors> pair{};  // g_{i,j}, symmetric
  std::array<int, kNumColors> hat{};                          // g_c: number of c-hat residues

  int g(Color i, Color j) const { return pair[i][j]; }
};
ResidueCounts residue_counts(const ColoredGraph& g);

// True iff the subgraph spanned by the colors has no odd cycle.
bool is_bipartite(const ColoredGraph& g, ColorSet colors);
bool is_bipartite_on(const ColoredGraph& g, ColorSet colors, const std::vector<Vertex>& vertices);

// Bipartite letter code: vertices a,b,c,... and A,B,C,...; color 0 joins the
// j-th lowercase letter to the j-th uppercase one and the letter at position
// p*(i-1)+j gives the i-colored neighbor of the j-th lowercase vertex.
ColoredGraph parse_paper_code(std::string_view text, int p);
std::string emit_paper_code(const ColoredGraph& g);

struct CanonicalCode {
  std::string text;
  int class_m = 4;

  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) { return a.text == b.text; }
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) { return a.text <=> b.text; }
};

// Complete invariant of color-isomorphism (vertex relabeling plus any
// permutation of the colors).
CanonicalCode canonical_code(const ColoredGraph& g);
std::string canonical_text(const ColoredGraph& g);
bool are_isomorphic(const ColoredGraph& a, const ColoredGraph& b);
// Rebuilds the relabeled representative encoded in a canonical code text.
ColoredGraph parse_canonical_code(std::string_view text);

// Plain text format: the order on the first line, then one line per color
// listing the images of vertices 1..n (1-based, whitespace separated).
std::string format_graph_text(const ColoredGraph& g);
// Throws CorruptFile on malformed text, otherwise the validation errors of
// from_rows.
ColoredGraph parse_graph_text(std::string_view text);

}  // namespace fourcolor
