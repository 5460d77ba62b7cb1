#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fourcolor/graph.hpp"

namespace fourcolor {

// A word is a sequence of nonzero signed generator numbers: +k is the k-th
// generator (1-based), -k its inverse.
using Word = std::vector<int>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int rank() const { return static_cast<int>(generators.size()); }
  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

struct AbelianInvariants {
  int rank = 0;
  std::vector<std::int64_t> torsion;  // each entry >= 2 and divides the next

  std::string to_string() const;  // e.g. "Z^3", "Z/2", "1", "Z + Z/2 + Z/4"
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

Word free_reduce(const Word& w);

// One generator per c-edge (oriented from its smaller to its larger vertex);
// one relator per {i,c}-residue for each i != c, read from the residue's
// smallest vertex starting along its c-edge.
GroupPresentation c_group(const ColoredGraph& g, Color c);

// Generators are the edges outside a breadth-first spanning tree from vertex
// 0; relators are all bicolored residues.
GroupPresentation spanning_tree_presentation(const ColoredGraph& g);

// c-group of a non-singular color c plus relators killing the c-edges of a
// spanning tree of the quotient graph on the c-hat residues. Prefers a
// non-singular color with a single c-hat residue, then the smallest one; falls
// back to the spanning-tree presentation when every color is singular.
GroupPresentation fundamental_group(const ColoredGraph& g);
GroupPresentation fundamental_group(const ColoredGraph& g, Color c);

// Free and cyclic reduction, removal of empty and repeated relators, and
// elimination of generators occurring exactly once in a relator. Idempotent.
GroupPresentation simplify(const GroupPresentation& p);

// Smith normal form of the relator exponent matrix over 64-bit integers;
// throws Overflow if an intermediate value leaves that range.
AbelianInvariants abelianization(const GroupPresentation& p);

enum class ExportFormat { Gap, Plain };
std::string export_presentation(const GroupPresentation& p, ExportFormat format);
// Parses the plain format produced by export_presentation.
GroupPresentation parse_plain_presentation(const std::string& text);

}  // namespace fourcolor
