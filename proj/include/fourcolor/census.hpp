#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fourcolor/graph.hpp"
#include "fourcolor/pi1.hpp"
#include "fourcolor/surfaces.hpp"

namespace fourcolor {

// A 3-colored graph on colors {0,1,2}; may be disconnected.
struct SeedGraph {
  std::vector<std::array<Vertex, 3>> rows;

  int order() const { return static_cast<int>(rows.size()); }
};

// Canonical text of a possibly disconnected 3-colored graph, up to vertex
// relabeling and permutations of its three colors.
std::string seed_canonical_text(const SeedGraph& seed);

// All 3-colored graphs on `order` vertices up to isomorphism that are
// connected or have only positive-genus components, sorted by canonical text.
std::vector<SeedGraph> enumerate_seed_3graphs(int order);

// Every choice of color-3 involution making the seed a connected, contracted
// 4-colored graph without 2-dipoles. Graphs are not deduplicated.
std::vector<ColoredGraph> extend_seeds(const SeedGraph& seed);
void extend_seeds(const SeedGraph& seed, const std::function<void(const ColoredGraph&)>& emit);

struct CatalogueEntry {
  CanonicalCode code;
  int order = 0;
  int class_m = 4;
  ColorSet singular_colors;
  BoundaryProfile boundary;
  int chi = 0;
  int rho = 0;
  AbelianInvariants abelian;

  friend bool operator==(const CatalogueEntry&, const CatalogueEntry&) = default;
};

// Computes every cached field; singular colors refer to the canonical
// representative's coloring.
CatalogueEntry make_entry(const ColoredGraph& g);

struct ClassCounts {
  std::int64_t total = 0;
  std::int64_t connected_boundary = 0;
  std::int64_t toric_boundary = 0;

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

struct CensusStats {
  int order = 0;
  // index by bipartiteness class m (2, 3, 4)
  std::array<ClassCounts, 5> by_class{};
  std::int64_t closed_dropped = 0;  // diagnostic only
  bool resumed = false;

  const ClassCounts& bipartite() const { return by_class[4]; }
  const ClassCounts& two_bipartite() const { return by_class[2]; }
  const ClassCounts& three_bipartite() const { return by_class[3]; }

  friend bool operator==(const CensusStats& a, const CensusStats& b) {
    return a.order == b.order && a.by_class == b.by_class;
  }
};

CensusStats compute_stats(int order, const std::vector<CatalogueEntry>& entries);

struct CensusOptions {
  int max_order = 12;
  int jobs = 1;
  // Optional checkpoint file: entries are appended after every chunk of seeds
  // and an existing file is resumed from its last checkpoint. On completion
  // the file is rewritten as a finished, sorted catalogue.
  std::string checkpoint_path;
  std::function<void(std::size_t done, std::size_t total)> progress;
};

struct Catalogue {
  std::vector<CatalogueEntry> entries;  // sorted by code
  CensusStats stats;
};

// Throws BudgetExceeded when order > options.max_order.
Catalogue build_catalogue(int order, const CensusOptions& options = {});

// Line-oriented catalogue files. The header records the format version and
// the order; "#checkpoint k" lines record that seeds 0..k-1 are complete.
void write_catalogue(const std::vector<CatalogueEntry>& entries, int order, const std::string& path);
struct CatalogueFile {
  int order = 0;
  std::vector<CatalogueEntry> entries;
  long long checkpoint = -1;  // number of completed seeds, -1 when absent
};
CatalogueFile read_catalogue(const std::string& path);

std::string format_entry(const CatalogueEntry& e);
CatalogueEntry parse_entry(const std::string& line);

// Grid shaped like the published table: one column per order.
std::string format_stats_table(const std::vector<CensusStats>& stats);

}  // namespace fourcolor
