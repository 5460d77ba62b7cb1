#pragma once

#include "fourcolor/graph.hpp"

namespace fourcolor {

// Genus-g handlebody, orientable or not, on 4g+2 vertices with color 3 as the
// only singular color. Throws BadGenus for g < 1.
ColoredGraph handlebody_graph(int g, bool orientable);

// S_g x I from the standard 3-colored graph of S_g with 3-edges doubling the
// 0-edges: 2(2g+1) vertices when orientable, 2(g+1) otherwise. Singular
// colors are 0 and 3. Throws BadGenus for g < 1.
ColoredGraph surface_times_interval_graph(int g, bool orientable);

// 3-colored graph (colors 0,1,2) of the closed surface, as rows with the
// fourth entry unused (-1).
std::vector<ColoredGraph::Row> surface_base_graph(int g, bool orientable);

}  // namespace fourcolor
