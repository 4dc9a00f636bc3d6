#pragma once

#include <utility>
#include <vector>

namespace freeknot {

// An undirected multigraph on vertices 0..n-1. Loops and parallel edges are
// allowed; a loop adds 2 to its vertex's degree.
struct MultiGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

std::vector<int> degrees(const MultiGraph& g);
bool connected(const MultiGraph& g);

// Edge multiset with each pair normalised to (min, max) and sorted; equal
// results mean equal multigraphs under the identity vertex map.
std::vector<std::pair<int, int>> normalised_edges(const MultiGraph& g);

}  // namespace freeknot
