#pragma once

#include <string>
#include <utility>
#include <vector>

#include "freeknot/chord_diagram.hpp"

namespace freeknot {

enum class Parity { even, odd };

// Whether chords a and b interleave: exactly one end of b lies strictly
// between the ends of a along the circle. Irreflexive.
bool linked(const ChordDiagram& cd, int a, int b);

// Parity of a chord: the parity of its degree in the interlacement graph.
Parity chord_parity(const ChordDiagram& cd, int chord);

// Number of chords linked with `chord`.
int interlacement_degree(const ChordDiagram& cd, int chord);

// All chords odd. Vacuously true for the empty diagram.
bool is_odd(const ChordDiagram& cd);

// Odd, and no two chords have their endpoints pairwise adjacent at both
// ends (the configuration a decreasing second Reidemeister move needs, in
// both its nested and crossed forms).
bool is_irreducibly_odd(const ChordDiagram& cd);

// The interlacement graph: one node per chord, an edge per linked pair.
struct InterlacementGraph {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;  // pairs (a, b) with a < b
};

InterlacementGraph interlacement(const ChordDiagram& cd);

// Whether two chords have their four endpoints pairwise adjacent at both
// ends, i.e. form a removable bigon.
bool r2_pair(const ChordDiagram& cd, int a, int b);

}  // namespace freeknot
