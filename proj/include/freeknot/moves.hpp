#pragma once

#include <string>
#include <utility>
#include <vector>

#include "freeknot/chord_diagram.hpp"
#include "freeknot/framed_graph.hpp"

namespace freeknot {

// A concrete site where one Reidemeister move applies. Arc k denotes the
// gap following position k on the circle (the single gap of the empty
// diagram is arc 0). R3 sites carry the three adjacent endpoint pairs that
// the move swaps.
struct MoveSite {
  enum class Kind { r1_add, r1_remove, r2_add, r2_remove, r3 };

  Kind kind = Kind::r1_add;
  std::vector<int> chords;                 // r1_remove {a}; r2_remove {a, b}
  std::vector<int> arcs;                   // r1_add {i}; r2_add {i, j}
  bool crossed = false;                    // r2_add flavour
  std::vector<std::pair<int, int>> pairs;  // r3: (p, p+1 mod 2n), three of them

  // Compact textual form, e.g. "r2-:A,B", "r1+:3", "r2+:0,2,crossed",
  // "r3:0-1,2-3,4-5". Accepted back by parse_move_site.
  std::string to_spec(const ChordDiagram& cd) const;
};

// Every applicable move site, in a fixed deterministic order: decreasing
// R1, decreasing R2, R3, then R1 additions per arc and R2 additions per arc
// pair and flavour.
std::vector<MoveSite> find_moves(const ChordDiagram& cd);

// Applies one move. Revalidates the site against the diagram and throws
// ValidationError when it is stale or malformed. Added chords get fresh
// decimal labels.
ChordDiagram apply_move(const ChordDiagram& cd, const MoveSite& site);

// Parses the textual form produced by MoveSite::to_spec.
MoveSite parse_move_site(const ChordDiagram& cd, const std::string& spec);

// The two ways to resolve a vertex: reconnect its half-edges joining slots
// 0-1 and 2-3, or joining slots 0-3 and 1-2 (never the straight-through
// pairs (0,2), (1,3)).
enum class SmoothVariant { join_01_23, join_03_12 };

struct SmoothingChoice {
  int vertex = 0;
  SmoothVariant variant = SmoothVariant::join_01_23;
};

// Resolves one vertex. Remaining vertices are renumbered downwards to stay
// dense; freed strands that close up without meeting a kept vertex become
// circles.
FramedFourGraph smooth(const FramedFourGraph& g, SmoothingChoice choice);

// Resolves a set of distinct vertices in one pass. Equals any sequential
// composition of the individual smoothings.
FramedFourGraph smooth_many(const FramedFourGraph& g,
                            const std::vector<SmoothingChoice>& choices);

// Applies decreasing R2 moves at the leftmost site until none remains, then
// canonicalises. Terminates because every step removes two chords.
ChordDiagram reduce_r2(const ChordDiagram& cd);

}  // namespace freeknot
