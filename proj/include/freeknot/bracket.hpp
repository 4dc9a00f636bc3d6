#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "freeknot/chord_diagram.hpp"
#include "freeknot/framed_graph.hpp"
#include "freeknot/moves.hpp"

namespace freeknot {

// An element of the Z/2 span of equivalence classes of one-component framed
// 4-graphs modulo decreasing R2 moves. Classes are keyed by the canonical
// reduced double occurrence word; the empty word is the bare circle.
struct BracketValue {
  std::set<std::string> classes;

  bool operator==(const BracketValue&) const = default;
  std::string to_string() const;
};

// The smoothing-sum invariant of a one-component graph: resolve every even
// vertex in all 2^k ways, keep the summands that come out as a single
// unicursal component (vertex-free circles count as components), reduce each
// by decreasing R2 moves, and add up mod 2. Throws ValidationError when the
// input has more than one component and BudgetError when the even vertex
// count exceeds max_even.
BracketValue bracket(const FramedFourGraph& g, int max_even = 24);
BracketValue bracket(const ChordDiagram& cd, int max_even = 24);

// Chord ids of the even chords, ascending.
std::vector<int> even_vertices(const ChordDiagram& cd);

struct MinimalityCertificate {
  std::string diagram;  // canonical word
  int vertex_count = 0;
  std::string basis;
  std::vector<std::string> checked;
};

struct CertifyOutcome {
  std::optional<MinimalityCertificate> certificate;
  std::string refused_predicate;  // empty when certified

  bool ok() const { return certificate.has_value(); }
};

// Certifies that a diagram attains the minimal vertex count among all
// diagrams of its knot: succeeds exactly on irreducibly odd diagrams, for
// which the invariant above is the one-element set containing the diagram
// itself. Refusal names the failing predicate. A bracket fixed-point
// failure on an irreducibly odd diagram is impossible and raises
// InternalError.
CertifyOutcome certify_minimal(const ChordDiagram& cd);

struct FuzzReport {
  int moves_requested = 0;
  int moves_applied = 0;
  bool invariant_held = true;
  int first_mismatch = -1;       // 1-based step, -1 when none
  std::string reference;         // bracket of the seed diagram
  std::string final_diagram;     // canonical word after the walk
  bool stuck = false;            // no applicable move within the size budget
};

// Random walk over Reidemeister moves checking that the bracket never
// changes. Additions are skipped once they would exceed max_chords.
// Identical seeds give identical walks.
FuzzReport fuzz_invariance(const ChordDiagram& cd, int move_count,
                           std::uint64_t seed, int max_chords = 10);

enum class SearchStatus { found, not_found, exhausted };

struct SmoothingSearch {
  SearchStatus status = SearchStatus::not_found;
  std::vector<SmoothingChoice> choices;  // meaningful when found
  long attempts = 0;
};

// Looks for a set of smoothing choices on `big` whose result, reduced by
// decreasing R2 moves and canonicalised, equals canonical_word(target).
// Enumerates vertex subsets by size, then variants; stops after `budget`
// assignments with an explicit exhausted status.
SmoothingSearch find_smoothing_equivalent(const FramedFourGraph& big,
                                          const ChordDiagram& target,
                                          long budget);

}  // namespace freeknot
