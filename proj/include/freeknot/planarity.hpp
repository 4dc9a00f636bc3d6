#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freeknot/chord_diagram.hpp"
#include "freeknot/construct.hpp"
#include "freeknot/framed_graph.hpp"
#include "freeknot/moves.hpp"
#include "freeknot/multigraph.hpp"

namespace freeknot {

// A rotation system compatible with the framing puts the two slots of each
// opposite pair across from each other in the cyclic order at the vertex,
// leaving exactly two admissible orders per vertex: (0,1,2,3) and its
// mirror (0,3,2,1). Bit v of `rotations` picks the mirror at vertex v.
// Returns the oriented genus of the resulting embedding by face tracing.
int genus_of_rotation(const FramedFourGraph& g, std::uint64_t rotations);

// Minimum genus over all 2^V admissible rotation systems. Requires a
// connected graph without circles; throws ValidationError otherwise and
// BudgetError when the vertex count makes the exhaustive scan infeasible.
int genus_min(const FramedFourGraph& g);

// genus_min(g) == 0, with an early exit on the first planar system.
bool is_planar_framed(const FramedFourGraph& g);

// Planarity of an abstract multigraph. Loops are irrelevant and dropped;
// parallel edges are handled by subdivision.
bool is_planar_graph(const MultiGraph& g);

// The abstract multigraph under a framed graph: same vertices, one edge per
// socket pair, framing and circles forgotten.
MultiGraph underlying_multigraph(const FramedFourGraph& g);

enum class BoundKind { exact, lower_bound, upper_bound, exhausted };

struct CrossingBound {
  BoundKind kind = BoundKind::exhausted;
  // exact: the crossing number itself, with a witness and every lower level
  // searched empty. exhausted: the search ran out of budget; `value` levels
  // were completed, so the crossing number is at least `value`.
  // lower_bound / upper_bound appear on derived quantities.
  int value = 0;
  std::string witness;

  // The floor this bound proves.
  int proven_at_least() const { return value; }
};

std::string to_string(const CrossingBound& b);

// Minimal number of transversal double points over generic immersions of a
// framed graph in the plane, where opposite half-edges stay opposite at the
// image of every vertex. Iterative deepening on the number k of inserted
// crossings: a crossing splits two current edges of distinct ancestry and
// becomes a 4-valent vertex whose framing pairs the two strands; the
// augmented graph is then tested for framed planarity. Requires a connected
// graph without circles. The budget counts rotation-system face traces.
CrossingBound cr_framed_exact(const FramedFourGraph& g, std::uint64_t budget);

// Same search for an abstract connected multigraph with unconstrained
// immersions and ordinary planarity testing. Loops are dropped up front.
// The budget counts planarity tests.
CrossingBound cr_graph_exact(const MultiGraph& g, std::uint64_t budget);

// Checks that `g` collapses onto `target` by smoothings: the brackets must
// agree, some smoothing of `g` must reduce to `target` by decreasing R2
// moves (searched within `budget` assignments), and each R2 step of that
// reduction must itself be realizable as a smoothing of two vertices, up to
// extra circles. Throws ValidationError when any link fails and BudgetError
// when the search budget runs out, so a caller may use crossing-number
// monotonicity of smoothings across the whole descent.
void verify_smoothing_descent(const FramedFourGraph& g,
                              const ChordDiagram& target, long budget);

// Evidence connecting a certified diagram to the graphs below it in the
// lower-bound chain: resolving `recovery` in the diagram's framed graph
// must yield `gamma_prime` (plus circles), and `base_graph`, when present,
// must be a sub-multigraph of gamma_prime's underlying graph under the
// chord-name-to-vertex map.
struct ChainEvidence {
  ChordDiagram gamma_prime;
  std::vector<SmoothingChoice> recovery;
  std::optional<TrivalentGraph> base_graph;
};

struct ViLowerResult {
  CrossingBound bound;             // kind == lower_bound
  std::vector<std::string> links;  // provenance, one line per chain link
};

// Lower bound on the number of double points any generic plane immersion
// of `delta` needs, hence on the virtual crossing count of any diagram
// drawn on `delta`. Requires gamma to certify as minimal; when delta is not
// gamma's own framed graph, verify_smoothing_descent must connect them.
// The bound is the best floor among: the crossing search on gamma's framed
// graph; on gamma_prime's framed graph (smoothings never increase the
// crossing number); and on base_graph (subgraphs never cross more).
ViLowerResult vi_lower_bound(const FramedFourGraph& delta,
                             const ChordDiagram& gamma,
                             const std::optional<ChainEvidence>& chain,
                             std::uint64_t budget);

}  // namespace freeknot
