#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freeknot/chord_diagram.hpp"
#include "freeknot/moves.hpp"
#include "freeknot/multigraph.hpp"

namespace freeknot {

// A connected multigraph with every degree exactly 3.
struct TrivalentGraph {
  MultiGraph graph;

  int vertex_count() const { return graph.vertex_count; }
};

// Validates degrees and connectivity; throws ValidationError otherwise.
TrivalentGraph make_trivalent(int vertex_count,
                              std::vector<std::pair<int, int>> edges);

// The diagram whose chords pair each residue r in 2..p-2 with its inverse
// mod p, endpoints laid out in residue order around the circle. Defined for
// prime p >= 7; chord labels are the smaller residue of each pair.
ChordDiagram qr_diagram(int p);

struct PairAndFrameResult {
  ChordDiagram diagram;                      // one chord per vertex of L
  std::vector<std::pair<int, int>> pairing;  // the added perfect matching
  std::vector<int> circuit_edges;            // euler circuit, edge ids in L+pairing order
  std::vector<bool> arc_is_pairing;          // per arc of `diagram`
};

// Adds a random perfect matching on the vertices of L, making it 4-valent,
// then frames it along an Euler circuit (consecutive circuit edges through a
// vertex are opposite) and reads the circuit off as a double occurrence
// word whose labels are the vertices of L. Deterministic per seed.
PairAndFrameResult pair_and_frame(const TrivalentGraph& L, std::uint64_t seed);

struct OddifyResult {
  ChordDiagram gamma;
  // host chord name -> names of its flanking chords (one or two)
  std::map<std::string, std::vector<std::string>> small_chords;
  // resolving these vertices of gamma's framed graph recovers the input
  std::vector<SmoothingChoice> recovery;
};

// Makes every chord odd by flanking chords that link exactly their host:
// hosts of even parity get one flanking chord, hosts of odd parity get one
// per end. Verifies the output is irreducibly odd, stays within 3x the
// input chord count, and that resolving the flanking vertices recovers the
// input graph; throws ValidationError naming the offender when any check
// fails (callers retry with a fresh seed upstream).
OddifyResult oddify(const ChordDiagram& cd);

struct Lemma2Stats {
  int v_L = 0;
  int chords_gamma_prime = 0;
  int chords_gamma = 0;
  int attempts = 0;
};

struct Lemma2Output {
  ChordDiagram gamma_prime;
  ChordDiagram gamma;
  std::vector<std::pair<int, int>> pairing;
  std::vector<int> circuit_edges;
  std::map<std::string, std::vector<std::string>> small_chords;
  std::vector<SmoothingChoice> recovery;
  Lemma2Stats stats;
};

// Full construction from a trivalent graph to a certified-odd diagram:
// pair_and_frame, then oddify, retrying with derived seeds until the
// verified contract holds: gamma is irreducibly odd, has at most 3 * v(L)
// chords, resolves back to gamma_prime, and deleting the pairing arcs from
// gamma_prime's graph leaves exactly L. Throws BudgetError when every
// attempt failed; a loop in L fails every attempt, since the circuit visits
// its vertex twice in a row and the resulting chord cannot be flanked
// without creating a removable bigon.
Lemma2Output lemma2(const TrivalentGraph& L, std::uint64_t seed,
                    int retry_budget = 64);

// A random connected simple cubic graph on n vertices (n even, n >= 4)
// from the pairing model, resampling until simple and connected.
// Deterministic per seed.
TrivalentGraph random_cubic(int n, std::uint64_t seed);

// Forgets the over/under and sign decorations of a signed Gauss code such
// as "O1+ U2- ...", keeping the traversal order as a double occurrence
// word. Each crossing must occur exactly once as O and once as U.
ChordDiagram virtual_to_free(std::string_view gauss_code);

// Rebuilds the evidence linking a constructed diagram back to its source
// graph when the chord names still name the graph's vertices: every chord
// whose name is not a vertex index is peeled as a flanking chord (its
// resolution must equal its plain deletion), and the peeled diagram's arcs
// must be exactly the edges of L plus a perfect matching on its vertices.
// Returns the peeled diagram and the resolving choices on gamma's framed
// graph; throws ValidationError when the shape does not hold.
std::pair<ChordDiagram, std::vector<SmoothingChoice>> reconstruct_descent(
    const ChordDiagram& gamma, const TrivalentGraph& L);

// Named example graphs: "k4", "prism3", "petersen".
std::optional<TrivalentGraph> builtin_trivalent(std::string_view name);

}  // namespace freeknot
