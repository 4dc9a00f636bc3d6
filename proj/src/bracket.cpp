#include "freeknot/bracket.hpp"

#include <algorithm>
#include <random>

#include "freeknot/errors.hpp"
#include "freeknot/parity.hpp"

namespace freeknot {

namespace {

// Chord ids of a walk-extracted diagram are renumbered; chord names keep
// the vertex indices of the originating graph.
int vertex_of_chord(const ChordDiagram& cd, int chord) {
  return std::stoi(cd.chord_name(chord));
}

void toggle(std::set<std::string>& classes, const std::string& key) {
  auto it = classes.find(key);
  if (it == classes.end())
    classes.insert(key);
  else
    classes.erase(it);
}

}  // namespace

std::string BracketValue::to_string() const {
  if (classes.empty()) return "0";
  std::string out;
  for (const auto& cls : classes) {
    if (!out.empty()) out += " | ";
    out += cls.empty() ? "circle" : cls;
  }
  return out;
}

std::vector<int> even_vertices(const ChordDiagram& cd) {
  std::vector<int> out;
  for (int c = 0; c < cd.chord_count(); ++c)
    if (chord_parity(cd, c) == Parity::even) out.push_back(c);
  return out;
}

BracketValue bracket(const FramedFourGraph& g, int max_even) {
  if (unicursal_components(g).count() != 1)
    throw ValidationError(
        "bracket needs a graph with exactly one unicursal component");

  ChordDiagram cd = framed_to_chord_diagram(g);
  std::vector<int> evens;
  for (int c = 0; c < cd.chord_count(); ++c)
    if (chord_parity(cd, c) == Parity::even)
      evens.push_back(vertex_of_chord(cd, c));
  std::sort(evens.begin(), evens.end());

  const int k = static_cast<int>(evens.size());
  if (k > max_even)
    throw BudgetError("bracket: " + std::to_string(k) +
                      " even vertices exceed the budget of " +
                      std::to_string(max_even));

  BracketValue value;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<SmoothingChoice> choices(k);
    for (int i = 0; i < k; ++i)
      choices[i] = {evens[i], (mask >> i) & 1 ? SmoothVariant::join_03_12
                                              : SmoothVariant::join_01_23};
    FramedFourGraph summand = smooth_many(g, choices);
    if (unicursal_components(summand).count() != 1) continue;
    ChordDiagram word = framed_to_chord_diagram(summand);
    toggle(value.classes, reduce_r2(word).to_string());
  }
  return value;
}

BracketValue bracket(const ChordDiagram& cd, int max_even) {
  return bracket(chord_diagram_to_framed(cd), max_even);
}

CertifyOutcome certify_minimal(const ChordDiagram& cd) {
  CertifyOutcome out;
  if (!is_odd(cd)) {
    out.refused_predicate = "is_odd";
    return out;
  }
  if (!is_irreducibly_odd(cd)) {
    out.refused_predicate = "is_irreducibly_odd";
    return out;
  }

  ChordDiagram canon = canonical_word(cd);
  BracketValue value = bracket(cd);
  BracketValue expected;
  expected.classes.insert(canon.to_string());
  if (!(value == expected))
    throw InternalError(
        "bracket of an irreducibly odd diagram is not the diagram itself: " +
        canon.to_string() + " gave " + value.to_string());

  MinimalityCertificate cert;
  cert.diagram = canon.to_string();
  cert.vertex_count = cd.chord_count();
  cert.basis =
      "irreducibly odd diagram; the invariant equals the one-element set "
      "containing it, and every diagram of the same knot has a smoothing "
      "reducing to it";
  cert.checked = {
      "all chords odd",
      "no two chords pairwise adjacent at both ends",
      "bracket fixed point",
  };
  out.certificate = std::move(cert);
  return out;
}

FuzzReport fuzz_invariance(const ChordDiagram& cd, int move_count,
                           std::uint64_t seed, int max_chords) {
  FuzzReport report;
  report.moves_requested = move_count;
  BracketValue reference = bracket(cd);
  report.reference = reference.to_string();

  std::mt19937_64 rng(seed);
  ChordDiagram cur = cd;
  for (int step = 1; step <= move_count; ++step) {
    std::vector<MoveSite> sites;
    for (auto& site : find_moves(cur)) {
      if (site.kind == MoveSite::Kind::r1_add &&
          cur.chord_count() + 1 > max_chords)
        continue;
      if (site.kind == MoveSite::Kind::r2_add &&
          cur.chord_count() + 2 > max_chords)
        continue;
      sites.push_back(std::move(site));
    }
    if (sites.empty()) {
      report.stuck = true;
      break;
    }
    cur = apply_move(cur, sites[rng() % sites.size()]);
    report.moves_applied = step;
    if (!(bracket(cur) == reference)) {
      report.invariant_held = false;
      report.first_mismatch = step;
      break;
    }
  }
  report.final_diagram = canonical_word(cur).to_string();
  return report;
}

SmoothingSearch find_smoothing_equivalent(const FramedFourGraph& big,
                                          const ChordDiagram& target,
                                          long budget) {
  SmoothingSearch search;
  const std::string target_key = canonical_word(target).to_string();
  const int V = big.vertex_count();

  std::vector<int> subset;
  // Enumerates size-`size` subsets in lexicographic order, then variant
  // masks in binary order.
  auto try_subsets = [&](auto&& self, int next, int size) -> bool {
    if (static_cast<int>(subset.size()) == size) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size);
           ++mask) {
        if (search.attempts >= budget) {
          search.status = SearchStatus::exhausted;
          return true;
        }
        ++search.attempts;
        std::vector<SmoothingChoice> choices(size);
        for (int i = 0; i < size; ++i)
          choices[i] = {subset[i], (mask >> i) & 1
                                       ? SmoothVariant::join_03_12
                                       : SmoothVariant::join_01_23};
        FramedFourGraph res = smooth_many(big, choices);
        if (unicursal_components(res).count() != 1) continue;
        if (reduce_r2(framed_to_chord_diagram(res)).to_string() ==
            target_key) {
          search.status = SearchStatus::found;
          search.choices = std::move(choices);
          return true;
        }
      }
      return false;
    }
    for (int v = next; v < V; ++v) {
      subset.push_back(v);
      if (self(self, v + 1, size)) return true;
      subset.pop_back();
    }
    return false;
  };

  for (int size = 0; size <= V; ++size) {
    subset.clear();
    if (try_subsets(try_subsets, 0, size)) return search;
  }
  search.status = SearchStatus::not_found;
  return search;
}

}  // namespace freeknot
