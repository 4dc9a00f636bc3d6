#include "doctest.h"

#include <optional>
#include <string>
#include <vector>

#include "freeknot/bracket.hpp"
#include "freeknot/chord_diagram.hpp"
#include "freeknot/errors.hpp"
#include "freeknot/framed_graph.hpp"
#include "freeknot/moves.hpp"
#include "freeknot/parity.hpp"
#include "helpers.hpp"

using freeknot::apply_move;
using freeknot::bracket;
using freeknot::BracketValue;
using freeknot::canonical_word;
using freeknot::certify_minimal;
using freeknot::chord_diagram_to_framed;
using freeknot::ChordDiagram;
using freeknot::even_vertices;
using freeknot::find_moves;
using freeknot::find_smoothing_equivalent;
using freeknot::fuzz_invariance;
using freeknot::is_irreducibly_odd;
using freeknot::parse_dow;
using freeknot::SearchStatus;
using freeknot::smooth_many;
using freeknot::ValidationError;

namespace {

std::optional<ChordDiagram> first_irreducibly_odd(int n) {
  for (const auto& word : testutil::all_dows(n)) {
    ChordDiagram cd = testutil::cd_of(word);
    if (is_irreducibly_odd(cd)) return canonical_word(cd);
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("diagrams of the trivial knot share the circle bracket") {
  BracketValue circle = bracket(parse_dow(""));
  CHECK(circle.classes == std::set<std::string>{""});
  CHECK(circle.to_string() == "circle");
  CHECK(bracket(parse_dow("1 1")) == circle);
  CHECK(bracket(parse_dow("1 2 1 2")) == circle);
  CHECK(bracket(parse_dow("1 2 2 1")) == circle);
  CHECK(bracket(parse_dow("1 2 3 2 3 1")) == circle);
}

TEST_CASE("even vertex listing") {
  CHECK(even_vertices(parse_dow("1 2 1 2")).empty());
  CHECK(even_vertices(parse_dow("1 1 2 2")) == std::vector<int>{0, 1});
  CHECK(even_vertices(parse_dow("1 2 3 1 2 3")) == std::vector<int>{0, 1, 2});
}

TEST_CASE("bracket never moves under Reidemeister moves") {
  for (int n = 0; n <= 3; ++n) {
    auto words =
        n == 0 ? std::vector<std::vector<int>>{{}} : testutil::all_dows(n);
    for (const auto& word : words) {
      ChordDiagram cd = n == 0 ? ChordDiagram() : testutil::cd_of(word);
      BracketValue reference = bracket(cd);
      for (const auto& site : find_moves(cd))
        CHECK(bracket(apply_move(cd, site)) == reference);
    }
  }
}

TEST_CASE("bracket rejects split graphs and huge even sets") {
  auto one = chord_diagram_to_framed(parse_dow("1 2 1 2"));
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : one.edges()) {
    edges.emplace_back(a, b);
    edges.emplace_back(a + 8, b + 8);
  }
  auto split = freeknot::FramedFourGraph::from_edges(4, edges);
  CHECK_THROWS_AS(bracket(split), ValidationError);
  CHECK_THROWS_AS(bracket(parse_dow("1 1 2 2 3 3"), 2),
                  freeknot::BudgetError);
}

TEST_CASE("irreducibly odd diagrams are bracket fixed points") {
  auto gamma = first_irreducibly_odd(6);
  REQUIRE(gamma.has_value());
  BracketValue value = bracket(*gamma);
  CHECK(value.classes == std::set<std::string>{gamma->to_string()});

  auto outcome = certify_minimal(*gamma);
  REQUIRE(outcome.ok());
  CHECK(outcome.certificate->vertex_count == 6);
  CHECK(outcome.certificate->diagram == gamma->to_string());
  CHECK_FALSE(outcome.certificate->basis.empty());
  CHECK(outcome.certificate->checked.size() == 3);
}

TEST_CASE("certification refuses reducible and even diagrams") {
  auto crossed = certify_minimal(parse_dow("1 2 1 2"));
  CHECK_FALSE(crossed.ok());
  CHECK(crossed.refused_predicate == "is_irreducibly_odd");

  auto nested = certify_minimal(parse_dow("1 1 2 2"));
  CHECK_FALSE(nested.ok());
  CHECK(nested.refused_predicate == "is_odd");

  auto empty = certify_minimal(parse_dow(""));
  CHECK(empty.ok());
  CHECK(empty.certificate->vertex_count == 0);
}

TEST_CASE("fuzzing is deterministic and holds the invariant") {
  ChordDiagram seed_cd = parse_dow("1 2 1 2");
  auto a = fuzz_invariance(seed_cd, 120, 42, 9);
  auto b = fuzz_invariance(seed_cd, 120, 42, 9);
  CHECK(a.moves_applied == b.moves_applied);
  CHECK(a.final_diagram == b.final_diagram);
  CHECK(a.invariant_held);
  CHECK(a.reference == "circle");
  auto c = fuzz_invariance(seed_cd, 120, 43, 9);
  CHECK(c.invariant_held);
}

TEST_CASE("smoothing search finds a kink inside the crossed pair") {
  auto big = chord_diagram_to_framed(parse_dow("1 2 1 2"));
  auto search = find_smoothing_equivalent(big, parse_dow("1 1"), 1000);
  REQUIRE(search.status == SearchStatus::found);
  REQUIRE(search.choices.size() == 1);
  auto res = smooth_many(big, search.choices);
  CHECK(freeknot::unicursal_components(res).count() == 1);
  CHECK(canonical_word(freeknot::framed_to_chord_diagram(res)).to_string() ==
        "1 1");
}

TEST_CASE("smoothing search reports misses and exhaustion") {
  auto big = chord_diagram_to_framed(parse_dow("1 1 2 2"));
  auto miss = find_smoothing_equivalent(big, parse_dow("1 2 1 2"), 1000);
  CHECK(miss.status == SearchStatus::not_found);
  auto gamma = first_irreducibly_odd(6);
  REQUIRE(gamma.has_value());
  auto tight =
      find_smoothing_equivalent(chord_diagram_to_framed(*gamma),
                                parse_dow("1 1"), 2);
  CHECK(tight.status == SearchStatus::exhausted);
  CHECK(tight.attempts >= 2);
}
