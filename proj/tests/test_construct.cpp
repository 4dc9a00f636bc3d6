#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "freeknot/bracket.hpp"
#include "freeknot/chord_diagram.hpp"
#include "freeknot/construct.hpp"
#include "freeknot/errors.hpp"
#include "freeknot/framed_graph.hpp"
#include "freeknot/moves.hpp"
#include "freeknot/multigraph.hpp"
#include "freeknot/parity.hpp"

using freeknot::builtin_trivalent;
using freeknot::canonical_word;
using freeknot::chord_diagram_to_framed;
using freeknot::ChordDiagram;
using freeknot::connected;
using freeknot::degrees;
using freeknot::framed_to_chord_diagram;
using freeknot::interlacement_degree;
using freeknot::is_irreducibly_odd;
using freeknot::isomorphic;
using freeknot::lemma2;
using freeknot::make_trivalent;
using freeknot::normalised_edges;
using freeknot::oddify;
using freeknot::pair_and_frame;
using freeknot::parse_dow;
using freeknot::qr_diagram;
using freeknot::random_cubic;
using freeknot::reconstruct_descent;
using freeknot::smooth_many;
using freeknot::TrivalentGraph;
using freeknot::ValidationError;
using freeknot::virtual_to_free;

namespace {

std::string canon(const ChordDiagram& cd) {
  return canonical_word(cd).to_string();
}

bool is_prime_slow(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("make_trivalent validates degree and connectivity") {
  CHECK_THROWS_AS(make_trivalent(2, {{0, 1}}), ValidationError);
  CHECK_THROWS_AS(make_trivalent(4, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3},
                                     {2, 3}}),
                  ValidationError);
  auto theta = make_trivalent(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(theta.vertex_count() == 2);
}

TEST_CASE("builtin graphs") {
  auto k4 = builtin_trivalent("k4");
  REQUIRE(k4.has_value());
  CHECK(k4->vertex_count() == 4);
  CHECK(k4->graph.edges.size() == 6);
  auto prism = builtin_trivalent("prism3");
  REQUIRE(prism.has_value());
  CHECK(prism->vertex_count() == 6);
  CHECK(prism->graph.edges.size() == 9);
  auto petersen = builtin_trivalent("petersen");
  REQUIRE(petersen.has_value());
  CHECK(petersen->vertex_count() == 10);
  CHECK(petersen->graph.edges.size() == 15);
  CHECK_FALSE(builtin_trivalent("k5").has_value());
}

TEST_CASE("inverse-pair diagrams for small primes") {
  ChordDiagram seven = qr_diagram(7);
  CHECK(seven.chord_count() == 2);
  CHECK(canon(seven) == "1 2 1 2");
  CHECK(seven.to_string() == "2 3 2 3");

  ChordDiagram eleven = qr_diagram(11);
  CHECK(eleven.chord_count() == 4);
  CHECK(canon(eleven) == canon(parse_dow("2 3 3 5 2 7 7 5")));
  auto self_paired = eleven.find_chord("3");
  REQUIRE(self_paired.has_value());
  CHECK(interlacement_degree(eleven, *self_paired) == 0);

  CHECK(canon(qr_diagram(13)) == canon(parse_dow("2 3 4 5 6 2 5 3 4 6")));
}

TEST_CASE("inverse-pair diagram sizes follow the residue count") {
  for (int p = 7; p <= 97; ++p) {
    if (!is_prime_slow(p)) continue;
    CHECK(qr_diagram(p).chord_count() == (p - 3) / 2);
  }
}

TEST_CASE("inverse-pair diagram rejects bad moduli") {
  CHECK_THROWS_AS(qr_diagram(9), ValidationError);
  CHECK_THROWS_AS(qr_diagram(5), ValidationError);
  CHECK_THROWS_AS(qr_diagram(-3), ValidationError);
}

TEST_CASE("pairing and framing walks an Euler circuit") {
  auto k4 = *builtin_trivalent("k4");
  for (std::uint64_t seed : {0ULL, 1ULL, 9ULL}) {
    auto res = pair_and_frame(k4, seed);
    CHECK(res.diagram.chord_count() == 4);
    CHECK(res.pairing.size() == 2);
    CHECK(res.circuit_edges.size() == 8);
    CHECK(res.arc_is_pairing.size() == 8);

    std::vector<std::pair<int, int>> base_arcs, pairing_arcs;
    int m = res.diagram.length();
    for (int p = 0; p < m; ++p) {
      int u = std::stoi(res.diagram.chord_name(res.diagram.chord_at(p)));
      int v = std::stoi(
          res.diagram.chord_name(res.diagram.chord_at((p + 1) % m)));
      auto arc = std::minmax(u, v);
      if (res.arc_is_pairing[p])
        pairing_arcs.emplace_back(arc.first, arc.second);
      else
        base_arcs.emplace_back(arc.first, arc.second);
    }
    std::sort(base_arcs.begin(), base_arcs.end());
    std::sort(pairing_arcs.begin(), pairing_arcs.end());
    CHECK(base_arcs == normalised_edges(k4.graph));
    freeknot::MultiGraph pairing_graph{4, res.pairing};
    CHECK(pairing_arcs == normalised_edges(pairing_graph));
  }
}

TEST_CASE("oddify flanks every chord into odd parity") {
  ChordDiagram cd = parse_dow("1 2 1 2");
  auto res = oddify(cd);
  CHECK(is_irreducibly_odd(res.gamma));
  CHECK(res.gamma.chord_count() == 6);
  CHECK(res.small_chords.at("1").size() == 2);
  CHECK(res.small_chords.at("2").size() == 2);
  auto back = smooth_many(chord_diagram_to_framed(res.gamma), res.recovery);
  CHECK(isomorphic(back, chord_diagram_to_framed(cd)));
}

TEST_CASE("small chords link only their host") {
  auto res = oddify(parse_dow("1 2 1 2"));
  for (const auto& [host, smalls] : res.small_chords) {
    auto host_id = res.gamma.find_chord(host);
    REQUIRE(host_id.has_value());
    for (const auto& name : smalls) {
      auto id = res.gamma.find_chord(name);
      REQUIRE(id.has_value());
      CHECK(interlacement_degree(res.gamma, *id) == 1);
      CHECK(freeknot::linked(res.gamma, *id, *host_id));
    }
  }
}

TEST_CASE("lemma2 contract on the builtin graphs") {
  for (const char* name : {"k4", "prism3"}) {
    auto L = *builtin_trivalent(name);
    auto out = lemma2(L, 0);
    CHECK(out.stats.v_L == L.vertex_count());
    CHECK(is_irreducibly_odd(out.gamma));
    CHECK(out.gamma.chord_count() <= 3 * L.vertex_count());
    CHECK(out.gamma_prime.chord_count() == L.vertex_count());
    CHECK(freeknot::certify_minimal(out.gamma).ok());

    auto resolved =
        smooth_many(chord_diagram_to_framed(out.gamma), out.recovery);
    CHECK(isomorphic(resolved, chord_diagram_to_framed(out.gamma_prime)));

    std::vector<std::pair<int, int>> arcs;
    int m = out.gamma_prime.length();
    for (int p = 0; p < m; ++p) {
      int u = std::stoi(
          out.gamma_prime.chord_name(out.gamma_prime.chord_at(p)));
      int v = std::stoi(
          out.gamma_prime.chord_name(out.gamma_prime.chord_at((p + 1) % m)));
      arcs.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(arcs.begin(), arcs.end());
    auto expected = normalised_edges(L.graph);
    for (auto [a, b] : out.pairing)
      expected.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(expected.begin(), expected.end());
    CHECK(arcs == expected);
  }
}

TEST_CASE("lemma2 is deterministic per seed") {
  auto k4 = *builtin_trivalent("k4");
  auto a = lemma2(k4, 5);
  auto b = lemma2(k4, 5);
  CHECK(a.gamma.to_string() == b.gamma.to_string());
  CHECK(a.gamma_prime.to_string() == b.gamma_prime.to_string());
  CHECK(a.pairing == b.pairing);
}

TEST_CASE("random cubic graphs are cubic and connected") {
  std::set<std::string> flavours;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto g = random_cubic(8, seed);
    CHECK(g.vertex_count() == 8);
    for (int d : degrees(g.graph)) CHECK(d == 3);
    CHECK(connected(g.graph));
    std::string key;
    for (auto [a, b] : normalised_edges(g.graph))
      key += std::to_string(a) + "-" + std::to_string(b) + ";";
    flavours.insert(key);
  }
  CHECK(flavours.size() > 1);
  CHECK_THROWS_AS(random_cubic(5, 0), ValidationError);
  CHECK_THROWS_AS(random_cubic(2, 0), ValidationError);
}

TEST_CASE("gauss code import forgets decorations") {
  CHECK(virtual_to_free("O1+ U2+ O2- U1-").to_string() == "1 2 2 1");
  CHECK(virtual_to_free("O1+ U1+").to_string() == "1 1");
  CHECK_THROWS_AS(virtual_to_free("O1+ O1+"), ValidationError);
  CHECK_THROWS_AS(virtual_to_free("O1+ U1"), ValidationError);
  CHECK_THROWS_AS(virtual_to_free("X1+ U1-"), ValidationError);
  CHECK_THROWS_AS(virtual_to_free("O1+ U2+ O2- U1- O3+ U3"),
                  ValidationError);
}

TEST_CASE("descent evidence can be rebuilt from names") {
  auto k4 = *builtin_trivalent("k4");
  auto out = lemma2(k4, 0);
  auto [prime, recovery] = reconstruct_descent(out.gamma, k4);
  CHECK(canon(prime) == canon(out.gamma_prime));
  auto resolved = smooth_many(chord_diagram_to_framed(out.gamma), recovery);
  CHECK(isomorphic(resolved, chord_diagram_to_framed(prime)));
  CHECK_THROWS_AS(reconstruct_descent(parse_dow("1 2 1 2"), k4),
                  ValidationError);
}
