#include "doctest.h"

#include "freeknot/chord_diagram.hpp"
#include "freeknot/parity.hpp"
#include "helpers.hpp"

using freeknot::chord_parity;
using freeknot::ChordDiagram;
using freeknot::interlacement;
using freeknot::interlacement_degree;
using freeknot::is_irreducibly_odd;
using freeknot::is_odd;
using freeknot::linked;
using freeknot::Parity;
using freeknot::parse_dow;
using freeknot::r2_pair;

TEST_CASE("two crossed chords are both odd") {
  ChordDiagram cd = parse_dow("A B A B");
  CHECK(linked(cd, 0, 1));
  CHECK(linked(cd, 1, 0));
  CHECK_FALSE(linked(cd, 0, 0));
  CHECK(interlacement_degree(cd, 0) == 1);
  CHECK(chord_parity(cd, 0) == Parity::odd);
  CHECK(chord_parity(cd, 1) == Parity::odd);
  CHECK(is_odd(cd));
  CHECK(r2_pair(cd, 0, 1));
  CHECK_FALSE(is_irreducibly_odd(cd));
}

TEST_CASE("nested chords are even and removable") {
  ChordDiagram cd = parse_dow("A A B B");
  CHECK_FALSE(linked(cd, 0, 1));
  CHECK(chord_parity(cd, 0) == Parity::even);
  CHECK_FALSE(is_odd(cd));
  CHECK(r2_pair(cd, 0, 1));
}

TEST_CASE("a separated nested pair is no bigon") {
  ChordDiagram cd = parse_dow("A B C B C A");
  CHECK_FALSE(linked(cd, 0, 1));
  CHECK_FALSE(r2_pair(cd, 0, 1));
  CHECK(r2_pair(cd, 1, 2));
}

TEST_CASE("triangle of chords is all even") {
  ChordDiagram cd = parse_dow("1 2 3 1 2 3");
  for (int c = 0; c < 3; ++c) {
    CHECK(interlacement_degree(cd, c) == 2);
    CHECK(chord_parity(cd, c) == Parity::even);
  }
  CHECK_FALSE(is_odd(cd));
  auto ig = interlacement(cd);
  CHECK(ig.edges.size() == 3);
}

TEST_CASE("empty diagram is vacuously odd") {
  CHECK(is_odd(parse_dow("")));
  CHECK(is_irreducibly_odd(parse_dow("")));
}

TEST_CASE("interlacement graph of crossed pair") {
  auto ig = interlacement(parse_dow("x y x y"));
  CHECK(ig.labels == std::vector<std::string>{"x", "y"});
  CHECK(ig.edges == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("degree parity agrees with chord_parity everywhere") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& word : testutil::all_dows(n)) {
      ChordDiagram cd = testutil::cd_of(word);
      for (int c = 0; c < n; ++c) {
        bool odd_deg = interlacement_degree(cd, c) % 2 == 1;
        CHECK((chord_parity(cd, c) == Parity::odd) == odd_deg);
      }
      if (is_irreducibly_odd(cd)) {
        CHECK(is_odd(cd));
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b) CHECK_FALSE(r2_pair(cd, a, b));
      }
    }
  }
}

TEST_CASE("linked counts each crossing once from both sides") {
  for (const auto& word : testutil::all_dows(3)) {
    ChordDiagram cd = testutil::cd_of(word);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b)
          CHECK_FALSE(linked(cd, a, b));
        else
          CHECK(linked(cd, a, b) == linked(cd, b, a));
      }
  }
}
