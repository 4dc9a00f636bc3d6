#include "doctest.h"

#include <set>
#include <string>

#include "freeknot/chord_diagram.hpp"
#include "freeknot/errors.hpp"
#include "freeknot/framed_graph.hpp"
#include "freeknot/moves.hpp"
#include "helpers.hpp"

using freeknot::apply_move;
using freeknot::canonical_word;
using freeknot::chord_diagram_to_framed;
using freeknot::ChordDiagram;
using freeknot::find_moves;
using freeknot::framed_to_chord_diagram;
using freeknot::isomorphic;
using freeknot::MoveSite;
using freeknot::parse_dow;
using freeknot::parse_move_site;
using freeknot::reduce_r2;
using freeknot::smooth;
using freeknot::smooth_many;
using freeknot::SmoothingChoice;
using freeknot::SmoothVariant;
using freeknot::unicursal_components;
using freeknot::ValidationError;

namespace {

std::string canon(const ChordDiagram& cd) {
  return canonical_word(cd).to_string();
}

}  // namespace

TEST_CASE("kink removal and addition") {
  ChordDiagram kink = parse_dow("1 1");
  auto sites = find_moves(kink);
  REQUIRE_FALSE(sites.empty());
  REQUIRE(sites[0].kind == MoveSite::Kind::r1_remove);
  CHECK(apply_move(kink, sites[0]).empty());

  ChordDiagram circle = parse_dow("");
  bool added = false;
  for (const auto& site : find_moves(circle))
    if (site.kind == MoveSite::Kind::r1_add) {
      CHECK(canon(apply_move(circle, site)) == "1 1");
      added = true;
    }
  CHECK(added);
}

TEST_CASE("crossed pair removal") {
  ChordDiagram cd = parse_dow("1 2 1 2");
  bool removed = false;
  for (const auto& site : find_moves(cd))
    if (site.kind == MoveSite::Kind::r2_remove) {
      CHECK(apply_move(cd, site).empty());
      removed = true;
    }
  CHECK(removed);
}

TEST_CASE("additions are undone by a matching removal") {
  for (int n = 0; n <= 3; ++n) {
    auto words = n == 0 ? std::vector<std::vector<int>>{{}}
                        : testutil::all_dows(n);
    for (const auto& word : words) {
      ChordDiagram cd = n == 0 ? ChordDiagram() : testutil::cd_of(word);
      std::string before = canon(cd);
      for (const auto& site : find_moves(cd)) {
        if (site.kind != MoveSite::Kind::r1_add &&
            site.kind != MoveSite::Kind::r2_add)
          continue;
        ChordDiagram bigger = apply_move(cd, site);
        int want = cd.chord_count() +
                   (site.kind == MoveSite::Kind::r1_add ? 1 : 2);
        CHECK(bigger.chord_count() == want);
        bool undone = false;
        for (const auto& down : find_moves(bigger)) {
          if (site.kind == MoveSite::Kind::r1_add &&
              down.kind != MoveSite::Kind::r1_remove)
            continue;
          if (site.kind == MoveSite::Kind::r2_add &&
              down.kind != MoveSite::Kind::r2_remove)
            continue;
          if (down.kind == MoveSite::Kind::r1_add ||
              down.kind == MoveSite::Kind::r2_add ||
              down.kind == MoveSite::Kind::r3)
            continue;
          if (canon(apply_move(bigger, down)) == before) {
            undone = true;
            break;
          }
        }
        CHECK(undone);
      }
    }
  }
}

TEST_CASE("third move is invertible by another third move") {
  ChordDiagram cd = parse_dow("1 2 3 1 2 3");
  bool found = false;
  for (const auto& site : find_moves(cd)) {
    if (site.kind != MoveSite::Kind::r3) continue;
    found = true;
    ChordDiagram moved = apply_move(cd, site);
    CHECK(moved.chord_count() == 3);
    bool inverse = false;
    for (const auto& back : find_moves(moved))
      if (back.kind == MoveSite::Kind::r3 &&
          canon(apply_move(moved, back)) == canon(cd)) {
        inverse = true;
        break;
      }
    CHECK(inverse);
  }
  CHECK(found);
}

TEST_CASE("site specs round trip through text") {
  for (const char* text : {"", "1 1", "1 2 1 2", "1 2 3 1 2 3"}) {
    ChordDiagram cd = parse_dow(text);
    for (const auto& site : find_moves(cd)) {
      MoveSite again = parse_move_site(cd, site.to_spec(cd));
      CHECK(canon(apply_move(cd, again)) == canon(apply_move(cd, site)));
    }
  }
}

TEST_CASE("stale sites are rejected") {
  ChordDiagram cd = parse_dow("1 2 1 2");
  auto sites = find_moves(cd);
  REQUIRE_FALSE(sites.empty());
  CHECK_THROWS_AS(apply_move(parse_dow("3 3"), sites[0]), ValidationError);
  CHECK_THROWS_AS(parse_move_site(cd, "r2-:7,9"), ValidationError);
  CHECK_THROWS_AS(parse_move_site(cd, "nonsense"), ValidationError);
}

TEST_CASE("smoothing a crossed pair vertex") {
  auto g = chord_diagram_to_framed(parse_dow("1 2 1 2"));
  std::set<std::string> outcomes;
  for (auto variant : {SmoothVariant::join_01_23, SmoothVariant::join_03_12}) {
    auto res = smooth(g, {0, variant});
    CHECK(res.vertex_count() == 1);
    auto comps = unicursal_components(res);
    if (comps.count() == 1)
      outcomes.insert(canon(framed_to_chord_diagram(res)));
    else
      outcomes.insert("split:" + std::to_string(comps.count()));
  }
  CHECK(outcomes == std::set<std::string>{"1 1", "split:2"});
}

TEST_CASE("smoothing a kink yields one or two circles") {
  auto g = chord_diagram_to_framed(parse_dow("1 1"));
  std::set<int> circle_counts;
  for (auto variant : {SmoothVariant::join_01_23, SmoothVariant::join_03_12}) {
    auto res = smooth(g, {0, variant});
    CHECK(res.vertex_count() == 0);
    circle_counts.insert(res.circle_count());
  }
  CHECK(circle_counts == std::set<int>{1, 2});
}

TEST_CASE("smooth_many equals stepwise smoothing") {
  for (const auto& word : testutil::all_dows(3)) {
    auto g = chord_diagram_to_framed(testutil::cd_of(word));
    for (int lo = 0; lo < 3; ++lo)
      for (int hi = lo + 1; hi < 3; ++hi)
        for (int bits = 0; bits < 4; ++bits) {
          SmoothingChoice clo{lo, bits & 1 ? SmoothVariant::join_03_12
                                           : SmoothVariant::join_01_23};
          SmoothingChoice chi{hi, bits & 2 ? SmoothVariant::join_03_12
                                           : SmoothVariant::join_01_23};
          auto joint = smooth_many(g, {clo, chi});
          auto stepwise = smooth(smooth(g, chi), clo);
          CHECK(isomorphic(joint, stepwise));
        }
  }
}

TEST_CASE("reduce_r2 reaches the expected representatives") {
  CHECK(reduce_r2(parse_dow("1 2 1 2")).empty());
  CHECK(reduce_r2(parse_dow("1 2 2 1")).empty());
  CHECK(canon(reduce_r2(parse_dow("1 2 3 2 3 1"))) == "1 1");
  CHECK(reduce_r2(parse_dow("")).empty());
}

TEST_CASE("reduce_r2 is confluent on small diagrams") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& word : testutil::all_dows(n)) {
      ChordDiagram cd = testutil::cd_of(word);
      std::string terminal = canon(reduce_r2(cd));
      for (const auto& site : find_moves(cd)) {
        if (site.kind != MoveSite::Kind::r2_remove) continue;
        CHECK(canon(reduce_r2(apply_move(cd, site))) == terminal);
      }
    }
  }
}
