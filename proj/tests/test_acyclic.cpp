#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "wmg/acyclic.hpp"
#include "wmg/lts.hpp"
#include "wmg/net.hpp"
#include "wmg/textio.hpp"

using namespace wmg;
using fixtures::error_code_of;

namespace {

LatticePointSet one_dimensional_path(long long length) {
  LatticePointSet set;
  set.labels = {"a"};
  for (long long i = 0; i <= length; ++i) set.points.insert({i});
  return set;
}

}  // namespace

TEST_CASE("point formatting") {
  CHECK(point_to_string({1, 2}) == "(1,2)");
  CHECK(point_to_string({7}) == "(7)");
  CHECK(point_to_string({}) == "()");
}

TEST_CASE("embedding states as Parikh points") {
  SUBCASE("a two-letter path") {
    LatticePointSet set = embed(fixtures::aabb_path_lts());
    CHECK(set.labels == std::vector<std::string>{"a", "b"});
    CHECK(set.points == std::set<LatticePoint>{
                            {0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}});
    CHECK(set.dimension() == 2);
    CHECK(set.contains({2, 1}));
    CHECK_FALSE(set.contains({1, 1}));
  }
  SUBCASE("the staircase uses every row point") {
    LatticePointSet set = embed(fixtures::staircase_lts());
    CHECK(set.points == fixtures::staircase_points().points);
    CHECK(set.points.size() == 51);
  }
  SUBCASE("two states on the same point are rejected") {
    // Two branches meet the point (1,1) in different states, so the
    // embedding cannot be injective.
    Lts::Builder builder;
    builder.initial("s0");
    builder.arc("s0", "a", "s1");
    builder.arc("s1", "b", "s3");
    builder.arc("s0", "b", "s2");
    builder.arc("s2", "a", "s4");
    Lts lts = builder.build();
    auto thrown = [&]() -> Error {
      try {
        embed(lts);
      } catch (const Error& e) {
        return e;
      }
      return Error(ErrorCode::ParseError, "no error");
    }();
    CHECK(thrown.code() == ErrorCode::InconsistentDistances);
    CHECK(thrown.witness() == "(1,1)");
  }
}

TEST_CASE("lattice convexity") {
  SUBCASE("degenerate sets are convex") {
    CHECK(check_lattice_convex(LatticePointSet{}));
    LatticePointSet single;
    single.labels = {"a"};
    single.points = {{5}};
    CHECK(check_lattice_convex(single));
  }
  SUBCASE("a gap on a line is the witness") {
    LatticePointSet set;
    set.labels = {"a"};
    set.points = {{0}, {2}};
    ConvexityResult result = check_lattice_convex(set);
    CHECK_FALSE(result.convex);
    CHECK(result.witness == LatticePoint{1});
  }
  SUBCASE("the two-letter path misses an inner hull point") {
    ConvexityResult result =
        check_lattice_convex(embed(fixtures::aabb_path_lts()));
    CHECK_FALSE(result.convex);
    // (0,1) and (0,2) lie outside the hull; (1,1) is the first hull point
    // in lexicographic order that the set misses.
    CHECK(result.witness == LatticePoint{1, 1});
  }
  SUBCASE("the staircase is convex") {
    CHECK(check_lattice_convex(embed(fixtures::staircase_lts())));
  }
}

TEST_CASE("region values and separation") {
  LatticePointSet set = embed(fixtures::staircase_lts());
  WmgRegion region;
  region.gain_label = "b";
  region.loss_label = "a";
  region.k = 6;
  region.h = 7;
  region.l = 2;
  CHECK(region.value_at({3, 0}, set) == 0);
  CHECK(region.value_at({2, 0}, set) == 2);
  CHECK(region.value_at({9, 6}, set) == 30);
  CHECK(region.separates({3, 0}, set));
  CHECK_FALSE(region.separates({2, 0}, set));
}

TEST_CASE("separating regions") {
  SUBCASE("the staircase region blocking the first row") {
    LatticePointSet set = embed(fixtures::staircase_lts());
    WmgRegion region = find_separating_region(set, {3, 0}, "a");
    CHECK(region.loss_label == "a");
    REQUIRE(region.gain_label.has_value());
    CHECK(*region.gain_label == "b");
    CHECK(region.l == 2);
    CHECK(region.h == 7);
    CHECK(region.k == 6);
  }
  SUBCASE("interior points of a line cannot be separated") {
    LatticePointSet set = one_dimensional_path(3);
    CHECK(error_code_of([&] {
            find_separating_region(set, {1}, "a");
          }) == ErrorCode::NoRegionExists);
    // The end of the path is separable: the place simply runs dry there.
    WmgRegion region = find_separating_region(set, {3}, "a");
    CHECK_FALSE(region.gain_label.has_value());
    CHECK(region.l == 1);
    CHECK(region.k == 3);
  }
  SUBCASE("guards") {
    LatticePointSet set = one_dimensional_path(2);
    CHECK(error_code_of([&] {
            find_separating_region(set, {1}, "zz");
          }) == ErrorCode::LabelAbsent);
    CHECK(error_code_of([&] {
            find_separating_region(set, {9}, "a");
          }) == ErrorCode::PreconditionViolated);
  }
}

TEST_CASE("acyclic synthesis") {
  SUBCASE("the unit square") {
    AcyclicSynthesis result = synthesize_acyclic(fixtures::square_lts());
    REQUIRE(result.regions.size() == 2);
    // Instances are visited in state-name order, so the region forbidding
    // "b" (needed first at s01) precedes the one forbidding "a" (at s10).
    CHECK(result.regions[0].loss_label == "b");
    CHECK_FALSE(result.regions[0].gain_label.has_value());
    CHECK(result.regions[0].k == 1);
    CHECK(result.regions[0].h == 0);
    CHECK(result.regions[0].l == 1);
    CHECK(result.regions[1].loss_label == "a");
    CHECK(result.regions[1].k == 1);
    CHECK(result.counter_labels.empty());
    CHECK(result.system.net.places() ==
          std::vector<std::string>{"p1", "p2"});
    CHECK(serialize_marking(result.system.net, result.system.initial) ==
          "p1=1;p2=1");
    CHECK(lts_isomorphic(reachability_graph(result.system),
                         fixtures::square_lts()));
  }
  SUBCASE("a single path runs a place dry") {
    Lts::Builder builder;
    builder.initial("t0");
    builder.arc("t0", "a", "t1");
    builder.arc("t1", "a", "t2");
    AcyclicSynthesis result = synthesize_acyclic(builder.build());
    REQUIRE(result.regions.size() == 1);
    CHECK(result.regions[0].loss_label == "a");
    CHECK(result.regions[0].k == 2);
    CHECK(result.regions[0].l == 1);
    CHECK(result.counter_labels.empty());
  }
  SUBCASE("the staircase synthesizes and certifies") {
    Lts staircase = fixtures::staircase_lts();
    AcyclicSynthesis result = synthesize_acyclic(staircase);
    CHECK_FALSE(result.regions.empty());
    CHECK(lts_isomorphic(reachability_graph(result.system), staircase));
  }
  SUBCASE("rejections") {
    CHECK(error_code_of([] {
            synthesize_acyclic(fixtures::three_point_lts());
          }) == ErrorCode::PropertyBViolated);
    CHECK(error_code_of([] {
            synthesize_acyclic(
                circular_lts_from_word(fixtures::word("ab")));
          }) == ErrorCode::NotAcyclic);
    auto thrown = []() -> Error {
      try {
        synthesize_acyclic(fixtures::aabb_path_lts());
      } catch (const Error& e) {
        return e;
      }
      return Error(ErrorCode::ParseError, "no error");
    }();
    CHECK(thrown.code() == ErrorCode::NonConvex);
    CHECK(thrown.witness() == "(1,1)");
  }
}

TEST_CASE("the reference staircase net realizes the staircase") {
  System golden = fixtures::golden_staircase_net();
  Lts rg = reachability_graph(golden);
  CHECK(rg.num_states() == 51);
  CHECK(lts_isomorphic(rg, fixtures::staircase_lts()));
}
