#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "wmg/net.hpp"
#include "wmg/textio.hpp"

using namespace wmg;
using fixtures::error_code_of;

TEST_CASE("builder validates names and weights") {
  WeightedNet::Builder builder;
  builder.place("p");
  CHECK(error_code_of([&] { builder.place("p"); }) ==
        ErrorCode::DuplicatePlace);
  CHECK(error_code_of([&] { builder.consume("p", "t", 0); }) ==
        ErrorCode::PreconditionViolated);

  WeightedNet::Builder collision;
  collision.place("x");
  collision.transition("x");
  CHECK(error_code_of([&] { collision.build(); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("transitions are sorted at build time") {
  WeightedNet::Builder builder;
  builder.transition("zeta");
  builder.transition("alpha");
  builder.place("p");
  builder.produce("zeta", "p", 2);
  builder.consume("p", "alpha", 3);
  WeightedNet net = builder.build();

  CHECK(net.transitions() == std::vector<std::string>{"alpha", "zeta"});
  int p = net.place_index("p");
  int alpha = net.transition_index("alpha");
  int zeta = net.transition_index("zeta");
  CHECK(net.weight_tp(zeta, p) == 2);
  CHECK(net.weight_pt(p, alpha) == 3);
  CHECK(net.incidence(p, zeta) == 2);
  CHECK(net.incidence(p, alpha) == -3);
  CHECK(net.producers(p) == std::vector<int>{zeta});
  CHECK(net.consumers(p) == std::vector<int>{alpha});
}

TEST_CASE("descriptor assembly guards the marked-graph shape") {
  CHECK(error_code_of([] {
          build_net({{"p", {"a", 1, "a", 1, 0}}});
        }) == ErrorCode::SelfLoopPlace);
  CHECK(error_code_of([] {
          build_net({{"p", {"a", 1, "b", 1, -1}}});
        }) == ErrorCode::PreconditionViolated);
  CHECK(error_code_of([] {
          build_net({{"p", {"a", 1, "b", 1, 0}}, {"p", {"b", 1, "a", 1, 0}}});
        }) == ErrorCode::DuplicatePlace);

  // Extra transitions appear even when no place touches them.
  System system = build_system({{"p", {"a", 2, "b", 1, 5}}}, {"idle"});
  CHECK(system.net.num_transitions() == 3);
  CHECK(system.initial == Marking{5});
}

TEST_CASE("firing consumes and produces by weight") {
  System system = fixtures::two_state_trajectory_net();
  const WeightedNet& net = system.net;
  int a = net.transition_index("a");
  int b = net.transition_index("b");

  CHECK(enabled(net, system.initial, a));
  CHECK_FALSE(enabled(net, system.initial, b));
  CHECK(blocking_place(net, system.initial, b) == net.place_index("p2"));

  Marking after = fire(net, system.initial, a);
  CHECK(after == Marking{0, 1});
  CHECK_FALSE(enabled(net, after, a));
  CHECK_FALSE(enabled(net, after, b));  // b needs two tokens on p2
  CHECK(error_code_of([&] { fire(net, after, b); }) == ErrorCode::NotEnabled);
}

TEST_CASE("marking serialization is positional and complete") {
  System system = fixtures::two_state_trajectory_net();
  CHECK(serialize_marking(system.net, system.initial) == "p1=1;p2=0");
  System empty = build_system({}, {"a"});
  CHECK(serialize_marking(empty.net, empty.initial).empty());
}

TEST_CASE("hand-replay of the reference cyclic nets") {
  SUBCASE("four-letter word aacbbdabd") {
    System system = fixtures::net_solving_aacbbdabd();
    Marking m = system.initial;
    for (const auto& letter : fixtures::word("aacbbdabd")) {
      m = fire(system.net, m, letter);
    }
    CHECK(m == system.initial);
  }
  SUBCASE("five-letter word aacbbeabd") {
    System system = fixtures::net_solving_aacbbeabd();
    Marking m = system.initial;
    for (const auto& letter : fixtures::word("aacbbeabd")) {
      m = fire(system.net, m, letter);
    }
    CHECK(m == system.initial);
  }
}

TEST_CASE("reachability graphs") {
  SUBCASE("two-state trajectory") {
    System system = fixtures::two_state_trajectory_net();
    Lts rg = reachability_graph(system);
    CHECK(rg.num_states() == 2);
    CHECK(rg.arc_count() == 1);
    CHECK(rg.state_name(rg.initial()) == "p1=1;p2=0");
    CHECK(rg.has_state("p1=0;p2=1"));
    CHECK_FALSE(rg.has_state("p1=0;p2=0"));
  }
  SUBCASE("state bound") {
    // A place fed by a source transition grows forever.
    System unbounded = build_system({{"c", {"a", 1, std::nullopt, 0, 0}}});
    CHECK(error_code_of([&] { reachability_graph(unbounded, 10); }) ==
          ErrorCode::BoundExceeded);
  }
  SUBCASE("deterministic naming and arc order") {
    System system = fixtures::net_solving_aacbbdabd();
    Lts rg = reachability_graph(system);
    CHECK(rg.num_states() == 9);
    Lts again = reachability_graph(system);
    CHECK(emit_lts_text(rg) == emit_lts_text(again));
  }
}

TEST_CASE("truncated reachability graphs stop at the horizon") {
  // Unbounded single-place system: a deposits three tokens, b removes two.
  System system = build_system({{"p_a_b", {"a", 3, "b", 2, 4}}});
  Lts prefix = truncated_reachability_graph(system, 3);
  // Reachable token counts within three firings of 4: one step gives 7 and
  // 2, two steps 10, 5 and 0, three steps 13, 8 and 3.
  CHECK(prefix.num_states() == 9);
  for (int s = 0; s < prefix.num_states(); ++s) {
    if (prefix.state_name(s) == "p_a_b=13" ||
        prefix.state_name(s) == "p_a_b=8" || prefix.state_name(s) == "p_a_b=3") {
      CHECK(prefix.out(s).empty());
    } else {
      CHECK_FALSE(prefix.out(s).empty());
    }
  }
}

TEST_CASE("marked-graph shape check") {
  WeightedNet::Builder builder;
  builder.place("p");
  builder.produce("a", "p", 1);
  builder.consume("p", "b", 1);
  builder.consume("p", "c", 1);
  WmgCheck check = is_wmg(builder.build());
  CHECK_FALSE(check);
  CHECK(check.witness.find("p") != std::string::npos);

  CHECK(is_wmg(fixtures::net_solving_aacbbdabd().net));
  CHECK(is_wmg(fixtures::golden_staircase_net().net));
}

TEST_CASE("minimal transition semiflows") {
  SUBCASE("two-place circuit") {
    ParikhVector semiflow =
        minimal_t_semiflow(build_net({{"q1", {"a", 2, "b", 1, 0}},
                                      {"q2", {"b", 1, "a", 2, 0}}}));
    CHECK(semiflow.at("a") == 1);
    CHECK(semiflow.at("b") == 2);
  }
  SUBCASE("reference net semiflow matches the word counts") {
    ParikhVector semiflow =
        minimal_t_semiflow(fixtures::net_solving_aacbbdabd().net);
    CHECK(semiflow == parikh_of(fixtures::word("aacbbdabd")));
  }
  SUBCASE("non-marked-graph inputs are rejected") {
    WeightedNet::Builder builder;
    builder.place("p");
    builder.produce("a", "p", 1);
    builder.consume("p", "b", 1);
    builder.consume("p", "c", 1);
    WeightedNet net = builder.build();
    CHECK(error_code_of([&] { minimal_t_semiflow(net); }) ==
          ErrorCode::NotWmg);
  }
  SUBCASE("disconnected nets are rejected") {
    WeightedNet net = build_net({{"q1", {"a", 1, "b", 1, 0}},
                                 {"q2", {"c", 1, "d", 1, 0}}});
    CHECK(error_code_of([&] { minimal_t_semiflow(net); }) ==
          ErrorCode::NotConnected);
  }
  SUBCASE("producer-only place forces a zero component") {
    // q1 only accumulates, so any repeated sequence must avoid a entirely,
    // and the kernel cannot have full support.
    WeightedNet net = build_net({{"q1", {"a", 1, std::nullopt, 0, 0}},
                                 {"q2", {"a", 1, "b", 1, 0}}});
    CHECK(error_code_of([&] { minimal_t_semiflow(net); }) ==
          ErrorCode::NoSemiflow);
  }
  SUBCASE("trivial kernel") {
    WeightedNet net = build_net(
        {{"q1", {"a", 1, "b", 1, 0}}, {"q2", {"a", 2, "b", 1, 0}}});
    CHECK(error_code_of([&] { minimal_t_semiflow(net); }) ==
          ErrorCode::NoSemiflow);
  }
  SUBCASE("single transition with no places") {
    ParikhVector semiflow = minimal_t_semiflow(build_net({}, {"a"}));
    CHECK(semiflow.at("a") == 1);
  }
}

TEST_CASE("net shape equality") {
  CHECK(fixtures::net_solving_aacbbdabd().same_shape(
      fixtures::net_solving_aacbbdabd()));
  System a = fixtures::two_state_trajectory_net();
  System b = fixtures::two_state_trajectory_net();
  b.initial[0] = 2;
  CHECK_FALSE(a.same_shape(b));
}
