// Shared test fixtures: reference nets and transition systems with
// hand-verified behaviour, used across the unit suites and the acceptance
// runner.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wmg/acyclic.hpp"
#include "wmg/lts.hpp"
#include "wmg/net.hpp"
#include "wmg/textio.hpp"

namespace fixtures {

inline std::vector<std::string> word(const std::string& text) {
  return wmg::parse_word(text);
}

// Runs `f` and reports the ErrorCode it throws, or nullopt when it returns
// normally — letting tests assert on codes without try/catch noise.
template <typename F>
std::optional<wmg::ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const wmg::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// The 29-letter binary word a b^2 a b^3 a b^2 a b^3 a b^3 a b^2 a b^3 a b^3
// with counts (8, 21); quotient sequence [2,3,2,3,3,2,3,3].
inline std::vector<std::string> word_8_21() {
  return word("abbabbbabbabbbabbbabbabbbabbb");
}

// Five-place net solving "aacbbdabd" cyclically.  Hand-replayed: from
// (0,1,4,0,0) the word fires with exactly one enabled transition per step
// and returns to the initial marking.
inline wmg::System net_solving_aacbbdabd() {
  using wmg::PlaceDescriptor;
  std::vector<std::pair<std::string, PlaceDescriptor>> places;
  places.push_back({"p0", {"a", 1, "b", 1, 0}});
  places.push_back({"p1", {"a", 1, "c", 3, 1}});
  places.push_back({"p2", {"d", 3, "a", 2, 4}});
  places.push_back({"p3", {"b", 2, "d", 3, 0}});
  places.push_back({"p4", {"c", 3, "b", 1, 0}});
  return wmg::build_system(places);
}

// Seven-place net solving "aacbbeabd" cyclically (five letters).
inline wmg::System net_solving_aacbbeabd() {
  using wmg::PlaceDescriptor;
  std::vector<std::pair<std::string, PlaceDescriptor>> places;
  places.push_back({"p0", {"b", 1, "e", 3, 1}});
  places.push_back({"p1", {"c", 3, "b", 1, 0}});
  places.push_back({"p2", {"e", 3, "a", 1, 2}});
  places.push_back({"p3", {"a", 1, "c", 3, 1}});
  places.push_back({"p4", {"a", 1, "b", 1, 0}});
  places.push_back({"p5", {"d", 3, "a", 1, 3}});
  places.push_back({"p6", {"b", 1, "d", 3, 0}});
  return wmg::build_system(places);
}

// Two-place net whose reachability graph is the single arc
// (p1=1;p2=0) -a-> (p1=0;p2=1); the empty marking is unreachable because b
// needs two tokens on p2 but a deposits only one before dying.
inline wmg::System two_state_trajectory_net() {
  using wmg::PlaceDescriptor;
  std::vector<std::pair<std::string, PlaceDescriptor>> places;
  places.push_back({"p1", {"b", 1, "a", 1, 1}});
  places.push_back({"p2", {"a", 1, "b", 2, 0}});
  return wmg::build_system(places);
}

// Row extents of the 51-point staircase: for each b-count j, the
// inclusive range [lo, hi] of a-counts present.
inline std::vector<std::pair<long long, long long>> staircase_rows() {
  return {{0, 3}, {0, 6}, {1, 10}, {1, 10}, {2, 10}, {2, 10}, {9, 10}};
}

inline wmg::LatticePointSet staircase_points() {
  wmg::LatticePointSet set;
  set.labels = {"a", "b"};
  auto rows = staircase_rows();
  for (long long j = 0; j < static_cast<long long>(rows.size()); ++j) {
    for (long long i = rows[j].first; i <= rows[j].second; ++i) {
      set.points.insert({i, j});
    }
  }
  return set;
}

// The staircase as a transition system: states named "(i,j)", a-arcs step
// right, b-arcs step up, all arcs between present points.
inline wmg::Lts staircase_lts() {
  auto set = staircase_points();
  wmg::Lts::Builder builder;
  builder.initial("(0,0)");
  for (const auto& p : set.points) {
    wmg::LatticePoint right = {p[0] + 1, p[1]};
    wmg::LatticePoint up = {p[0], p[1] + 1};
    if (set.contains(right)) {
      builder.arc(wmg::point_to_string(p), "a", wmg::point_to_string(right));
    }
    if (set.contains(up)) {
      builder.arc(wmg::point_to_string(p), "b", wmg::point_to_string(up));
    }
  }
  return builder.build();
}

// Four-place net realizing the staircase: marking components trace
// 1 + 2i - j, 6 - 2i + 7j, 33 + i - 7j and 10 - i over the lattice points.
inline wmg::System golden_staircase_net() {
  using wmg::PlaceDescriptor;
  std::vector<std::pair<std::string, PlaceDescriptor>> places;
  places.push_back({"p", {"a", 2, "b", 1, 1}});
  places.push_back({"pp", {"b", 7, "a", 2, 6}});
  places.push_back({"ppp", {"a", 1, "b", 7, 33}});
  places.push_back({"pq", {std::nullopt, 0, "a", 1, 10}});
  return wmg::build_system(places);
}

// The path a a b b: its lattice points {(0,0),(1,0),(2,0),(2,1),(2,2)}
// miss the hull point (1,1), so it is not synthesizable.
inline wmg::Lts aabb_path_lts() {
  wmg::Lts::Builder builder;
  builder.initial("s0");
  builder.arc("s0", "a", "s1");
  builder.arc("s1", "a", "s2");
  builder.arc("s2", "b", "s3");
  builder.arc("s3", "b", "s4");
  return builder.build();
}

// Three states, one arc: the state "far" is unreachable, so every
// synthesis entry point must reject the system.
inline wmg::Lts three_point_lts() {
  wmg::Lts::Builder builder;
  builder.initial("s0");
  builder.arc("s0", "a", "s1");
  builder.state("far");
  return builder.build();
}

// The full unit square over {a, b}: the smallest synthesizable
// two-dimensional behaviour.
inline wmg::Lts square_lts() {
  wmg::Lts::Builder builder;
  builder.initial("s00");
  builder.arc("s00", "a", "s10");
  builder.arc("s00", "b", "s01");
  builder.arc("s10", "b", "s11");
  builder.arc("s01", "a", "s11");
  return builder.build();
}

}  // namespace fixtures
