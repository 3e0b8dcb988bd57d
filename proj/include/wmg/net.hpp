// Weighted Petri nets, marked systems, firing, reachability graphs, the
// weighted-marked-graph shape check, and minimal T-semiflows.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wmg/errors.hpp"
#include "wmg/lts.hpp"

namespace wmg {

// One place of a weighted marked graph: at most one producing transition
// (`input`, adding `in_weight` tokens per firing) and at most one consuming
// transition (`output`, removing `out_weight`).
struct PlaceDescriptor {
  std::optional<std::string> input;
  long long in_weight = 0;
  std::optional<std::string> output;
  long long out_weight = 0;
  long long initial_tokens = 0;
};

// General weighted net.  Places keep construction order; transitions are
// sorted lexicographically at build time, which fixes the firing order used
// by every reachability traversal.  Place and transition name sets must be
// disjoint.
class WeightedNet {
 public:
  class Builder;

  int num_places() const { return static_cast<int>(places_.size()); }
  int num_transitions() const { return static_cast<int>(transitions_.size()); }
  const std::vector<std::string>& places() const { return places_; }
  const std::vector<std::string>& transitions() const { return transitions_; }
  int place_index(const std::string& name) const;
  int transition_index(const std::string& name) const;
  const std::string& place_name(int index) const { return places_[index]; }
  const std::string& transition_name(int index) const {
    return transitions_[index];
  }

  long long weight_pt(int place, int transition) const;  // consumed by firing
  long long weight_tp(int transition, int place) const;  // produced by firing
  long long incidence(int place, int transition) const {
    return weight_tp(transition, place) - weight_pt(place, transition);
  }

  // (place, weight) lists, sorted by place index.
  const std::vector<std::pair<int, long long>>& pre(int transition) const {
    return pre_[transition];
  }
  const std::vector<std::pair<int, long long>>& post(int transition) const {
    return post_[transition];
  }
  // Transitions consuming from / producing into a place, sorted.
  std::vector<int> consumers(int place) const;
  std::vector<int> producers(int place) const;

  bool same_shape(const WeightedNet& other) const;

 private:
  friend class Builder;

  std::vector<std::string> places_;
  std::map<std::string, int> place_index_;
  std::vector<std::string> transitions_;
  std::map<std::string, int> transition_index_;
  // weights_pt_[p][t] > 0 when the place feeds the transition.
  std::vector<std::map<int, long long>> weights_pt_;
  std::vector<std::map<int, long long>> weights_tp_;
  std::vector<std::vector<std::pair<int, long long>>> pre_, post_;
};

class WeightedNet::Builder {
 public:
  Builder& place(const std::string& name);       // errors on duplicates
  Builder& transition(const std::string& name);  // idempotent
  // Arc place -> transition (consumption) of the given weight.
  Builder& consume(const std::string& place, const std::string& transition,
                   long long weight);
  // Arc transition -> place (production).
  Builder& produce(const std::string& transition, const std::string& place,
                   long long weight);
  WeightedNet build();

 private:
  std::vector<std::string> place_order_;
  std::vector<std::string> transition_order_;
  std::map<std::pair<std::string, std::string>, long long> consume_, produce_;
};

// Assembles a net from place descriptors.  Checks names: duplicate places
// error with DuplicatePlace, a place whose input and output transition
// coincide errors with SelfLoopPlace (the result would not be a marked
// graph).  `extra_transitions` declares transitions no place mentions.
WeightedNet build_net(
    const std::vector<std::pair<std::string, PlaceDescriptor>>& places,
    const std::vector<std::string>& extra_transitions = {});

using Marking = std::vector<long long>;  // tokens per place, by place index

struct System {
  WeightedNet net;
  Marking initial;

  bool same_shape(const System& other) const {
    return net.same_shape(other.net) && initial == other.initial;
  }
};

System build_system(
    const std::vector<std::pair<std::string, PlaceDescriptor>>& places,
    const std::vector<std::string>& extra_transitions = {});

bool enabled(const WeightedNet& net, const Marking& marking, int transition);
// Index of the first place blocking the transition, or -1 when enabled.
int blocking_place(const WeightedNet& net, const Marking& marking,
                   int transition);
// Fires one transition; errors with NotEnabled naming the transition and
// the blocking place.
Marking fire(const WeightedNet& net, const Marking& marking, int transition);
Marking fire(const WeightedNet& net, const Marking& marking,
             const std::string& transition);

// "p1=v1;p2=v2" in place order; the empty string for a net with no places.
std::string serialize_marking(const WeightedNet& net, const Marking& marking);

// Breadth-first reachability graph.  States are serialized markings, the
// initial state is the initial marking, and transitions fire in the net's
// (sorted) transition order.  Errors with BoundExceeded as soon as more
// than `state_bound` distinct markings have been discovered.
Lts reachability_graph(const System& system, long long state_bound = 100000);

// Reachability graph cut at a firing depth: contains every marking within
// `depth` firings, with outgoing arcs only on markings strictly inside the
// horizon.  Used to compare unbounded systems against finite prefixes.
Lts truncated_reachability_graph(const System& system, int depth,
                                 long long state_bound = 100000);

struct WmgCheck {
  bool ok = true;
  std::string witness;  // first place violating the shape, with the reason

  explicit operator bool() const { return ok; }
};

// A net is a weighted marked graph when every place has at most one input
// and at most one output transition.
WmgCheck is_wmg(const WeightedNet& net);

// The unique minimal transition-count vector fired by any cycle of the
// reachability graph: the positive generator of the incidence matrix's
// kernel, scaled to coprime integers.  Requires a weighted marked graph
// (NotWmg) that is connected as a place/transition graph (NotConnected);
// errors with NoSemiflow when the kernel is trivial or lacks full support.
ParikhVector minimal_t_semiflow(const WeightedNet& net);

}  // namespace wmg
