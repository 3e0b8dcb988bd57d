// Labelled transition systems: construction, structural checks, Parikh
// machinery, cycle analysis, and rooted isomorphism.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wmg/errors.hpp"

namespace wmg {

// Per-label occurrence counts of a word or firing sequence.
struct ParikhVector {
  std::map<std::string, long long> counts;

  long long at(const std::string& label) const;  // zero when absent
  bool zero() const;
  // True when the gcd of the positive counts is one.  The all-zero vector
  // is not prime.
  bool prime() const;
  std::vector<std::string> support() const;  // labels with positive count
  bool operator==(const ParikhVector&) const = default;
  bool operator<(const ParikhVector& o) const { return counts < o.counts; }
  std::string to_string() const;  // "a:3,b:1" in label order
};

ParikhVector parikh_of(const std::vector<std::string>& word);

// Finite labelled transition system with a designated initial state.
//
// States keep their construction order (their identifiers are opaque);
// labels are sorted lexicographically on build so label indices are stable
// across runs.  Arcs are rejected as duplicates when (src, label, dst)
// repeats; nondeterminism (same source and label, different targets) is
// representable and detected by the property checks, not by the builder.
class Lts {
 public:
  class Builder;

  int num_states() const { return static_cast<int>(states_.size()); }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int initial() const { return initial_; }

  int state_index(const std::string& name) const;
  const std::string& state_name(int index) const { return states_[index]; }
  int label_index(const std::string& name) const;
  const std::string& label_name(int index) const { return labels_[index]; }
  bool has_state(const std::string& name) const;

  // Outgoing arcs of a state as (label, target), sorted; incoming arcs as
  // (label, source), sorted.
  const std::vector<std::pair<int, int>>& out(int state) const {
    return out_[state];
  }
  const std::vector<std::pair<int, int>>& in(int state) const {
    return in_[state];
  }
  long long arc_count() const { return arc_count_; }

  // Unique successor of `state` under `label`; empty when there is no such
  // arc or the state has several (nondeterministic) candidates.
  std::optional<int> successor(int state, int label) const;
  std::vector<int> successors(int state, int label) const;
  std::vector<int> predecessors(int state, int label) const;
  bool enables(int state, int label) const;

  bool forward_deterministic() const;
  std::vector<bool> reachable_mask() const;  // forward closure from initial

  // Structural equality up to ordering: same state-name set, label set,
  // arc set and initial state.
  bool same_shape(const Lts& other) const;

 private:
  friend class Builder;

  std::vector<std::string> states_;
  std::map<std::string, int> state_index_;
  std::vector<std::string> labels_;
  std::map<std::string, int> label_index_;
  std::vector<std::vector<std::pair<int, int>>> out_;
  std::vector<std::vector<std::pair<int, int>>> in_;
  int initial_ = -1;
  long long arc_count_ = 0;
};

class Lts::Builder {
 public:
  // States auto-declare on first mention; explicit declaration is only
  // needed for isolated states.  Labels auto-declare from arcs; explicit
  // declaration covers labels that no arc uses.
  Builder& state(const std::string& name);
  Builder& label(const std::string& name);
  Builder& arc(const std::string& src, const std::string& label,
               const std::string& dst);
  Builder& initial(const std::string& name);
  Lts build();

 private:
  std::vector<std::string> state_order_;
  std::set<std::string> state_set_;
  std::set<std::string> label_set_;
  std::vector<std::tuple<std::string, std::string, std::string>> arcs_;
  std::set<std::tuple<std::string, std::string, std::string>> arc_set_;
  std::optional<std::string> initial_;
};

// The cycle s0 -w[0]-> s1 -w[1]-> ... -w[k-1]-> s0.  Errors on empty words.
Lts circular_lts_from_word(const std::vector<std::string>& word);

// The five structural properties needed before synthesis is attempted:
// forward/backward determinism, forward/backward persistence (the diamond
// condition, quantified over all states and label pairs), and total
// reachability.  Witnesses record the first failing state (or state/label
// triple) in lexicographic order.
struct PropertyReport {
  bool forward_deterministic = true;
  bool backward_deterministic = true;
  bool forward_persistent = true;
  bool backward_persistent = true;
  bool totally_reachable = true;
  // (property, witness) pairs for each failing property.
  std::vector<std::pair<std::string, std::string>> witnesses;

  bool all() const {
    return forward_deterministic && backward_deterministic &&
           forward_persistent && backward_persistent && totally_reachable;
  }
  std::string first_failure() const;  // "" when all() holds
};

PropertyReport check_basic_properties(const Lts& lts);

// Parikh-minimal cycles.  Enumerates elementary cycles (every minimal cycle
// Parikh vector is realized by an elementary cycle, since a closed walk's
// vector dominates each elementary cycle in its decomposition) and keeps the
// componentwise-minimal vectors.  `ambiguous` flags incomparable minima.
struct SmallCycleResult {
  std::optional<ParikhVector> parikh;  // the unique minimal vector, if any
  bool ambiguous = false;
  // parikh exists, is prime, and its support covers every label.
  bool property_c = false;
};

SmallCycleResult small_cycle_parikh(const Lts& lts,
                                    long long cycle_budget = 1000000);

// Parikh vector of the (unique) path from the initial state to each state.
// Requires an acyclic, totally reachable, forward-deterministic input;
// errors with InconsistentDistances naming the first state whose incoming
// paths disagree.
std::map<std::string, ParikhVector> parikh_distances(const Lts& lts);

// Rooted label-preserving isomorphism for deterministic, totally reachable
// systems (synchronized traversal from the two initial states).
struct IsoResult {
  enum class Outcome { Isomorphic, Mismatch, NotTotallyReachable };

  Outcome outcome = Outcome::Mismatch;
  std::map<std::string, std::string> bijection;  // filled when isomorphic
  std::string detail;                            // first point of divergence

  explicit operator bool() const { return outcome == Outcome::Isomorphic; }
};

IsoResult lts_isomorphic(const Lts& a, const Lts& b);

}  // namespace wmg
