#include "wmg/net.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>

#include "wmg/rational.hpp"

namespace wmg {

// ---------------------------------------------------------------------------
// WeightedNet

int WeightedNet::place_index(const std::string& name) const {
  auto it = place_index_.find(name);
  if (it == place_index_.end()) {
    fail(ErrorCode::PreconditionViolated, "unknown place '" + name + "'");
  }
  return it->second;
}

int WeightedNet::transition_index(const std::string& name) const {
  auto it = transition_index_.find(name);
  if (it == transition_index_.end()) {
    fail(ErrorCode::PreconditionViolated, "unknown transition '" + name + "'");
  }
  return it->second;
}

long long WeightedNet::weight_pt(int place, int transition) const {
  auto it = weights_pt_[place].find(transition);
  return it == weights_pt_[place].end() ? 0 : it->second;
}

long long WeightedNet::weight_tp(int transition, int place) const {
  auto it = weights_tp_[place].find(transition);
  return it == weights_tp_[place].end() ? 0 : it->second;
}

std::vector<int> WeightedNet::consumers(int place) const {
  std::vector<int> result;
  for (const auto& [t, w] : weights_pt_[place]) result.push_back(t);
  return result;
}

std::vector<int> WeightedNet::producers(int place) const {
  std::vector<int> result;
  for (const auto& [t, w] : weights_tp_[place]) result.push_back(t);
  return result;
}

bool WeightedNet::same_shape(const WeightedNet& other) const {
  if (std::set<std::string>(places_.begin(), places_.end()) !=
      std::set<std::string>(other.places_.begin(), other.places_.end())) {
    return false;
  }
  if (transitions_ != other.transitions_) return false;  // both sorted
  for (int p = 0; p < num_places(); ++p) {
    int q = other.place_index_.at(places_[p]);
    for (int t = 0; t < num_transitions(); ++t) {
      if (weight_pt(p, t) != other.weight_pt(q, t)) return false;
      if (weight_tp(t, p) != other.weight_tp(t, q)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// WeightedNet::Builder

WeightedNet::Builder& WeightedNet::Builder::place(const std::string& name) {
  if (std::count(place_order_.begin(), place_order_.end(), name) > 0) {
    fail(ErrorCode::DuplicatePlace, "place '" + name + "' declared twice",
         name);
  }
  place_order_.push_back(name);
  return *this;
}

WeightedNet::Builder& WeightedNet::Builder::transition(
    const std::string& name) {
  if (std::count(transition_order_.begin(), transition_order_.end(), name) ==
      0) {
    transition_order_.push_back(name);
  }
  return *this;
}

WeightedNet::Builder& WeightedNet::Builder::consume(
    const std::string& place, const std::string& transition,
    long long weight) {
  if (weight <= 0) {
    fail(ErrorCode::PreconditionViolated, "arc weights must be positive");
  }
  consume_[{place, transition}] += weight;
  this->transition(transition);
  return *this;
}

WeightedNet::Builder& WeightedNet::Builder::produce(
    const std::string& transition, const std::string& place,
    long long weight) {
  if (weight <= 0) {
    fail(ErrorCode::PreconditionViolated, "arc weights must be positive");
  }
  produce_[{place, transition}] += weight;
  this->transition(transition);
  return *this;
}

WeightedNet WeightedNet::Builder::build() {
  WeightedNet net;
  net.places_ = place_order_;
  for (int i = 0; i < static_cast<int>(net.places_.size()); ++i) {
    net.place_index_[net.places_[i]] = i;
  }
  net.transitions_ = transition_order_;
  std::sort(net.transitions_.begin(), net.transitions_.end());
  for (int i = 0; i < static_cast<int>(net.transitions_.size()); ++i) {
    net.transition_index_[net.transitions_[i]] = i;
    if (net.place_index_.count(net.transitions_[i]) > 0) {
      fail(ErrorCode::PreconditionViolated,
           "name '" + net.transitions_[i] +
               "' used for both a place and a transition");
    }
  }
  net.weights_pt_.resize(net.places_.size());
  net.weights_tp_.resize(net.places_.size());
  for (const auto& [key, w] : consume_) {
    int p = net.place_index(key.first);
    int t = net.transition_index(key.second);
    net.weights_pt_[p][t] = w;
  }
  for (const auto& [key, w] : produce_) {
    int p = net.place_index(key.first);
    int t = net.transition_index(key.second);
    net.weights_tp_[p][t] = w;
  }
  net.pre_.resize(net.transitions_.size());
  net.post_.resize(net.transitions_.size());
  for (int p = 0; p < net.num_places(); ++p) {
    for (const auto& [t, w] : net.weights_pt_[p]) net.pre_[t].emplace_back(p, w);
    for (const auto& [t, w] : net.weights_tp_[p]) net.post_[t].emplace_back(p, w);
  }
  return net;
}

// ---------------------------------------------------------------------------
// Descriptor assembly

WeightedNet build_net(
    const std::vector<std::pair<std::string, PlaceDescriptor>>& places,
    const std::vector<std::string>& extra_transitions) {
  WeightedNet::Builder builder;
  for (const auto& [name, desc] : places) {
    builder.place(name);
    if (desc.input && desc.output && *desc.input == *desc.output) {
      fail(ErrorCode::SelfLoopPlace,
           "place '" + name + "' would connect transition '" + *desc.input +
               "' to itself",
           name);
    }
    if (desc.input) builder.produce(*desc.input, name, desc.in_weight);
    if (desc.output) builder.consume(name, *desc.output, desc.out_weight);
    if (desc.initial_tokens < 0) {
      fail(ErrorCode::PreconditionViolated,
           "place '" + name + "' has a negative token count");
    }
  }
  for (const auto& t : extra_transitions) builder.transition(t);
  return builder.build();
}

System build_system(
    const std::vector<std::pair<std::string, PlaceDescriptor>>& places,
    const std::vector<std::string>& extra_transitions) {
  System system{build_net(places, extra_transitions), {}};
  system.initial.resize(places.size());
  for (const auto& [name, desc] : places) {
    system.initial[system.net.place_index(name)] = desc.initial_tokens;
  }
  return system;
}

// ---------------------------------------------------------------------------
// Firing and reachability

int blocking_place(const WeightedNet& net, const Marking& marking,
                   int transition) {
  for (const auto& [p, w] : net.pre(transition)) {
    if (marking[p] < w) return p;
  }
  return -1;
}

bool enabled(const WeightedNet& net, const Marking& marking, int transition) {
  return blocking_place(net, marking, transition) < 0;
}

Marking fire(const WeightedNet& net, const Marking& marking, int transition) {
  int blocked = blocking_place(net, marking, transition);
  if (blocked >= 0) {
    fail(ErrorCode::NotEnabled,
         "transition '" + net.transition_name(transition) +
             "' is blocked by place '" + net.place_name(blocked) + "'",
         net.transition_name(transition) + " " + net.place_name(blocked));
  }
  Marking next = marking;
  for (const auto& [p, w] : net.pre(transition)) next[p] -= w;
  for (const auto& [p, w] : net.post(transition)) next[p] += w;
  return next;
}

Marking fire(const WeightedNet& net, const Marking& marking,
             const std::string& transition) {
  return fire(net, marking, net.transition_index(transition));
}

std::string serialize_marking(const WeightedNet& net, const Marking& marking) {
  assert(marking.size() == static_cast<size_t>(net.num_places()));
  std::string s;
  for (int p = 0; p < net.num_places(); ++p) {
    if (p > 0) s += ";";
    s += net.place_name(p) + "=" + std::to_string(marking[p]);
  }
  return s;
}

namespace {

Lts explore(const System& system, long long state_bound, int depth_limit) {
  const WeightedNet& net = system.net;
  Lts::Builder builder;
  std::map<Marking, int> depth_of;
  std::deque<Marking> queue;

  std::string initial_name = serialize_marking(net, system.initial);
  builder.initial(initial_name);
  for (const auto& t : net.transitions()) builder.label(t);
  depth_of[system.initial] = 0;
  queue.push_back(system.initial);

  while (!queue.empty()) {
    Marking current = queue.front();
    queue.pop_front();
    int depth = depth_of[current];
    if (depth_limit >= 0 && depth >= depth_limit) continue;
    std::string current_name = serialize_marking(net, current);
    for (int t = 0; t < net.num_transitions(); ++t) {
      if (!enabled(net, current, t)) continue;
      Marking next = fire(net, current, t);
      auto [it, inserted] = depth_of.emplace(next, depth + 1);
      if (inserted) {
        if (static_cast<long long>(depth_of.size()) > state_bound) {
          fail(ErrorCode::BoundExceeded,
               "more than " + std::to_string(state_bound) +
                   " reachable markings");
        }
        queue.push_back(next);
      }
      builder.arc(current_name, net.transition_name(t),
                  serialize_marking(net, next));
    }
  }
  return builder.build();
}

}  // namespace

Lts reachability_graph(const System& system, long long state_bound) {
  return explore(system, state_bound, -1);
}

Lts truncated_reachability_graph(const System& system, int depth,
                                 long long state_bound) {
  return explore(system, state_bound, depth);
}

// ---------------------------------------------------------------------------
// WMG shape and T-semiflows

WmgCheck is_wmg(const WeightedNet& net) {
  for (int p = 0; p < net.num_places(); ++p) {
    if (net.producers(p).size() > 1) {
      return {false, "place '" + net.place_name(p) +
                         "' has more than one input transition"};
    }
    if (net.consumers(p).size() > 1) {
      return {false, "place '" + net.place_name(p) +
                         "' has more than one output transition"};
    }
  }
  return {};
}

ParikhVector minimal_t_semiflow(const WeightedNet& net) {
  WmgCheck shape = is_wmg(net);
  if (!shape) {
    fail(ErrorCode::NotWmg, shape.witness);
  }
  int np = net.num_places();
  int nt = net.num_transitions();
  if (nt == 0) {
    fail(ErrorCode::NoSemiflow, "net has no transitions");
  }

  // Connectivity of the place/transition graph (ignoring direction).
  {
    int nodes = np + nt;  // places first, then transitions
    std::vector<std::vector<int>> adj(nodes);
    for (int p = 0; p < np; ++p) {
      for (int t : net.consumers(p)) {
        adj[p].push_back(np + t);
        adj[np + t].push_back(p);
      }
      for (int t : net.producers(p)) {
        adj[p].push_back(np + t);
        adj[np + t].push_back(p);
      }
    }
    std::vector<bool> seen(nodes, false);
    std::deque<int> queue{0};
    seen[0] = true;
    int visited = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : adj[v]) {
        if (!seen[u]) {
          seen[u] = true;
          ++visited;
          queue.push_back(u);
        }
      }
    }
    if (visited != nodes) {
      fail(ErrorCode::NotConnected,
           "the place/transition graph is not connected");
    }
  }

  // Kernel of the incidence matrix by rational Gaussian elimination.
  std::vector<std::vector<Rat>> matrix(np, std::vector<Rat>(nt, Rat(0)));
  for (int p = 0; p < np; ++p) {
    for (int t = 0; t < nt; ++t) matrix[p][t] = Rat(net.incidence(p, t));
  }
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < nt && rank < np; ++col) {
    int sel = -1;
    for (int row = rank; row < np; ++row) {
      if (!matrix[row][col].is_zero()) {
        sel = row;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(matrix[rank], matrix[sel]);
    Rat inv = Rat(1) / matrix[rank][col];
    for (int j = 0; j < nt; ++j) matrix[rank][j] *= inv;
    for (int row = 0; row < np; ++row) {
      if (row == rank || matrix[row][col].is_zero()) continue;
      Rat f = matrix[row][col];
      for (int j = 0; j < nt; ++j) matrix[row][j] -= f * matrix[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(nt, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < nt; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  if (free_cols.empty()) {
    fail(ErrorCode::NoSemiflow, "the incidence matrix has a trivial kernel");
  }
  if (free_cols.size() > 1) {
    // Cannot happen for a connected weighted marked graph; the weights of a
    // shared circuit tie every pair of transition counts together.
    fail(ErrorCode::NoSemiflow, "the incidence-matrix kernel is not a line");
  }

  // Kernel vector: free variable 1, pivots back-substituted.
  std::vector<Rat> v(nt, Rat(0));
  v[free_cols[0]] = Rat(1);
  for (int r = 0; r < rank; ++r) {
    v[pivot_col[r]] = -matrix[r][free_cols[0]];
  }

  long long denom_lcm = 1;
  for (const Rat& x : v) denom_lcm = lcm_ll(denom_lcm, x.den());
  std::vector<long long> ints(nt);
  for (int t = 0; t < nt; ++t) {
    ints[t] = (v[t] * Rat(denom_lcm)).num();
  }
  long long g = 0;
  for (long long x : ints) g = gcd_ll(g, x);
  if (g > 1) {
    for (long long& x : ints) x /= g;
  }
  bool any_neg = std::any_of(ints.begin(), ints.end(),
                             [](long long x) { return x < 0; });
  if (any_neg) {
    bool any_pos = std::any_of(ints.begin(), ints.end(),
                               [](long long x) { return x > 0; });
    if (any_pos) {
      fail(ErrorCode::NoSemiflow, "the kernel vector changes sign");
    }
    for (long long& x : ints) x = -x;
  }
  for (long long x : ints) {
    if (x == 0) {
      fail(ErrorCode::NoSemiflow, "the kernel vector has an empty entry");
    }
  }

  ParikhVector result;
  for (int t = 0; t < nt; ++t) result.counts[net.transition_name(t)] = ints[t];
  return result;
}

}  // namespace wmg
