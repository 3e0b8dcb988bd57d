#include "wmg/lts.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace wmg {

// ---------------------------------------------------------------------------
// ParikhVector

long long ParikhVector::at(const std::string& label) const {
  auto it = counts.find(label);
  return it == counts.end() ? 0 : it->second;
}

bool ParikhVector::zero() const {
  for (const auto& [label, c] : counts) {
    if (c != 0) return false;
  }
  return true;
}

bool ParikhVector::prime() const {
  long long g = 0;
  for (const auto& [label, c] : counts) {
    assert(c >= 0);
    g = std::gcd(g, c);
  }
  return g == 1;
}

std::vector<std::string> ParikhVector::support() const {
  std::vector<std::string> result;
  for (const auto& [label, c] : counts) {
    if (c > 0) result.push_back(label);
  }
  return result;
}

std::string ParikhVector::to_string() const {
  std::string s;
  for (const auto& [label, c] : counts) {
    if (!s.empty()) s += ",";
    s += label + ":" + std::to_string(c);
  }
  return s;
}

ParikhVector parikh_of(const std::vector<std::string>& word) {
  ParikhVector p;
  for (const auto& letter : word) ++p.counts[letter];
  return p;
}

// ---------------------------------------------------------------------------
// Lts

int Lts::state_index(const std::string& name) const {
  auto it = state_index_.find(name);
  if (it == state_index_.end()) {
    fail(ErrorCode::PreconditionViolated, "unknown state '" + name + "'");
  }
  return it->second;
}

bool Lts::has_state(const std::string& name) const {
  return state_index_.count(name) > 0;
}

int Lts::label_index(const std::string& name) const {
  auto it = label_index_.find(name);
  if (it == label_index_.end()) {
    fail(ErrorCode::LabelAbsent, "unknown label '" + name + "'");
  }
  return it->second;
}

std::optional<int> Lts::successor(int state, int label) const {
  std::optional<int> found;
  for (const auto& [l, t] : out_[state]) {
    if (l != label) continue;
    if (found) return std::nullopt;
    found = t;
  }
  return found;
}

std::vector<int> Lts::successors(int state, int label) const {
  std::vector<int> result;
  for (const auto& [l, t] : out_[state]) {
    if (l == label) result.push_back(t);
  }
  return result;
}

std::vector<int> Lts::predecessors(int state, int label) const {
  std::vector<int> result;
  for (const auto& [l, s] : in_[state]) {
    if (l == label) result.push_back(s);
  }
  return result;
}

bool Lts::enables(int state, int label) const {
  for (const auto& [l, t] : out_[state]) {
    if (l == label) return true;
  }
  return false;
}

bool Lts::forward_deterministic() const {
  for (int s = 0; s < num_states(); ++s) {
    for (size_t i = 1; i < out_[s].size(); ++i) {
      if (out_[s][i].first == out_[s][i - 1].first) return false;
    }
  }
  return true;
}

std::vector<bool> Lts::reachable_mask() const {
  std::vector<bool> seen(num_states(), false);
  std::deque<int> queue;
  if (initial_ >= 0) {
    seen[initial_] = true;
    queue.push_back(initial_);
  }
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (const auto& [l, t] : out_[s]) {
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return seen;
}

bool Lts::same_shape(const Lts& other) const {
  if (initial_ < 0 || other.initial_ < 0) return false;
  if (states_[initial_] != other.states_[other.initial_]) return false;
  std::set<std::string> s1(states_.begin(), states_.end());
  std::set<std::string> s2(other.states_.begin(), other.states_.end());
  if (s1 != s2) return false;
  if (labels_ != other.labels_) return false;  // both sorted
  std::set<std::tuple<std::string, std::string, std::string>> a1, a2;
  for (int s = 0; s < num_states(); ++s) {
    for (const auto& [l, t] : out_[s]) {
      a1.emplace(states_[s], labels_[l], states_[t]);
    }
  }
  for (int s = 0; s < other.num_states(); ++s) {
    for (const auto& [l, t] : other.out_[s]) {
      a2.emplace(other.states_[s], other.labels_[l], other.states_[t]);
    }
  }
  return a1 == a2;
}

// ---------------------------------------------------------------------------
// Lts::Builder

Lts::Builder& Lts::Builder::state(const std::string& name) {
  if (state_set_.insert(name).second) state_order_.push_back(name);
  return *this;
}

Lts::Builder& Lts::Builder::label(const std::string& name) {
  label_set_.insert(name);
  return *this;
}

Lts::Builder& Lts::Builder::arc(const std::string& src,
                                const std::string& label,
                                const std::string& dst) {
  if (!arc_set_.emplace(src, label, dst).second) {
    fail(ErrorCode::DuplicateArc,
         "duplicate arc " + src + " -" + label + "-> " + dst,
         src + " " + label + " " + dst);
  }
  state(src);
  state(dst);
  this->label(label);
  arcs_.emplace_back(src, label, dst);
  return *this;
}

Lts::Builder& Lts::Builder::initial(const std::string& name) {
  state(name);
  initial_ = name;
  return *this;
}

Lts Lts::Builder::build() {
  if (!initial_) {
    fail(ErrorCode::PreconditionViolated,
         "transition system has no initial state");
  }
  Lts lts;
  lts.states_ = state_order_;
  for (int i = 0; i < static_cast<int>(lts.states_.size()); ++i) {
    lts.state_index_[lts.states_[i]] = i;
  }
  lts.labels_.assign(label_set_.begin(), label_set_.end());  // sorted
  for (int i = 0; i < static_cast<int>(lts.labels_.size()); ++i) {
    lts.label_index_[lts.labels_[i]] = i;
  }
  lts.out_.resize(lts.states_.size());
  lts.in_.resize(lts.states_.size());
  for (const auto& [src, label, dst] : arcs_) {
    int s = lts.state_index_[src];
    int t = lts.state_index_[dst];
    int l = lts.label_index_[label];
    lts.out_[s].emplace_back(l, t);
    lts.in_[t].emplace_back(l, s);
    ++lts.arc_count_;
  }
  for (auto& v : lts.out_) std::sort(v.begin(), v.end());
  for (auto& v : lts.in_) std::sort(v.begin(), v.end());
  lts.initial_ = lts.state_index_[*initial_];
  return lts;
}

// ---------------------------------------------------------------------------
// Operations

Lts circular_lts_from_word(const std::vector<std::string>& word) {
  if (word.empty()) {
    fail(ErrorCode::EmptyWord, "cannot build a circular system from an empty word");
  }
  int k = static_cast<int>(word.size());
  Lts::Builder builder;
  builder.initial("s0");
  for (int i = 0; i < k; ++i) {
    builder.arc("s" + std::to_string(i), word[i],
                "s" + std::to_string((i + 1) % k));
  }
  return builder.build();
}

std::string PropertyReport::first_failure() const {
  if (witnesses.empty()) return "";
  return witnesses.front().first + " (" + witnesses.front().second + ")";
}

PropertyReport check_basic_properties(const Lts& lts) {
  PropertyReport report;
  int n = lts.num_states();

  // Scan states in lexicographic name order so witnesses are canonical.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return lts.state_name(a) < lts.state_name(b);
  });

  auto record = [&](bool& flag, const std::string& property,
                    const std::string& witness) {
    if (!flag) return;  // keep only the first witness per property
    flag = false;
    report.witnesses.emplace_back(property, witness);
  };

  for (int s : order) {
    const auto& arcs = lts.out(s);
    for (size_t i = 1; i < arcs.size(); ++i) {
      if (arcs[i].first == arcs[i - 1].first &&
          arcs[i].second != arcs[i - 1].second) {
        record(report.forward_deterministic, "forward_deterministic",
               "state=" + lts.state_name(s) +
                   " label=" + lts.label_name(arcs[i].first));
        break;
      }
    }
  }
  for (int s : order) {
    const auto& arcs = lts.in(s);
    for (size_t i = 1; i < arcs.size(); ++i) {
      if (arcs[i].first == arcs[i - 1].first &&
          arcs[i].second != arcs[i - 1].second) {
        record(report.backward_deterministic, "backward_deterministic",
               "state=" + lts.state_name(s) +
                   " label=" + lts.label_name(arcs[i].first));
        break;
      }
    }
  }

  // Forward persistence: two labels enabled at s must close a diamond.
  int num_labels = static_cast<int>(lts.labels().size());
  for (int s : order) {
    for (int a = 0; a < num_labels && report.forward_persistent; ++a) {
      for (int b = a + 1; b < num_labels && report.forward_persistent; ++b) {
        auto sa = lts.successors(s, a);
        auto sb = lts.successors(s, b);
        for (int s1 : sa) {
          for (int s2 : sb) {
            auto c1 = lts.successors(s1, b);
            auto c2 = lts.successors(s2, a);
            bool closed = false;
            for (int x : c1) {
              closed = closed || std::count(c2.begin(), c2.end(), x) > 0;
            }
            if (!closed) {
              record(report.forward_persistent, "forward_persistent",
                     "state=" + lts.state_name(s) + " labels=" +
                         lts.label_name(a) + "," + lts.label_name(b));
            }
          }
        }
      }
    }
  }

  // Backward persistence: two labels entering s must open a diamond.
  for (int s : order) {
    for (int a = 0; a < num_labels && report.backward_persistent; ++a) {
      for (int b = a + 1; b < num_labels && report.backward_persistent; ++b) {
        auto pa = lts.predecessors(s, a);
        auto pb = lts.predecessors(s, b);
        for (int s1 : pa) {
          for (int s2 : pb) {
            auto c1 = lts.predecessors(s1, b);
            auto c2 = lts.predecessors(s2, a);
            bool opened = false;
            for (int x : c1) {
              opened = opened || std::count(c2.begin(), c2.end(), x) > 0;
            }
            if (!opened) {
              record(report.backward_persistent, "backward_persistent",
                     "state=" + lts.state_name(s) + " labels=" +
                         lts.label_name(a) + "," + lts.label_name(b));
            }
          }
        }
      }
    }
  }

  auto reachable = lts.reachable_mask();
  for (int s : order) {
    if (!reachable[s]) {
      record(report.totally_reachable, "totally_reachable",
             "state=" + lts.state_name(s));
      break;
    }
  }
  return report;
}

SmallCycleResult small_cycle_parikh(const Lts& lts, long long cycle_budget) {
  int n = lts.num_states();
  int num_labels = static_cast<int>(lts.labels().size());
  std::set<std::vector<long long>> vectors;
  long long found = 0;
  std::vector<char> on_path(n, 0);
  std::vector<long long> counts(num_labels, 0);

  // Each elementary cycle is enumerated exactly once, rooted at its
  // smallest state index (the walk never descends below the root).
  std::function<void(int, int)> visit = [&](int root, int s) {
    on_path[s] = 1;
    for (const auto& [label, t] : lts.out(s)) {
      if (t == root) {
        if (++found > cycle_budget) {
          fail(ErrorCode::CycleBudgetExceeded,
               "more than " + std::to_string(cycle_budget) +
                   " elementary cycles");
        }
        ++counts[label];
        vectors.insert(counts);
        --counts[label];
      } else if (t > root && !on_path[t]) {
        ++counts[label];
        visit(root, t);
        --counts[label];
      }
    }
    on_path[s] = 0;
  };
  for (int root = 0; root < n; ++root) visit(root, root);

  SmallCycleResult result;
  if (vectors.empty()) return result;

  // Componentwise-minimal vectors, kept incrementally.
  std::vector<std::vector<long long>> minima;
  auto leq = [](const std::vector<long long>& a,
                const std::vector<long long>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) return false;
    }
    return true;
  };
  for (const auto& v : vectors) {
    bool dominated = false;
    for (const auto& m : minima) {
      if (leq(m, v)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    std::erase_if(minima,
                  [&](const std::vector<long long>& m) { return leq(v, m); });
    minima.push_back(v);
  }

  if (minima.size() > 1) {
    result.ambiguous = true;
    return result;
  }
  ParikhVector parikh;
  for (int l = 0; l < num_labels; ++l) {
    parikh.counts[lts.label_name(l)] = minima.front()[l];
  }
  result.property_c =
      parikh.prime() &&
      static_cast<int>(parikh.support().size()) == num_labels;
  result.parikh = std::move(parikh);
  return result;
}

namespace {

// Three-color reachable-subgraph cycle detection.
bool has_cycle(const Lts& lts) {
  int n = lts.num_states();
  std::vector<int> color(n, 0);
  std::function<bool(int)> visit = [&](int s) -> bool {
    color[s] = 1;
    for (const auto& [l, t] : lts.out(s)) {
      if (color[t] == 1) return true;
      if (color[t] == 0 && visit(t)) return true;
    }
    color[s] = 2;
    return false;
  };
  for (int s = 0; s < n; ++s) {
    if (color[s] == 0 && visit(s)) return true;
  }
  return false;
}

}  // namespace

std::map<std::string, ParikhVector> parikh_distances(const Lts& lts) {
  if (!lts.forward_deterministic()) {
    fail(ErrorCode::PreconditionViolated,
         "parikh distances require a forward-deterministic input");
  }
  auto reachable = lts.reachable_mask();
  for (int s = 0; s < lts.num_states(); ++s) {
    if (!reachable[s]) {
      fail(ErrorCode::PreconditionViolated,
           "parikh distances require total reachability; state '" +
               lts.state_name(s) + "' is unreachable",
           lts.state_name(s));
    }
  }
  if (has_cycle(lts)) {
    fail(ErrorCode::PreconditionViolated,
         "parikh distances require an acyclic input");
  }

  int num_labels = static_cast<int>(lts.labels().size());
  std::vector<std::optional<std::vector<long long>>> dist(lts.num_states());
  dist[lts.initial()] = std::vector<long long>(num_labels, 0);
  std::deque<int> queue{lts.initial()};
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (const auto& [label, t] : lts.out(s)) {
      std::vector<long long> candidate = *dist[s];
      ++candidate[label];
      if (!dist[t]) {
        dist[t] = std::move(candidate);
        queue.push_back(t);
      } else if (*dist[t] != candidate) {
        fail(ErrorCode::InconsistentDistances,
             "paths to state '" + lts.state_name(t) +
                 "' have different label counts",
             lts.state_name(t));
      }
    }
  }

  std::map<std::string, ParikhVector> result;
  for (int s = 0; s < lts.num_states(); ++s) {
    ParikhVector p;
    for (int l = 0; l < num_labels; ++l) {
      p.counts[lts.label_name(l)] = (*dist[s])[l];
    }
    result[lts.state_name(s)] = std::move(p);
  }
  return result;
}

IsoResult lts_isomorphic(const Lts& a, const Lts& b) {
  if (!a.forward_deterministic() || !b.forward_deterministic()) {
    fail(ErrorCode::NotDeterministic,
         "isomorphism check requires forward-deterministic inputs");
  }
  IsoResult result;
  auto ra = a.reachable_mask();
  for (int s = 0; s < a.num_states(); ++s) {
    if (!ra[s]) {
      result.outcome = IsoResult::Outcome::NotTotallyReachable;
      result.detail = "left state '" + a.state_name(s) + "' is unreachable";
      return result;
    }
  }
  auto rb = b.reachable_mask();
  for (int s = 0; s < b.num_states(); ++s) {
    if (!rb[s]) {
      result.outcome = IsoResult::Outcome::NotTotallyReachable;
      result.detail = "right state '" + b.state_name(s) + "' is unreachable";
      return result;
    }
  }

  auto enabled_names = [](const Lts& lts, int s) {
    std::vector<std::string> names;
    for (const auto& [l, t] : lts.out(s)) names.push_back(lts.label_name(l));
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;  // out() is label-sorted
  };
  auto join = [](const std::vector<std::string>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s + "}";
  };

  std::vector<int> fwd(a.num_states(), -1), bwd(b.num_states(), -1);
  std::deque<std::pair<int, int>> queue;
  fwd[a.initial()] = b.initial();
  bwd[b.initial()] = a.initial();
  queue.emplace_back(a.initial(), b.initial());
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    auto ex = enabled_names(a, x);
    auto ey = enabled_names(b, y);
    if (ex != ey) {
      result.outcome = IsoResult::Outcome::Mismatch;
      result.detail = "enabled labels differ at '" + a.state_name(x) +
                      "' / '" + b.state_name(y) + "': " + join(ex) + " vs " +
                      join(ey);
      return result;
    }
    for (const auto& label : ex) {
      int x2 = *a.successor(x, a.label_index(label));
      int y2 = *b.successor(y, b.label_index(label));
      if (fwd[x2] == -1 && bwd[y2] == -1) {
        fwd[x2] = y2;
        bwd[y2] = x2;
        queue.emplace_back(x2, y2);
      } else if (fwd[x2] != y2 || bwd[y2] != x2) {
        result.outcome = IsoResult::Outcome::Mismatch;
        result.detail = "state pairing conflict after '" + label + "' from '" +
                        a.state_name(x) + "' / '" + b.state_name(y) + "'";
        return result;
      }
    }
  }

  result.outcome = IsoResult::Outcome::Isomorphic;
  for (int s = 0; s < a.num_states(); ++s) {
    result.bijection[a.state_name(s)] = b.state_name(fwd[s]);
  }
  return result;
}

}  // namespace wmg
