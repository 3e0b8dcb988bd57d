#include "wmg/binary.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <tuple>

#include "wmg/textio.hpp"

namespace wmg {

namespace {

void require_coprime(long long n, long long m) {
  if (n < 1 || m < 1) {
    fail(ErrorCode::PreconditionViolated, "counts must be >= 1");
  }
  if (std::gcd(n, m) != 1) {
    fail(ErrorCode::NotCoprime,
         "gcd(" + std::to_string(n) + ", " + std::to_string(m) + ") = " +
             std::to_string(std::gcd(n, m)));
  }
}

}  // namespace

QuotientProfile quotient_sequence(long long n, long long m) {
  if (n < 1 || n > m) {
    fail(ErrorCode::OrderViolated,
         "need 1 <= n <= m, got n=" + std::to_string(n) +
             " m=" + std::to_string(m));
  }
  require_coprime(n, m);
  QuotientProfile profile;
  profile.n = n;
  profile.m = m;
  long long r = 0;
  for (long long i = 0; i < n; ++i) {
    profile.remainders.push_back(r);
    profile.quotients.push_back((r + m) / n);
    r = (r + m) % n;
  }
  assert(r == 0);  // the remainders return to zero after one full round
  return profile;
}

std::vector<std::string> canonical_word(const QuotientProfile& profile,
                                        const std::string& label_a,
                                        const std::string& label_b) {
  std::vector<std::string> word;
  for (long long q : profile.quotients) {
    word.push_back(label_a);
    for (long long j = 0; j < q; ++j) word.push_back(label_b);
  }
  return word;
}

long long BinaryCircuit::total_tokens() const {
  long long sum = 0;
  for (long long v : system.initial) sum += v;
  return sum;
}

BinaryCircuit binary_circuit(const std::string& label_a,
                             const std::string& label_b, long long n,
                             long long m, long long tokens_ab,
                             long long tokens_ba) {
  // p_(a,b):  label_a -(m)-> place -(n)-> label_b
  // p_(b,a):  label_b -(n)-> place -(m)-> label_a
  std::vector<std::pair<std::string, PlaceDescriptor>> places;
  places.emplace_back("p_" + label_a + "_" + label_b,
                      PlaceDescriptor{label_a, m, label_b, n, tokens_ab});
  places.emplace_back("p_" + label_b + "_" + label_a,
                      PlaceDescriptor{label_b, n, label_a, m, tokens_ba});
  BinaryCircuit circuit;
  circuit.system = build_system(places);
  circuit.label_a = label_a;
  circuit.label_b = label_b;
  circuit.n = n;
  circuit.m = m;
  return circuit;
}

BinarySolution solve_binary_cyclic(const std::vector<std::string>& word) {
  if (word.empty()) {
    fail(ErrorCode::EmptyWord, "cannot solve an empty word");
  }
  ParikhVector parikh = parikh_of(word);
  auto letters = parikh.support();
  if (letters.size() > 2) {
    fail(ErrorCode::PreconditionViolated,
         "binary solving takes words over at most two letters");
  }

  BinarySolution solution;
  if (letters.size() == 1) {
    // A single letter is cyclically solvable only as the one-letter word:
    // any repetition has count gcd > 1.
    if (parikh.counts.begin()->second != 1) {
      fail(ErrorCode::NotPrimeParikh,
           "letter counts " + parikh.to_string() + " have gcd > 1");
    }
    solution.circuit.system = build_system({}, {letters[0]});
    solution.circuit.label_a = letters[0];
    solution.circuit.n = 1;
    solution.canonical = word;
    solution.rotation_offset = 0;
  } else {
    const std::string& l0 = letters[0];
    const std::string& l1 = letters[1];
    // The letter with the smaller count plays the role of `a` (the rarer
    // letter); ties break lexicographically.
    std::string role_a = parikh.at(l0) <= parikh.at(l1) ? l0 : l1;
    std::string role_b = role_a == l0 ? l1 : l0;
    long long n = parikh.at(role_a);
    long long m = parikh.at(role_b);
    if (std::gcd(n, m) != 1) {
      fail(ErrorCode::NotPrimeParikh,
           "letter counts " + parikh.to_string() + " have gcd " +
               std::to_string(std::gcd(n, m)));
    }
    QuotientProfile profile = quotient_sequence(n, m);
    std::vector<std::string> canonical = canonical_word(profile, role_a, role_b);
    assert(canonical.size() == word.size());

    long long offset = -1;
    for (size_t shift = 0; shift < canonical.size() && offset < 0; ++shift) {
      bool match = true;
      for (size_t i = 0; i < word.size() && match; ++i) {
        match = word[i] == canonical[(shift + i) % canonical.size()];
      }
      if (match) offset = static_cast<long long>(shift);
    }
    if (offset < 0) {
      fail(ErrorCode::NotARotation,
           "the word is not a rotation of " + word_to_string(canonical),
           word_to_string(canonical));
    }

    // Canonical start marking: everything in p_(b,a), so only `a` fires.
    // Replaying the canonical prefix up to the rotation offset yields the
    // marking from which the input word itself is the unique cycle.
    solution.circuit = binary_circuit(role_a, role_b, n, m, 0, m + n - 1);
    Marking marking = solution.circuit.system.initial;
    for (long long i = 0; i < offset; ++i) {
      marking = fire(solution.circuit.system.net, marking, canonical[i]);
    }
    solution.circuit.system.initial = marking;
    solution.canonical = std::move(canonical);
    solution.rotation_offset = offset;
  }

  // Certify: the circuit's reachability graph must reproduce the word's
  // circular transition system exactly.
  Lts rg = reachability_graph(solution.circuit.system,
                              static_cast<long long>(word.size()) + 1);
  IsoResult iso = lts_isomorphic(rg, circular_lts_from_word(word));
  if (!iso) {
    fail(ErrorCode::CertificationFailed,
         "the synthesized circuit does not reproduce the word: " + iso.detail);
  }
  return solution;
}

long long predict_state_count(long long n, long long m, long long k) {
  require_coprime(n, m);
  if (k < n + m - 1) {
    fail(ErrorCode::BelowThreshold,
         "k=" + std::to_string(k) + " is below n+m-1=" +
             std::to_string(n + m - 1) +
             "; the all-distributions law does not apply");
  }
  // With at least n+m-1 tokens every distribution of the k tokens over the
  // two places is reachable, and the marking count is exactly k+1.
  return k + 1;
}

Lts reversible_binary_lts(long long n, long long m, long long k) {
  require_coprime(n, m);
  if (k < n + m) {
    fail(ErrorCode::NoSolution,
         "no reversible system with small-cycle counts (" + std::to_string(n) +
             "," + std::to_string(m) + ") has fewer than " +
             std::to_string(n + m) + " states");
  }
  BinaryCircuit circuit = binary_circuit("a", "b", n, m, 0, k - 1);
  return reachability_graph(circuit.system, k + 1);
}

BinaryCircuit synthesize_reversible_binary(const Lts& lts) {
  if (lts.labels().size() != 2) {
    fail(ErrorCode::PreconditionViolated,
         "reversible binary synthesis takes systems over exactly two labels");
  }
  PropertyReport report = check_basic_properties(lts);
  if (!report.all()) {
    fail(ErrorCode::PropertyBViolated, report.first_failure());
  }
  SmallCycleResult cycle = small_cycle_parikh(lts);
  if (!cycle.parikh) {
    fail(ErrorCode::PropertyCViolated,
         cycle.ambiguous ? "the minimal cycle counts are ambiguous"
                         : "the system has no cycles");
  }
  if (!cycle.property_c) {
    fail(ErrorCode::PropertyCViolated,
         "the minimal cycle counts " + cycle.parikh->to_string() +
             " are not prime with full support");
  }

  const std::string& l0 = lts.labels()[0];
  const std::string& l1 = lts.labels()[1];
  std::string role_a =
      cycle.parikh->at(l0) <= cycle.parikh->at(l1) ? l0 : l1;
  std::string role_b = role_a == l0 ? l1 : l0;
  long long n = cycle.parikh->at(role_a);
  long long m = cycle.parikh->at(role_b);
  long long k = lts.num_states();
  if (k < n + m) {
    fail(ErrorCode::NoSolution,
         "a reversible system with cycle counts (" + std::to_string(n) + "," +
             std::to_string(m) + ") needs at least " + std::to_string(n + m) +
             " states, got " + std::to_string(k));
  }

  // The circuit carries k-1 tokens; scan the distributions in increasing
  // p_(a,b) order and return the first whose reachability graph matches.
  for (long long i = 0; i <= k - 1; ++i) {
    BinaryCircuit circuit = binary_circuit(role_a, role_b, n, m, i, k - 1 - i);
    Lts rg = reachability_graph(circuit.system, k + 1);
    if (lts_isomorphic(rg, lts)) {
      return circuit;
    }
  }
  fail(ErrorCode::NoMarkingMatches,
       "no distribution of " + std::to_string(k - 1) +
           " tokens over the circuit matches the input");
}

System infinite_binary_candidate(long long n, long long m, long long i0) {
  require_coprime(n, m);
  if (i0 < 0) {
    fail(ErrorCode::PreconditionViolated, "token counts must be >= 0");
  }
  // Single place a -(m)-> p_(a,b) -(n)-> b; `a` is never blocked, so the
  // system is unbounded and its reachability graph is infinite.
  std::vector<std::pair<std::string, PlaceDescriptor>> places;
  places.emplace_back("p_a_b", PlaceDescriptor{"a", m, "b", n, i0});
  return build_system(places);
}

std::pair<long long, long long> bezout_block(long long n, long long m) {
  require_coprime(n, m);
  // Extended Euclid on (m, n): k*m + l*n == 1.
  long long k = 1, l = 0, k2 = 0, l2 = 1, a = m, b = n;
  while (b != 0) {
    long long q = a / b;
    std::tie(a, b) = std::pair(b, a - q * b);
    std::tie(k, k2) = std::pair(k2, k - q * k2);
    std::tie(l, l2) = std::pair(l2, l - q * l2);
  }
  assert(a == 1 && k * m + l * n == 1);
  // Normalize k into (-n, 0]; then l = (1 - k*m)/n is >= 0 and the block
  // a^{-k} b^{l} removes exactly one token from the candidate place.
  k %= n;
  if (k > 0) k -= n;
  l = (1 - k * m) / n;
  assert(l >= 0 && k * m + l * n == 1);
  return {-k, l};
}

DivergenceReport verify_infinite_binary(const System& system, const Lts& lts,
                                        int depth) {
  if (!lts.forward_deterministic()) {
    fail(ErrorCode::NotDeterministic,
         "the prefix must be forward deterministic");
  }
  Lts trunc = truncated_reachability_graph(system, depth);

  auto enabled_names = [](const Lts& g, int s) {
    std::vector<std::string> names;
    for (const auto& [l, t] : g.out(s)) names.push_back(g.label_name(l));
    return names;  // sorted, no duplicates in deterministic systems
  };
  auto first_difference = [](const std::vector<std::string>& a,
                             const std::vector<std::string>& b) {
    std::vector<std::string> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(diff));
    return diff.empty() ? std::string() : diff.front();
  };
  auto join = [](const std::vector<std::string>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s + "}";
  };

  DivergenceReport divergence;
  std::vector<int> fwd(trunc.num_states(), -1), bwd(lts.num_states(), -1);
  std::deque<std::tuple<int, int, int>> queue;
  fwd[trunc.initial()] = lts.initial();
  bwd[lts.initial()] = trunc.initial();
  queue.emplace_back(trunc.initial(), lts.initial(), 0);
  while (!queue.empty()) {
    auto [x, y, d] = queue.front();
    queue.pop_front();
    if (d >= depth) continue;  // the horizon carries no arcs to compare
    auto ex = enabled_names(trunc, x);
    auto ey = enabled_names(lts, y);
    if (ex != ey) {
      divergence.equivalent = false;
      divergence.net_state = trunc.state_name(x);
      divergence.lts_state = lts.state_name(y);
      divergence.label = first_difference(ex, ey);
      divergence.reason = "enabled labels differ: " + join(ex) + " vs " +
                          join(ey) + " at depth " + std::to_string(d);
      return divergence;
    }
    for (const auto& label : ex) {
      int x2 = *trunc.successor(x, trunc.label_index(label));
      int y2 = *lts.successor(y, lts.label_index(label));
      if (fwd[x2] == -1 && bwd[y2] == -1) {
        fwd[x2] = y2;
        bwd[y2] = x2;
        queue.emplace_back(x2, y2, d + 1);
      } else if (fwd[x2] != y2 || bwd[y2] != x2) {
        divergence.equivalent = false;
        divergence.net_state = trunc.state_name(x);
        divergence.lts_state = lts.state_name(y);
        divergence.label = label;
        divergence.reason = "states merge differently after '" + label +
                            "' at depth " + std::to_string(d);
        return divergence;
      }
    }
  }
  for (int s = 0; s < lts.num_states(); ++s) {
    if (bwd[s] == -1) {
      divergence.equivalent = false;
      divergence.lts_state = lts.state_name(s);
      divergence.reason = "the prefix has a state the system never reaches";
      return divergence;
    }
  }
  return divergence;
}

}  // namespace wmg
