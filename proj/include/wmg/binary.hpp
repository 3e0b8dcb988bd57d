// Cyclic solvability of binary words and reversible binary systems.
//
// A binary word w with letter counts (n, m), n <= m after role assignment,
// is cyclically solvable by a two-place circuit if and only if its counts
// are coprime and w is a rotation of the canonical word
// a b^{q_0} a b^{q_1} ... a b^{q_{n-1}}, where the quotient sequence q and
// remainder sequence r satisfy r_0 = 0, r_i + m = q_i * n + r_{i+1},
// 0 <= r_{i+1} < n.  The circuit then needs exactly n + m - 1 tokens.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wmg/errors.hpp"
#include "wmg/lts.hpp"
#include "wmg/net.hpp"

namespace wmg {

struct QuotientProfile {
  long long n = 0;
  long long m = 0;
  std::vector<long long> quotients;   // q_0 .. q_{n-1}
  std::vector<long long> remainders;  // r_0 .. r_{n-1}, r_0 = 0
};

// Requires 1 <= n <= m (OrderViolated) and gcd(n, m) = 1 (NotCoprime).
QuotientProfile quotient_sequence(long long n, long long m);

// Expands the profile into the canonical word over the two given labels.
std::vector<std::string> canonical_word(const QuotientProfile& profile,
                                        const std::string& label_a,
                                        const std::string& label_b);

// Two-place circulatory net over labels {label_a, label_b}:
//   p_(a,b): label_a -(m)-> place -(n)-> label_b
//   p_(b,a): label_b -(n)-> place -(m)-> label_a
// label_a is the letter with the smaller count (ties break
// lexicographically); n is its count, m the other.  Words over a single
// letter degenerate to a system with one transition and no places
// (label_b empty, m = 0).
struct BinaryCircuit {
  System system;
  std::string label_a, label_b;
  long long n = 0, m = 0;

  long long total_tokens() const;
};

// Builds the circuit for the given role labels with the canonical start
// marking (p_(a,b) = 0, p_(b,a) = tokens): only label_a is enabled there.
BinaryCircuit binary_circuit(const std::string& label_a,
                             const std::string& label_b, long long n,
                             long long m, long long tokens_ab,
                             long long tokens_ba);

struct BinarySolution {
  BinaryCircuit circuit;
  std::vector<std::string> canonical;  // the canonical rotation of the word
  long long rotation_offset = 0;       // word = rotate(canonical, offset)
};

// Decides cyclic solvability of a binary word and, when solvable, returns
// the circuit whose reachability graph is certified isomorphic to the
// word's circular transition system.  Errors: NotPrimeParikh,
// NotARotation (witness carries the canonical word), CertificationFailed.
BinarySolution solve_binary_cyclic(const std::vector<std::string>& word);

// Number of reachability-graph states of a binary circuit with coprime
// weights (n, m) and k >= n + m - 1 tokens: always k + 1 (every token
// distribution over the two places occurs).  Errors: NotCoprime,
// BelowThreshold for k < n + m - 1.
long long predict_state_count(long long n, long long m, long long k);

// The unique k-state transition system over {a, b} that is reversible,
// deterministic, persistent and has small-cycle counts (n, m): the
// reachability graph of the circuit with k - 1 tokens.  Errors: NotCoprime,
// NoSolution when k < n + m (no such system exists below that size).
Lts reversible_binary_lts(long long n, long long m, long long k);

// Given a transition system satisfying the structural properties and with a
// prime full-support small-cycle vector, finds the unique token
// distribution of the (k-1)-token circuit matching it (scanning p_(a,b) in
// increasing order and returning the first isomorphic match).  Errors:
// PropertyBViolated, PropertyCViolated, NoSolution, NoMarkingMatches.
BinaryCircuit synthesize_reversible_binary(const Lts& lts);

// Single-place unbounded candidate for infinite binary behaviour:
//   label_a -(m)-> place -(n)-> label_b, i0 initial tokens,
// over labels {a, b}.  Errors: NotCoprime.
System infinite_binary_candidate(long long n, long long m, long long i0);

// The least block a^x b^y whose net effect removes exactly one token from
// the candidate place: from Bezout coefficients of n and m, normalized so
// that x, y >= 0.  Returns (x, y).  Errors: NotCoprime.
std::pair<long long, long long> bezout_block(long long n, long long m);

struct DivergenceReport {
  bool equivalent = true;
  std::string net_state, lts_state, label, reason;
};

// Compares the depth-truncated reachability graph of `system` against a
// finite prefix `lts` (every state of which must lie within `depth` arcs of
// its initial state).  Enabled-label sets are compared on every state
// strictly inside the horizon; the first divergence is reported.
DivergenceReport verify_infinite_binary(const System& system, const Lts& lts,
                                        int depth);

}  // namespace wmg
