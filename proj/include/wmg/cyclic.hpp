// Cyclic solvability of words over three or more letters: the
// pairwise-projection sufficient condition, the ternary characterization,
// and the exhaustive marking-search oracle.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wmg/errors.hpp"
#include "wmg/lts.hpp"
#include "wmg/net.hpp"

namespace wmg {

// Unordered letter pairs {x, y} that occur adjacently somewhere in the
// cyclic word (including the wrap-around position).
std::set<std::pair<std::string, std::string>> contiguous_pairs(
    const std::vector<std::string>& word);

struct PairProjection {
  std::pair<std::string, std::string> pair;  // sorted
  std::vector<std::string> projected;        // u: the word restricted to the pair
  std::vector<std::string> root;             // primitive v with u = v^power
  long long power = 1;
  bool contiguous = false;
};

// Restriction of the word to the two letters of `pair`, with its primitive
// root.  Errors with LabelAbsent when a letter does not occur.
PairProjection project(const std::vector<std::string>& word,
                       std::pair<std::string, std::string> pair);

enum class CyclicVerdict {
  SolvableByTheorem5,
  SolvableByTheorem6,
  UnsolvableByTheorem6,
  OracleSolvable,
  OracleUnsolvable,
  Inconclusive,
};

const char* name(CyclicVerdict verdict);

struct PairDiagnostic {
  std::pair<std::string, std::string> pair;
  bool ok = false;
  std::string note;  // e.g. "root aabb has non-prime counts"
};

struct CyclicDecision {
  CyclicVerdict verdict = CyclicVerdict::Inconclusive;
  std::optional<System> system;  // certified net on solvable verdicts
  std::vector<PairDiagnostic> evidence;
  std::string note;  // e.g. the first failing pair, or the found marking
};

// Sufficient condition: if every contiguous pair's projection is a power of
// a primitive word with prime counts that is itself cyclically solvable,
// the word is solvable and the merged pair circuits solve it (certified).
// Never returns a negative verdict: failures yield Inconclusive.
// Errors: NotPrimeParikh, CertificationFailed.
CyclicDecision theorem5_check(const std::vector<std::string>& word);

// Union of the binary circuits of all contiguous-pair projection roots,
// sharing transitions; certified against the word's circular transition
// system.  Errors: PairConditionFailed (naming the pair), plus those of
// theorem5_check's per-pair machinery.
System merge_circuits(const std::vector<std::string>& word);

// Characterization for words over exactly three letters whose counts take
// the shape (x, x, y) with gcd(x, y) = 1: the pairwise condition is then
// necessary as well as sufficient, so the verdict is SolvableByTheorem6 or
// UnsolvableByTheorem6 (note names the first failing pair).  Inputs outside
// that shape error with OutOfTheoremScope.
CyclicDecision ternary_decide(const std::vector<std::string>& word);

// Ground-truth decision by exhaustive search over the complete pairwise
// skeleton: one place per ordered letter pair with weights fixed by the
// counts, every initial marking up to the structural token caps.
// Candidates are filtered by replaying the word (each step must enable
// exactly the word's letter); the first marking found is the
// lexicographically least, and the final net is certified.  Errors:
// NotPrimeParikh, AlphabetTooLarge (more than five letters),
// SearchSpaceTooLarge when the marking count exceeds `budget`.
CyclicDecision brute_force_cyclic_oracle(const std::vector<std::string>& word,
                                         long long budget = 100000000);

}  // namespace wmg
