// End-to-end tests for the command-line tool: every subcommand is exercised
// through a real process invocation, and the printed key/value lines plus the
// exit code are checked against hand-computed expectations.
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "wmg/binary.hpp"
#include "wmg/lts.hpp"
#include "wmg/net.hpp"
#include "wmg/textio.hpp"

using namespace wmg;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr, interleaved
};

CliResult run_cli(const std::string& args) {
  std::string command =
      std::string("\"") + WMG_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Writes `content` to a uniquely named temp file; removes it on destruction.
struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content)
      : path((std::filesystem::temp_directory_path() / name).string()) {
    write_file(path, content);
  }
  ~TempFile() { std::remove(path.c_str()); }
};

// Reserves a temp path for files the CLI itself writes.
struct TempPath {
  std::string path;
  explicit TempPath(const std::string& name)
      : path((std::filesystem::temp_directory_path() / name).string()) {}
  ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli.usage_errors_exit_2") {
  CHECK(run_cli("").exit_code == 2);                         // no subcommand
  CHECK(run_cli("no-such-command").exit_code == 2);          // unknown command
  CHECK(run_cli("solve-binary").exit_code == 2);             // missing word
  CHECK(run_cli("solve-binary ab --frobnicate").exit_code == 2);
  CHECK(run_cli("solve-binary ab --format svg").exit_code == 2);
  auto help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(contains(help.output, "solve-binary"));
  CHECK(contains(help.output, "infinite-check"));
}

TEST_CASE("cli.solve_binary_reports_the_circuit") {
  auto r = run_cli("solve-binary " + word_to_string(fixtures::word_8_21()));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "verdict: Solvable\n"));
  CHECK(contains(r.output, "label_a: a\n"));
  CHECK(contains(r.output, "label_b: b\n"));
  CHECK(contains(r.output, "n: 8\n"));
  CHECK(contains(r.output, "m: 21\n"));
  CHECK(contains(r.output, "canonical_word: abbabbbabbabbbabbbabbabbbabbb\n"));
  CHECK(contains(r.output, "rotation_offset: 0\n"));
  CHECK(contains(r.output, "tokens_total: 28\n"));
  CHECK(contains(r.output, "states: 29\n"));
  CHECK(contains(r.output, "certified: true\n"));
}

TEST_CASE("cli.solve_binary_rotated_word") {
  auto r = run_cli("solve-binary aab");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "label_a: b\n"));
  CHECK(contains(r.output, "label_b: a\n"));
  CHECK(contains(r.output, "canonical_word: baa\n"));
  CHECK(contains(r.output, "rotation_offset: 1\n"));
  CHECK(contains(r.output, "marking: p_b_a=2;p_a_b=0\n"));
}

TEST_CASE("cli.solve_binary_single_letter") {
  auto r = run_cli("solve-binary a");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "label_a: a\n"));
  CHECK_FALSE(contains(r.output, "label_b:"));
  CHECK(contains(r.output, "tokens_total: 0\n"));
  CHECK(contains(r.output, "states: 1\n"));
}

TEST_CASE("cli.solve_binary_negative_verdicts") {
  auto rotation = run_cli("solve-binary aabbb");
  CHECK(rotation.exit_code == 1);
  CHECK(contains(rotation.output, "error: NotARotation\n"));
  CHECK(contains(rotation.output, "witness: ababb\n"));

  auto parikh = run_cli("solve-binary abab");
  CHECK(parikh.exit_code == 1);
  CHECK(contains(parikh.output, "error: NotPrimeParikh\n"));

  auto domain = run_cli("solve-binary abc");
  CHECK(domain.exit_code == 2);
  CHECK(contains(domain.output, "error: PreconditionViolated\n"));

  auto empty = run_cli("solve-binary \"\"");
  CHECK(empty.exit_code == 2);
  CHECK(contains(empty.output, "error: EmptyWord\n"));
}

TEST_CASE("cli.solve_binary_writes_the_net") {
  TempPath out("cli_solve_binary_out.net");
  auto r = run_cli("solve-binary ab --out \"" + out.path + "\"");
  CHECK(r.exit_code == 0);
  System reparsed = parse_net_file(out.path);
  CHECK(reparsed.net.num_places() == 2);
  CHECK(reparsed.net.num_transitions() == 2);

  TempPath dot("cli_solve_binary_out.dot");
  auto rdot =
      run_cli("solve-binary ab --out \"" + dot.path + "\" --format dot");
  CHECK(rdot.exit_code == 0);
  CHECK(read_file(dot.path).rfind("digraph", 0) == 0);
}

TEST_CASE("cli.solve_cyclic_theorem5") {
  auto r = run_cli("solve-cyclic abb");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "verdict: SolvableByTheorem5\n"));
  CHECK(contains(r.output, "pair_a_b: ok"));
  CHECK(contains(r.output, "places: 2\n"));
  CHECK(contains(r.output, "states: 3\n"));
  CHECK(contains(r.output, "certified: true\n"));
}

TEST_CASE("cli.solve_cyclic_ternary_verdicts") {
  auto solvable = run_cli("solve-cyclic abc");
  CHECK(solvable.exit_code == 0);
  CHECK(contains(solvable.output, "verdict: SolvableByTheorem6\n"));
  CHECK(contains(solvable.output, "places: 6\n"));
  CHECK(contains(solvable.output, "certified: true\n"));

  auto unsolvable = run_cli("solve-cyclic aabbc");
  CHECK(unsolvable.exit_code == 1);
  CHECK(contains(unsolvable.output, "verdict: UnsolvableByTheorem6\n"));
  CHECK(contains(unsolvable.output, "witness_pair: a,b\n"));
}

TEST_CASE("cli.solve_cyclic_inconclusive_and_oracle_fallback") {
  auto structural = run_cli("solve-cyclic aacbbdabd");
  CHECK(structural.exit_code == 1);
  CHECK(contains(structural.output, "verdict: Inconclusive\n"));
  CHECK(contains(structural.output,
                 "note: pair {a,b} fails the sufficient condition\n"));
  CHECK(contains(structural.output, "pair_a_b: fail"));

  auto oracle = run_cli("solve-cyclic aacbbdabd --oracle");
  CHECK(oracle.exit_code == 0);
  CHECK(contains(oracle.output, "verdict: OracleSolvable\n"));
  CHECK(contains(oracle.output, "places: 12\n"));
  CHECK(contains(oracle.output, "states: 9\n"));
  CHECK(contains(oracle.output, "certified: true\n"));
}

TEST_CASE("cli.oracle_subcommand") {
  auto solvable = run_cli("oracle ab");
  CHECK(solvable.exit_code == 0);
  CHECK(contains(solvable.output, "verdict: OracleSolvable\n"));
  CHECK(contains(solvable.output, "marking: p_a_b=0;p_b_a=1\n"));
  CHECK(contains(solvable.output, "states: 2\n"));

  auto unsolvable = run_cli("oracle aabbc");
  CHECK(unsolvable.exit_code == 1);
  CHECK(contains(unsolvable.output, "verdict: OracleUnsolvable\n"));
  CHECK(contains(unsolvable.output,
                 "note: no marking of the pairwise skeleton replays the "
                 "word\n"));

  auto budget = run_cli("oracle aacbbdabd --budget 1000");
  CHECK(budget.exit_code == 3);
  CHECK(contains(budget.output, "error: SearchSpaceTooLarge\n"));
}

TEST_CASE("cli.synth_acyclic") {
  TempFile square("cli_square.lts", emit_lts_text(fixtures::square_lts()));
  auto r = run_cli("synth-acyclic \"" + square.path + "\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "verdict: Synthesized\n"));
  CHECK(contains(r.output, "states: 4\n"));
  CHECK(contains(r.output, "regions: 2\n"));
  CHECK(contains(r.output, "region_1: loss=b k=1 h=0 l=1\n"));
  CHECK(contains(r.output, "region_2: loss=a"));
  CHECK(contains(r.output, "counters: (none)\n"));
  CHECK(contains(r.output, "places: 2\n"));
  CHECK(contains(r.output, "certified: true\n"));

  TempFile path_file("cli_aabb_path.lts",
                     emit_lts_text(fixtures::aabb_path_lts()));
  auto nonconvex = run_cli("synth-acyclic \"" + path_file.path + "\"");
  CHECK(nonconvex.exit_code == 1);
  CHECK(contains(nonconvex.output, "error: NonConvex\n"));
  CHECK(contains(nonconvex.output, "witness: (1,1)\n"));

  auto missing = run_cli("synth-acyclic /nonexistent/nowhere.lts");
  CHECK(missing.exit_code == 2);
  CHECK(contains(missing.output, "error: ParseError\n"));
}

TEST_CASE("cli.synth_reversible") {
  TempFile cycle("cli_abb_cycle.lts",
                 emit_lts_text(circular_lts_from_word(fixtures::word("abb"))));
  auto r = run_cli("synth-reversible \"" + cycle.path + "\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "verdict: Synthesized\n"));
  CHECK(contains(r.output, "label_a: a\n"));
  CHECK(contains(r.output, "label_b: b\n"));
  CHECK(contains(r.output, "n: 1\n"));
  CHECK(contains(r.output, "m: 2\n"));
  CHECK(contains(r.output, "tokens_total: 2\n"));
  CHECK(contains(r.output, "marking: p_a_b=0;p_b_a=2\n"));
  CHECK(contains(r.output, "states: 3\n"));
  CHECK(contains(r.output, "certified: true\n"));

  TempFile path_file("cli_path_not_reversible.lts",
                     emit_lts_text(fixtures::aabb_path_lts()));
  auto rejected = run_cli("synth-reversible \"" + path_file.path + "\"");
  CHECK(rejected.exit_code == 1);
  CHECK(contains(rejected.output, "error: PropertyCViolated\n"));
}

TEST_CASE("cli.simulate") {
  TempFile net("cli_two_state.net",
               emit_net_text(fixtures::two_state_trajectory_net()));
  auto r = run_cli("simulate \"" + net.path + "\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "states: 2\n"));
  CHECK(contains(r.output, "arcs: 1\n"));
  CHECK(contains(r.output, "initial: p1=1;p2=0\n"));
  CHECK(contains(r.output, "deadlocks: 1\n"));

  TempPath out("cli_two_state_rg.lts");
  auto saved = run_cli("simulate \"" + net.path + "\" --out \"" + out.path +
                       "\"");
  CHECK(saved.exit_code == 0);
  Lts rg = parse_lts_file(out.path);
  CHECK(rg.num_states() == 2);

  // A transition with no inputs is always enabled, so the marking grows
  // without bound and a small state budget must be exhausted.
  TempFile unbounded("cli_unbounded.net", "place p tokens=0 in=t:1\n");
  auto exceeded = run_cli("simulate \"" + unbounded.path + "\" --bound 5");
  CHECK(exceeded.exit_code == 3);
  CHECK(contains(exceeded.output, "error: BoundExceeded\n"));
}

TEST_CASE("cli.isomorphic") {
  TempFile left("cli_iso_left.lts",
                emit_lts_text(circular_lts_from_word(fixtures::word("abb"))));
  TempFile renamed("cli_iso_renamed.lts",
                   "initial q2\narc q2 a q0\narc q0 b q1\narc q1 b q2\n");
  auto same = run_cli("isomorphic \"" + left.path + "\" \"" + renamed.path +
                      "\"");
  CHECK(same.exit_code == 0);
  CHECK(contains(same.output, "isomorphic: true\n"));
  CHECK(contains(same.output, "states: 3\n"));

  TempFile other("cli_iso_other.lts",
                 emit_lts_text(circular_lts_from_word(fixtures::word("aab"))));
  auto diff = run_cli("isomorphic \"" + left.path + "\" \"" + other.path +
                      "\"");
  CHECK(diff.exit_code == 1);
  CHECK(contains(diff.output, "isomorphic: false\n"));
  CHECK(contains(diff.output, "reason: "));
}

TEST_CASE("cli.predict_states") {
  auto ok = run_cli("predict-states 3 5 10");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.output, "states: 11\n"));

  auto below = run_cli("predict-states 3 5 6");
  CHECK(below.exit_code == 2);
  CHECK(contains(below.output, "error: BelowThreshold\n"));

  auto gcd = run_cli("predict-states 2 4 9");
  CHECK(gcd.exit_code == 2);
  CHECK(contains(gcd.output, "error: NotCoprime\n"));
}

TEST_CASE("cli.infinite_check") {
  System candidate = infinite_binary_candidate(2, 3, 4);
  TempFile prefix("cli_infinite_prefix.lts",
                  emit_lts_text(truncated_reachability_graph(candidate, 30)));
  auto same = run_cli("infinite-check 2 3 4 \"" + prefix.path + "\"");
  CHECK(same.exit_code == 0);
  CHECK(contains(same.output, "equivalent: true\n"));
  CHECK(contains(same.output, "depth: 30\n"));
  CHECK(contains(same.output, "block: a^1 b^2\n"));

  System other = infinite_binary_candidate(2, 3, 5);
  TempFile wrong("cli_infinite_wrong.lts",
                 emit_lts_text(truncated_reachability_graph(other, 30)));
  auto diff = run_cli("infinite-check 2 3 4 \"" + wrong.path + "\"");
  CHECK(diff.exit_code == 1);
  CHECK(contains(diff.output, "equivalent: false\n"));
  CHECK(contains(diff.output, "divergence_net_state: p_a_b=1\n"));
  CHECK(contains(diff.output, "divergence_lts_state: p_a_b=2\n"));
  CHECK(contains(diff.output, "divergence_label: b\n"));
  CHECK(contains(diff.output, "reason: "));
}

TEST_CASE("cli.export_dot") {
  TempFile lts_file("cli_export.lts",
                    emit_lts_text(circular_lts_from_word(fixtures::word("ab"))));
  auto lts_dot = run_cli("export-dot \"" + lts_file.path + "\"");
  CHECK(lts_dot.exit_code == 0);
  CHECK(contains(lts_dot.output, "digraph"));
  CHECK(contains(lts_dot.output, "peripheries=2"));

  TempFile net_file("cli_export.net",
                    emit_net_text(fixtures::two_state_trajectory_net()));
  auto net_dot = run_cli("export-dot \"" + net_file.path + "\"");
  CHECK(net_dot.exit_code == 0);
  CHECK(contains(net_dot.output, "shape=box"));

  TempPath out("cli_export_out.dot");
  auto saved = run_cli("export-dot \"" + net_file.path + "\" --out \"" +
                       out.path + "\"");
  CHECK(saved.exit_code == 0);
  CHECK_FALSE(contains(saved.output, "digraph"));
  CHECK(read_file(out.path).rfind("digraph", 0) == 0);

  TempFile garbage("cli_export_garbage.txt", "hello\nworld\n");
  auto bad = run_cli("export-dot \"" + garbage.path + "\"");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.output, "error: ParseError\n"));
  CHECK(contains(bad.output, "cannot detect the file type"));
}
