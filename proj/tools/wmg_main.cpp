// Command-line front end for the weighted-marked-graph synthesis library.
//
// Exit codes: 0 for positive verdicts, 1 for negative verdicts
// (unsolvable / not isomorphic / not equivalent), 2 for malformed or
// out-of-domain input, 3 for exhausted budgets.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wmg/acyclic.hpp"
#include "wmg/binary.hpp"
#include "wmg/cyclic.hpp"
#include "wmg/errors.hpp"
#include "wmg/lts.hpp"
#include "wmg/net.hpp"
#include "wmg/textio.hpp"

namespace {

using namespace wmg;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BoundExceeded:
    case ErrorCode::CycleBudgetExceeded:
    case ErrorCode::SearchSpaceTooLarge:
      return 3;
    case ErrorCode::NotPrimeParikh:
    case ErrorCode::NotARotation:
    case ErrorCode::NoSolution:
    case ErrorCode::NoMarkingMatches:
    case ErrorCode::PropertyBViolated:
    case ErrorCode::PropertyCViolated:
    case ErrorCode::NonConvex:
    case ErrorCode::NoRegionExists:
    case ErrorCode::PairConditionFailed:
    case ErrorCode::CertificationFailed:
      return 1;
    default:
      return 2;
  }
}

void print_error(const Error& e) {
  std::cout << "error: " << name(e.code()) << "\n";
  std::cout << "detail: " << e.what() << "\n";
  if (!e.witness().empty()) std::cout << "witness: " << e.witness() << "\n";
}

void write_net_output(const System& system, const std::string& out,
                      const std::string& format) {
  if (out.empty()) return;
  write_file(out, format == "dot" ? emit_net_dot(system)
                                  : emit_net_text(system));
}

void print_pair_evidence(const CyclicDecision& decision) {
  for (const auto& diag : decision.evidence) {
    std::cout << "pair_" << diag.pair.first << "_" << diag.pair.second << ": "
              << (diag.ok ? "ok" : "fail") << " (" << diag.note << ")\n";
  }
}

long long count_deadlocks(const Lts& lts) {
  long long n = 0;
  for (int s = 0; s < lts.num_states(); ++s) {
    if (lts.out(s).empty()) ++n;
  }
  return n;
}

int run_solve_binary(const std::string& word_text, const std::string& out,
                     const std::string& format) {
  std::vector<std::string> word = parse_word(word_text);
  BinarySolution solution = solve_binary_cyclic(word);
  std::cout << "verdict: Solvable\n";
  std::cout << "word: " << word_to_string(word) << "\n";
  std::cout << "label_a: " << solution.circuit.label_a << "\n";
  if (!solution.circuit.label_b.empty()) {
    std::cout << "label_b: " << solution.circuit.label_b << "\n";
  }
  std::cout << "n: " << solution.circuit.n << "\n";
  std::cout << "m: " << solution.circuit.m << "\n";
  std::cout << "canonical_word: " << word_to_string(solution.canonical) << "\n";
  std::cout << "rotation_offset: " << solution.rotation_offset << "\n";
  std::cout << "tokens_total: " << solution.circuit.total_tokens() << "\n";
  std::cout << "marking: "
            << serialize_marking(solution.circuit.system.net,
                                 solution.circuit.system.initial)
            << "\n";
  std::cout << "states: " << word.size() << "\n";
  std::cout << "certified: true\n";
  write_net_output(solution.circuit.system, out, format);
  return 0;
}

int run_solve_cyclic(const std::string& word_text, bool use_oracle,
                     long long budget, const std::string& out,
                     const std::string& format) {
  std::vector<std::string> word = parse_word(word_text);
  ParikhVector parikh = parikh_of(word);

  CyclicDecision decision;
  bool ternary_applied = false;
  if (parikh.support().size() == 3) {
    try {
      decision = ternary_decide(word);
      ternary_applied = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OutOfTheoremScope) throw;
    }
  }
  if (!ternary_applied) {
    decision = theorem5_check(word);
  }
  if (decision.verdict == CyclicVerdict::Inconclusive && use_oracle) {
    decision = brute_force_cyclic_oracle(word, budget);
  }

  std::cout << "verdict: " << name(decision.verdict) << "\n";
  std::cout << "word: " << word_to_string(word) << "\n";
  std::cout << "parikh: " << parikh.to_string() << "\n";
  if (decision.verdict == CyclicVerdict::UnsolvableByTheorem6) {
    std::cout << "witness_pair: " << decision.note << "\n";
  } else if (!decision.note.empty()) {
    std::cout << "note: " << decision.note << "\n";
  }
  print_pair_evidence(decision);
  if (decision.system) {
    std::cout << "states: " << word.size() << "\n";
    std::cout << "places: " << decision.system->net.num_places() << "\n";
    std::cout << "certified: true\n";
    write_net_output(*decision.system, out, format);
  }
  switch (decision.verdict) {
    case CyclicVerdict::SolvableByTheorem5:
    case CyclicVerdict::SolvableByTheorem6:
    case CyclicVerdict::OracleSolvable:
      return 0;
    default:
      return 1;
  }
}

int run_oracle(const std::string& word_text, long long budget,
               const std::string& out, const std::string& format) {
  std::vector<std::string> word = parse_word(word_text);
  CyclicDecision decision = brute_force_cyclic_oracle(word, budget);
  std::cout << "verdict: " << name(decision.verdict) << "\n";
  std::cout << "word: " << word_to_string(word) << "\n";
  if (decision.verdict == CyclicVerdict::OracleSolvable) {
    std::cout << "marking: " << decision.note << "\n";
    std::cout << "states: " << word.size() << "\n";
    std::cout << "certified: true\n";
    write_net_output(*decision.system, out, format);
    return 0;
  }
  std::cout << "note: " << decision.note << "\n";
  return 1;
}

int run_synth_acyclic(const std::string& path, const std::string& out,
                      const std::string& format) {
  Lts lts = parse_lts_file(path);
  AcyclicSynthesis synthesis = synthesize_acyclic(lts);
  std::cout << "verdict: Synthesized\n";
  std::cout << "states: " << lts.num_states() << "\n";
  std::cout << "regions: " << synthesis.regions.size() << "\n";
  for (size_t i = 0; i < synthesis.regions.size(); ++i) {
    const WmgRegion& region = synthesis.regions[i];
    std::cout << "region_" << i + 1 << ": loss=" << region.loss_label;
    if (region.gain_label) std::cout << " gain=" << *region.gain_label;
    std::cout << " k=" << region.k << " h=" << region.h << " l=" << region.l
              << "\n";
  }
  std::cout << "counters: ";
  if (synthesis.counter_labels.empty()) {
    std::cout << "(none)\n";
  } else {
    for (size_t i = 0; i < synthesis.counter_labels.size(); ++i) {
      std::cout << (i ? "," : "") << synthesis.counter_labels[i];
    }
    std::cout << "\n";
  }
  std::cout << "places: " << synthesis.system.net.num_places() << "\n";
  std::cout << "certified: true\n";
  write_net_output(synthesis.system, out, format);
  return 0;
}

int run_synth_reversible(const std::string& path, const std::string& out,
                         const std::string& format) {
  Lts lts = parse_lts_file(path);
  BinaryCircuit circuit = synthesize_reversible_binary(lts);
  std::cout << "verdict: Synthesized\n";
  std::cout << "label_a: " << circuit.label_a << "\n";
  std::cout << "label_b: " << circuit.label_b << "\n";
  std::cout << "n: " << circuit.n << "\n";
  std::cout << "m: " << circuit.m << "\n";
  std::cout << "tokens_total: " << circuit.total_tokens() << "\n";
  std::cout << "marking: "
            << serialize_marking(circuit.system.net, circuit.system.initial)
            << "\n";
  std::cout << "states: " << lts.num_states() << "\n";
  std::cout << "certified: true\n";
  write_net_output(circuit.system, out, format);
  return 0;
}

int run_simulate(const std::string& path, long long bound,
                 const std::string& out, const std::string& format) {
  System system = parse_net_file(path);
  Lts rg = reachability_graph(system, bound);
  std::cout << "states: " << rg.num_states() << "\n";
  std::cout << "arcs: " << rg.arc_count() << "\n";
  std::cout << "initial: " << rg.state_name(rg.initial()) << "\n";
  std::cout << "deadlocks: " << count_deadlocks(rg) << "\n";
  if (!out.empty()) {
    write_file(out, format == "dot" ? emit_lts_dot(rg) : emit_lts_text(rg));
  }
  return 0;
}

int run_isomorphic(const std::string& path_a, const std::string& path_b) {
  Lts a = parse_lts_file(path_a);
  Lts b = parse_lts_file(path_b);
  IsoResult iso = lts_isomorphic(a, b);
  if (iso) {
    std::cout << "isomorphic: true\n";
    std::cout << "states: " << a.num_states() << "\n";
    return 0;
  }
  std::cout << "isomorphic: false\n";
  std::cout << "reason: " << iso.detail << "\n";
  return 1;
}

int run_predict_states(long long n, long long m, long long k) {
  std::cout << "states: " << predict_state_count(n, m, k) << "\n";
  return 0;
}

int run_infinite_check(long long n, long long m, long long i0,
                       const std::string& path, int depth) {
  System system = infinite_binary_candidate(n, m, i0);
  Lts prefix = parse_lts_file(path);
  DivergenceReport report = verify_infinite_binary(system, prefix, depth);
  std::cout << "equivalent: " << (report.equivalent ? "true" : "false") << "\n";
  std::cout << "depth: " << depth << "\n";
  auto block = bezout_block(n, m);
  std::cout << "block: a^" << block.first << " b^" << block.second << "\n";
  if (!report.equivalent) {
    if (!report.net_state.empty()) {
      std::cout << "divergence_net_state: " << report.net_state << "\n";
    }
    if (!report.lts_state.empty()) {
      std::cout << "divergence_lts_state: " << report.lts_state << "\n";
    }
    if (!report.label.empty()) {
      std::cout << "divergence_label: " << report.label << "\n";
    }
    std::cout << "reason: " << report.reason << "\n";
    return 1;
  }
  return 0;
}

int run_export_dot(const std::string& path, const std::string& out) {
  std::string text = read_file(path);
  // Detect the format from the first meaningful token.
  std::string first_token;
  for (size_t i = 0; i < text.size() && first_token.empty();) {
    size_t eol = text.find('\n', i);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(i, eol - i);
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t start = line.find_first_not_of(" \t\r");
    if (start != std::string::npos) {
      size_t end = line.find_first_of(" \t\r", start);
      first_token = line.substr(start, end - start);
    }
    i = eol + 1;
  }
  std::string dot;
  if (first_token == "initial") {
    dot = emit_lts_dot(parse_lts_text(text, path));
  } else if (first_token == "place" || first_token == "transition") {
    dot = emit_net_dot(parse_net_text(text, path));
  } else {
    fail(ErrorCode::ParseError,
         path + ":1: cannot detect the file type (expected 'initial', "
                "'place' or 'transition')");
  }
  if (out.empty()) {
    std::cout << dot;
  } else {
    write_file(out, dot);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Weighted-marked-graph synthesis: decide whether words and finite "
      "behaviours are realizable by circuit-shaped Petri nets, build the "
      "nets, and certify them by simulation."};
  app.require_subcommand(1);

  std::string word, path, path_b, out, format = "text";
  long long n = 0, m = 0, k = 0, i0 = 0;
  long long bound = 100000, budget = 100000000;
  int depth = 30;
  bool use_oracle = false;

  auto* solve_binary = app.add_subcommand(
      "solve-binary", "Solve a two-letter word by a circulatory circuit");
  solve_binary->add_option("word", word, "the word, e.g. abbab")->required();
  solve_binary->add_option("--out", out, "write the net to this file");
  solve_binary->add_option("--format", format, "net output format: text|dot")
      ->check(CLI::IsMember({"text", "dot"}));

  auto* solve_cyclic = app.add_subcommand(
      "solve-cyclic", "Decide cyclic solvability of a word");
  solve_cyclic->add_option("word", word, "the word")->required();
  solve_cyclic->add_flag("--oracle", use_oracle,
                         "fall back to the exhaustive oracle when the "
                         "structural conditions are inconclusive");
  solve_cyclic->add_option("--budget", budget, "oracle candidate budget");
  solve_cyclic->add_option("--out", out, "write the net to this file");
  solve_cyclic->add_option("--format", format, "net output format: text|dot")
      ->check(CLI::IsMember({"text", "dot"}));

  auto* oracle = app.add_subcommand(
      "oracle", "Exhaustive skeleton-marking search for a word");
  oracle->add_option("word", word, "the word")->required();
  oracle->add_option("--budget", budget, "candidate budget");
  oracle->add_option("--out", out, "write the net to this file");
  oracle->add_option("--format", format, "net output format: text|dot")
      ->check(CLI::IsMember({"text", "dot"}));

  auto* synth_acyclic = app.add_subcommand(
      "synth-acyclic", "Synthesize a net for a finite acyclic behaviour");
  synth_acyclic->add_option("file", path, "transition-system file")
      ->required();
  synth_acyclic->add_option("--out", out, "write the net to this file");
  synth_acyclic->add_option("--format", format, "net output format: text|dot")
      ->check(CLI::IsMember({"text", "dot"}));

  auto* synth_reversible = app.add_subcommand(
      "synth-reversible",
      "Synthesize a circuit for a reversible two-letter behaviour");
  synth_reversible->add_option("file", path, "transition-system file")
      ->required();
  synth_reversible->add_option("--out", out, "write the net to this file");
  synth_reversible
      ->add_option("--format", format, "net output format: text|dot")
      ->check(CLI::IsMember({"text", "dot"}));

  auto* simulate = app.add_subcommand(
      "simulate", "Build the reachability graph of a net");
  simulate->add_option("file", path, "net file")->required();
  simulate->add_option("--bound", bound, "state budget (default 100000)");
  simulate->add_option("--out", out, "write the graph to this file");
  simulate->add_option("--format", format, "graph output format: text|dot")
      ->check(CLI::IsMember({"text", "dot"}));

  auto* isomorphic = app.add_subcommand(
      "isomorphic", "Check two transition systems for rooted isomorphism");
  isomorphic->add_option("file_a", path, "first transition-system file")
      ->required();
  isomorphic->add_option("file_b", path_b, "second transition-system file")
      ->required();

  auto* predict = app.add_subcommand(
      "predict-states",
      "State count of a two-place circuit with n, m weights and k tokens");
  predict->add_option("n", n, "weight n")->required();
  predict->add_option("m", m, "weight m")->required();
  predict->add_option("k", k, "total tokens")->required();

  auto* infinite = app.add_subcommand(
      "infinite-check",
      "Compare the unbounded single-place candidate against a finite prefix");
  infinite->add_option("n", n, "consumption weight")->required();
  infinite->add_option("m", m, "production weight")->required();
  infinite->add_option("i0", i0, "initial tokens")->required();
  infinite->add_option("file", path, "prefix transition-system file")
      ->required();
  infinite->add_option("--depth", depth, "comparison depth (default 30)");

  auto* export_dot = app.add_subcommand(
      "export-dot", "Render a net or transition-system file as DOT");
  export_dot->add_option("file", path, "input file")->required();
  export_dot->add_option("--out", out, "write the DOT to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve_binary->parsed()) return run_solve_binary(word, out, format);
    if (solve_cyclic->parsed()) {
      return run_solve_cyclic(word, use_oracle, budget, out, format);
    }
    if (oracle->parsed()) return run_oracle(word, budget, out, format);
    if (synth_acyclic->parsed()) return run_synth_acyclic(path, out, format);
    if (synth_reversible->parsed()) {
      return run_synth_reversible(path, out, format);
    }
    if (simulate->parsed()) return run_simulate(path, bound, out, format);
    if (isomorphic->parsed()) return run_isomorphic(path, path_b);
    if (predict->parsed()) return run_predict_states(n, m, k);
    if (infinite->parsed()) {
      return run_infinite_check(n, m, i0, path, depth);
    }
    if (export_dot->parsed()) return run_export_dot(path, out);
  } catch (const Error& e) {
    print_error(e);
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cout << "error: Internal\n";
    std::cout << "detail: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
