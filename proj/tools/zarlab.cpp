// zarlab command-line front end.
//
// Subcommands expose the library pieces (relator printing, piece analysis,
// the word-problem solver, polynomial evaluation) and the seeded
// verification suites. Exit codes: 0 pass, 1 assertion failure,
// 2 usage/parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zarlab/zarlab.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace zarlab;

// Trace steps as structured records (suite counterexamples are always
// over the built-in family, so the indexed word grammar applies).
json trace_to_json(const DehnTrace& trace) {
  json steps = json::array();
  for (const TraceStep& s : trace.steps) {
    steps.push_back({{"before", render(s.before)},
                     {"relator", zarlab::to_string(s.candidate.relator)},
                     {"position", s.candidate.position},
                     {"match_length", s.candidate.match_length},
                     {"after", render(s.after)}});
  }
  return steps;
}

json report_to_json(const SuiteReport& report) {
  json params = json::object();
  for (const auto& [key, value] : report.params) params[key] = value;
  json j = {{"suite", report.suite}, {"params", params},
            {"passed", report.passed}, {"failed", report.failed},
            {"skipped", report.skipped}, {"duration_ms", report.duration_ms}};
  if (!report.details.empty()) {
    json details = json::object();
    for (const auto& [key, value] : report.details) details[key] = value;
    j["details"] = details;
  }
  if (report.counterexample) {
    const Counterexample& ce = *report.counterexample;
    json inputs = json::object();
    for (const auto& [key, value] : ce.inputs) inputs[key] = value;
    j["counterexample"] = {{"trial", ce.trial}, {"inputs", inputs},
                           {"trace", trace_to_json(ce.trace)}, {"note", ce.note}};
  }
  return j;
}

int emit_report(const SuiteReport& report, const SuiteConfig& cfg) {
  if (cfg.json) {
    std::cout << report_to_json(report).dump() << "\n";
  } else {
    print_report(std::cout, report, cfg.quiet);
  }
  return report.ok() ? 0 : 1;
}

Ratio parse_ratio(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size()) {
    throw std::invalid_argument("lambda must be written p/q");
  }
  Ratio r{std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
  r.validate();
  return r;
}

GenericPresentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open presentation file: " + path);
  return load_presentation(in);
}

void emit_solve(const SolveResult& res, const std::string& final_text,
                bool want_trace, const SuiteConfig& cfg, const std::string& note) {
  if (cfg.json) {
    json j = {{"verdict", to_string(res.verdict)},
              {"steps", res.trace.steps.size()},
              {"final", final_text}};
    if (want_trace) j["trace"] = render_trace(res.trace);
    if (!note.empty()) j["note"] = note;
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "verdict: " << to_string(res.verdict) << "\n";
  if (!cfg.quiet) {
    std::cout << "steps: " << res.trace.steps.size() << "\n";
    std::cout << "final: " << final_text << "\n";
  }
  if (want_trace) {
    for (const std::string& line : render_trace(res.trace)) std::cout << line << "\n";
  }
  if (!note.empty()) std::cout << "note: " << note << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"small-cancellation word problems and Zariski-style membership checks"};
  app.require_subcommand(1);

  SuiteConfig cfg;  // k defaults to 8 throughout
  app.add_flag("--json", cfg.json, "one structured object per suite on stdout");
  app.add_flag("--quiet", cfg.quiet, "suppress per-check detail");

  int exit_code = 0;

  // relator --k <int> --index <int>
  auto* relator_cmd = app.add_subcommand("relator", "print one relator of the built-in family");
  relator_cmd->fallthrough();
  std::uint32_t rel_index = 1;
  relator_cmd->add_option("--k", cfg.k, "even parameter k >= 8 (default 8)");
  relator_cmd->add_option("--index", rel_index, "relator index i >= 1")->required();
  relator_cmd->callback([&] {
    const Word w = relator({cfg.k}, rel_index);
    if (cfg.json) {
      std::cout << json{{"word", render(w)}}.dump() << "\n";
    } else {
      std::cout << render(w) << "\n";
    }
  });

  // sc-check --k <int> --max-index <int> [--lambda p/q] | --presentation <file>
  auto* sc_cmd = app.add_subcommand("sc-check", "piece analysis and metric condition");
  sc_cmd->fallthrough();
  std::string sc_lambda;
  std::string sc_presentation;
  sc_cmd->add_option("--k", cfg.k, "even parameter k >= 8 (default 8)");
  sc_cmd->add_option("--max-index", cfg.max_index, "check relators 1..N");
  sc_cmd->add_option("--lambda", sc_lambda, "rational p/q (generic default 1/6)");
  sc_cmd->add_option("--presentation", sc_presentation, "presentation file");
  sc_cmd->callback([&] {
    cfg.suite = "sc-check";
    if (!sc_presentation.empty()) {
      const Ratio lambda = sc_lambda.empty() ? Ratio{1, 6} : parse_ratio(sc_lambda);
      exit_code = emit_report(run_sc_check(load_presentation_file(sc_presentation), lambda), cfg);
      return;
    }
    if (!sc_cmd->count("--max-index")) {
      throw std::invalid_argument("sc-check needs --max-index, or --presentation");
    }
    std::optional<Ratio> extra;
    if (!sc_lambda.empty()) extra = parse_ratio(sc_lambda);
    exit_code = emit_report(run_sc_check({cfg.k}, cfg.max_index, extra), cfg);
  });

  // solve --k <int> --word "<word>" [--trace] | --presentation <file> --word "<word>"
  auto* solve_cmd = app.add_subcommand("solve", "decide the word problem");
  solve_cmd->fallthrough();
  std::string solve_word;
  std::string solve_presentation;
  bool solve_trace = false;
  solve_cmd->add_option("--k", cfg.k, "even parameter k >= 8 (default 8)");
  solve_cmd->add_option("--word", solve_word, "word to decide")->required();
  solve_cmd->add_option("--presentation", solve_presentation,
                        "presentation file (single-character word syntax)");
  solve_cmd->add_flag("--trace", solve_trace, "print the reduction trace");
  solve_cmd->callback([&] {
    if (!solve_presentation.empty()) {
      const GenericSystem sys = make_generic_system(load_presentation_file(solve_presentation));
      const Word v = sys.presentation.word_from_string(solve_word);
      const SolveResult res = solve(v, sys);
      const std::string note =
          sys.certified ? ""
                        : "presentation not certified C'(1/6); "
                          "nonempty fixed points are inconclusive";
      emit_solve(res, sys.presentation.render(res.final_word), solve_trace, cfg, note);
      return;
    }
    const Word v = parse_word(solve_word);
    const SolveResult res = solve(v, PresentationParams{cfg.k});
    emit_solve(res, render(res.final_word), solve_trace, cfg, "");
  });

  // eval --k <int> --poly "<poly>" --at "<word>"
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a word map at a point");
  eval_cmd->fallthrough();
  std::string eval_poly;
  std::string eval_at;
  eval_cmd->add_option("--k", cfg.k, "even parameter k >= 8 (default 8)");
  eval_cmd->add_option("--poly", eval_poly, "polynomial over the group")->required();
  eval_cmd->add_option("--at", eval_at, "evaluation point")->required();
  eval_cmd->callback([&] {
    PresentationParams params{cfg.k};
    params.validate();
    const Word value = eval_group(parse_group_polynomial(eval_poly), parse_word(eval_at));
    if (cfg.json) {
      std::cout << json{{"result", render(value)}}.dump() << "\n";
    } else {
      std::cout << render(value) << "\n";
    }
  });

  // verify <suite>
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->require_subcommand(1);
  verify_cmd->fallthrough();

  auto* theorem_cmd = verify_cmd->add_subcommand(
      "theorem", "solution-set separation witness: every x_i in, a_{k+1} out");
  theorem_cmd->fallthrough();
  theorem_cmd->add_option("--k", cfg.k, "even parameter k >= 8 (default 8)");
  theorem_cmd->add_option("--max-index", cfg.max_index, "check x_1..x_N")->required();
  theorem_cmd->callback([&] {
    cfg.suite = "theorem";
    exit_code = emit_report(run_theorem_check({cfg.k}, cfg.max_index), cfg);
  });

  auto* lemma_cmd = verify_cmd->add_subcommand(
      "lemma-decomposition", "positive/negative decompositions never vanish");
  lemma_cmd->fallthrough();
  lemma_cmd->add_option("--k", cfg.k, "even parameter k >= 8 (default 8)");
  lemma_cmd->add_option("--m", cfg.m, "distinguished x-index")->required();
  lemma_cmd->add_option("--trials", cfg.trials, "trial count")->required();
  lemma_cmd->add_option("--seed", cfg.seed, "64-bit seed")->required();
  lemma_cmd->add_option("--max-len", cfg.max_len, "max length of the combined word")->required();
  lemma_cmd->callback([&] {
    cfg.suite = "lemma-decomposition";
    exit_code = emit_report(
        run_lemma_decomposition_suite({cfg.k}, cfg.m, cfg.trials, cfg.seed, cfg.max_len), cfg);
  });

  auto* density_cmd = verify_cmd->add_subcommand(
      "density", "fresh generators escape proper equalizer sets");
  density_cmd->fallthrough();
  density_cmd->add_option("--k", cfg.k, "even parameter k >= 8 (default 8)");
  density_cmd->add_option("--trials", cfg.trials, "trial count")->required();
  density_cmd->add_option("--seed", cfg.seed, "64-bit seed")->required();
  density_cmd->callback([&] {
    cfg.suite = "density";
    exit_code = emit_report(run_density_suite({cfg.k}, cfg.trials, cfg.seed), cfg);
  });

  // sgp verify-example
  auto* sgp_cmd = app.add_subcommand("sgp", "monomial semigroup with zero");
  sgp_cmd->require_subcommand(1);
  sgp_cmd->fallthrough();
  auto* example_cmd = sgp_cmd->add_subcommand(
      "verify-example", "zero pairs, renaming invariance, quotient projection");
  example_cmd->fallthrough();
  example_cmd->add_option("--trials", cfg.trials, "renaming trials")->required();
  example_cmd->add_option("--seed", cfg.seed, "64-bit seed")->required();
  example_cmd->add_option("--max-index", cfg.max_index, "zero-pair indices 1..N")->required();
  example_cmd->callback([&] {
    cfg.suite = "example";
    exit_code = emit_report(run_example_suite(cfg.trials, cfg.seed, cfg.max_index), cfg);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
