#include "varseq/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "varseq/ctv.hpp"
#include "varseq/io.hpp"
#include "varseq/report.hpp"
#include "varseq/structure.hpp"
#include "varseq/verify.hpp"

namespace varseq {

namespace {

std::string numbers(std::span<const double> values) {
  return fmt::format("{}", fmt::join(values, " "));
}

std::string order_spec(const Sequence& seq) {
  return fmt::format("{}", fmt::join(seq.ranks(), ","));
}

std::string exact_fraction(ExactInt numerator, int n) {
  return fmt::format("{}/{}", numerator, static_cast<ExactInt>(n) * n);
}

void emit(std::ostream& out, const char* command, Json payload, bool as_json) {
  if (!as_json) return;
  Json doc;
  doc["command"] = command;
  doc.update(payload);
  out << doc.dump(2) << "\n";
}

int default_threads() {
  if (const char* env = std::getenv("VARSEQ_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return 0;  // auto
}

void print_evaluation(std::ostream& out, const Sequence& seq, const PartialSumStats& stats) {
  out << "sequence: " << numbers(seq.entries()) << "\n";
  out << "partial sums: " << numbers(stats.sums) << "\n";
  out << fmt::format("mean = {}\n", stats.mean);
  out << fmt::format("f = {}\n", stats.variance);
  if (stats.exact_numerator) {
    out << "exact: f = " << exact_fraction(*stats.exact_numerator, seq.size()) << "\n";
  }
}

std::string interchange_list(const std::vector<Interchange>& steps) {
  std::string text;
  for (const Interchange& step : steps) {
    if (!text.empty()) text += " ";
    text += fmt::format("({},{})", step.i, step.j);
  }
  return text.empty() ? "(none)" : text;
}

void print_trace(std::ostream& out, const TransformTrace& trace, int n) {
  const char* status = trace.status == TransformStatus::Transformed ? "transformed"
                       : trace.status == TransformStatus::NoOp      ? "no-op"
                                                                    : "gate-not-met";
  out << "status: " << status << "\n";
  out << "interchanges: " << interchange_list(trace.applied) << "\n";
  out << fmt::format("f before = {}\n", trace.f_before);
  out << fmt::format("f after = {}\n", trace.f_after);
  out << fmt::format("Δf = {}\n", trace.f_after - trace.f_before);
  if (!trace.per_step.empty()) {
    out << fmt::format("per-step Δf: {}\n", fmt::join(trace.per_step, " "));
  }
  if (trace.exact) {
    out << "exact: Δf = "
        << exact_fraction(trace.exact->f_after_num - trace.exact->f_before_num, n) << "\n";
  }
}

struct CommonArgs {
  std::string path;
  bool json = false;
};

int cmd_evaluate(std::ostream& out, const CommonArgs& args, const std::string& seq_spec) {
  Instance instance = load_instance(args.path);
  Sequence seq = seq_spec.empty()
                     ? instance.sequence()
                     : Sequence::from_ranks(instance.set, parse_order_spec(seq_spec));
  const PartialSumStats stats = partial_sums(seq);
  if (args.json) {
    Json payload = sequence_json(seq);
    payload.update(stats_json(stats));
    emit(out, "evaluate", std::move(payload), true);
  } else {
    print_evaluation(out, seq, stats);
  }
  return 0;
}

int cmd_optimal(std::ostream& out, const CommonArgs& args) {
  Instance instance = load_instance(args.path);
  const OptimalPair pair = construct_optimal(instance.set);
  if (args.json) {
    emit(out, "optimal", optimal_json(pair), true);
    return 0;
  }
  const PartialSumStats stats = partial_sums(pair.primary);
  out << "C*  = " << numbers(pair.primary.entries()) << "\n";
  out << "order: " << order_spec(pair.primary) << "\n";
  out << "C*d = " << numbers(pair.dual_form.entries()) << "\n";
  out << "order: " << order_spec(pair.dual_form) << "\n";
  out << fmt::format("f = {}\n", stats.variance);
  if (stats.exact_numerator) {
    out << "exact: f = " << exact_fraction(*stats.exact_numerator, pair.primary.size())
        << "\n";
  }
  return 0;
}

int cmd_transform(std::ostream& out, const CommonArgs& args, const std::string& kind,
                  const std::string& seq_spec) {
  Instance instance = load_instance(args.path);
  Sequence seq = seq_spec.empty()
                     ? instance.sequence()
                     : Sequence::from_ranks(instance.set, parse_order_spec(seq_spec));
  TransformResult result = kind == "dual"     ? dual_transform(seq)
                           : kind == "sum-n2" ? sum_n2_transform(seq)
                                              : sum_n1_transform(seq);
  if (args.json) {
    Json payload;
    payload.update(trace_json(result.trace, seq.size()));
    payload["result"] = sequence_json(result.sequence);
    emit(out, "transform", std::move(payload), true);
    return 0;
  }
  out << "kind: " << kind << "\n";
  print_trace(out, result.trace, seq.size());
  out << "result: " << numbers(result.sequence.entries()) << "\n";
  out << "order: " << order_spec(result.sequence) << "\n";
  return 0;
}

int cmd_search(std::ostream& out, const CommonArgs& args, const std::string& strategy_name,
               std::optional<std::uint64_t> seed) {
  Instance instance = load_instance(args.path);
  Sequence start = instance.sequence();
  if (seed) {
    std::vector<double> entries(instance.set.values().begin(), instance.set.values().end());
    std::mt19937_64 rng(*seed);
    std::shuffle(entries.begin(), entries.end(), rng);
    start = Sequence(instance.set, std::move(entries));
  }
  const SearchStrategy strategy = strategy_name == "first" ? SearchStrategy::FirstImprovement
                                  : strategy_name == "best" ? SearchStrategy::BestImprovement
                                                            : SearchStrategy::TransformsFirst;
  const SearchReport report = local_search(start, strategy);
  if (args.json) {
    emit(out, "search", search_json(report, strategy_name), true);
    return 0;
  }
  out << "strategy: " << strategy_name << "\n";
  out << fmt::format("start: {}  (f = {})\n", numbers(report.start.entries()),
                     report.f_trajectory.front());
  int step_no = 0;
  for (const TransformTrace& trace : report.steps) {
    const char* kind = trace.kind == TransformKind::SumN2   ? "sum-n2"
                       : trace.kind == TransformKind::SumN1 ? "sum-n1"
                       : trace.kind == TransformKind::Dual  ? "dual"
                                                            : "interchange";
    out << fmt::format("step {}: {} {}  Δf = {}  f = {}\n", ++step_no, kind,
                       interchange_list(trace.applied), trace.f_after - trace.f_before,
                       trace.f_after);
  }
  out << fmt::format("end: {}  (f = {})\n", numbers(report.end.entries()),
                     report.f_trajectory.back());
  out << fmt::format("converged: {}\n", report.converged ? "yes" : "no");
  out << fmt::format("reached closed form: {}\n", report.reached_closed_form ? "yes" : "no");
  return 0;
}

int cmd_oracle(std::ostream& out, std::ostream& err, const CommonArgs& args,
               const std::string& objective_name, bool pin_first, int limit, int threads) {
  Instance instance = load_instance(args.path);
  const Objective objective =
      objective_name == "max" ? Objective::MaxVariance : Objective::MinVariance;
  OracleOptions options;
  options.pin_first = pin_first;
  options.limit_n = limit;
  options.threads = threads;
  const OracleResult result = brute_force(instance.set, objective, options);
  if (!result.exact) {
    err << "warning: non-integer values; optima grouped with relative tolerance 1e-9\n";
  }
  if (args.json) {
    emit(out, "oracle", oracle_json(result), true);
    return 0;
  }
  out << "objective: " << objective_name << "\n";
  out << fmt::format("explored: {}\n", result.explored);
  out << fmt::format("best f = {}\n", result.best_value);
  if (result.best_numerator && !result.optima.empty()) {
    out << "exact: f = "
        << exact_fraction(*result.best_numerator, result.optima.front().size()) << "\n";
  }
  out << fmt::format("optima: {}\n", result.optima.size());
  for (const Sequence& seq : result.optima) {
    out << fmt::format("  {}  (order: {})\n", numbers(seq.entries()), order_spec(seq));
  }
  return 0;
}

int cmd_ctv_screen(std::ostream& out, const CommonArgs& args, const std::string& candidates_path,
                   bool include_sum_n1) {
  Instance instance = load_instance(args.path);
  std::vector<Sequence> candidates;
  for (const auto& spec : load_order_list(candidates_path)) {
    candidates.push_back(Sequence::from_ranks(instance.set, spec));
  }
  const std::vector<Sequence> surviving = ctv_screen(candidates, include_sum_n1);
  if (args.json) {
    emit(out, "ctv-screen", ctv_screen_json(candidates, surviving), true);
    return 0;
  }
  auto print_list = [&](const char* label, const std::vector<Sequence>& list) {
    out << fmt::format("{}: {}\n", label, list.size());
    for (const Sequence& seq : list) {
      out << fmt::format("  {}  f = {}\n", numbers(seq.entries()), variance(seq));
    }
  };
  print_list("candidates", candidates);
  print_list("surviving", surviving);
  return 0;
}

int cmd_verify(std::ostream& out, const CommonArgs& args) {
  Instance instance = load_instance(args.path);
  const std::vector<PropertyCheck> checks = verify_instance(instance.sequence());
  if (args.json) {
    emit(out, "verify", verify_json(checks), true);
    return 0;
  }
  int failed = 0;
  for (const PropertyCheck& check : checks) {
    out << fmt::format("{} {}", check.pass ? "PASS" : "FAIL", check.name);
    if (!check.detail.empty()) out << fmt::format(" ({})", check.detail);
    out << "\n";
    if (!check.pass) ++failed;
  }
  if (failed == 0) {
    out << "all properties pass\n";
  } else {
    out << fmt::format("{} properties failed\n", failed);
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sequencing a set of positive numbers to maximize the variance of its "
               "partial sums"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string seq_spec;
  std::string kind = "sum-n2";
  std::string strategy = "transforms";
  std::optional<std::uint64_t> seed;
  std::string objective = "max";
  bool pin_first = false;
  int limit = 9;
  int threads = default_threads();
  std::string candidates_path;
  bool include_sum_n1 = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", common.path, "instance file (one value per line, optional order: line)")
        ->required();
    sub->add_flag("--json", common.json, "machine-readable report");
  };

  CLI::App* evaluate = app.add_subcommand("evaluate", "partial sums, mean and f(C)");
  add_common(evaluate);
  evaluate->add_option("--seq", seq_spec, "order spec i1,i2,... overriding the file");

  CLI::App* optimal = app.add_subcommand("optimal", "closed-form optimal sequences");
  add_common(optimal);

  CLI::App* transform = app.add_subcommand("transform", "apply one transform and trace it");
  add_common(transform);
  transform->add_option("--kind", kind, "dual, sum-n2 or sum-n1")
      ->check(CLI::IsMember({"dual", "sum-n2", "sum-n1"}))
      ->required();
  transform->add_option("--seq", seq_spec, "order spec i1,i2,... overriding the file");

  CLI::App* search = app.add_subcommand("search", "favorable-interchange local search");
  add_common(search);
  search->add_option("--strategy", strategy, "first, best or transforms")
      ->check(CLI::IsMember({"first", "best", "transforms"}))
      ->required();
  search->add_option("--seed", seed, "shuffle the start (otherwise the file order is used)");

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive search over all arrangements");
  add_common(oracle);
  oracle->add_option("--objective", objective, "max or min")
      ->check(CLI::IsMember({"max", "min"}))
      ->required();
  oracle->add_flag("--pin-first", pin_first, "fix c_1 = a_1 (max only; (n-1)! instead of n!)");
  oracle->add_option("--limit", limit, "refuse instances above this size (hard cap 11)");
  oracle->add_option("--threads", threads, "worker threads (default: VARSEQ_THREADS or auto)");

  CLI::App* ctv = app.add_subcommand("ctv-screen", "drop transform-dominated candidates");
  add_common(ctv);
  ctv->add_option("--candidates", candidates_path, "file with one order spec per line")
      ->required();
  ctv->add_flag("--sum-n1", include_sum_n1, "also use sum-n1 dominance");

  CLI::App* verify = app.add_subcommand("verify", "run the property suite on this instance");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (evaluate->parsed()) return cmd_evaluate(out, common, seq_spec);
    if (optimal->parsed()) return cmd_optimal(out, common);
    if (transform->parsed()) return cmd_transform(out, common, kind, seq_spec);
    if (search->parsed()) return cmd_search(out, common, strategy, seed);
    if (oracle->parsed()) return cmd_oracle(out, err, common, objective, pin_first, limit, threads);
    if (ctv->parsed()) return cmd_ctv_screen(out, common, candidates_path, include_sum_n1);
    if (verify->parsed()) return cmd_verify(out, common);
  } catch (const ParseError& e) {
    if (e.line > 0) {
      err << fmt::format("{}:{}: {}\n", common.path, e.line, e.what());
    } else {
      err << fmt::format("{}\n", e.what());
    }
    return 1;
  } catch (const InstanceTooLarge& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace varseq
