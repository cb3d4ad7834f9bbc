#include "cli.hpp"

#include "dualfeas/bench.hpp"
#include "dualfeas/instances.hpp"
#include "dualfeas/solver.hpp"
#include "dualfeas/trace.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace dualfeas::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNoOptimum = 2;
constexpr int kExitLimit = 3;

const std::vector<std::string> kRuleNames{"minangle", "dantzig", "bland", "brule"};

struct SolveArgs {
  std::string input;
  std::string rule = "minangle";
  std::string mode = "float";
  double eps = kDefaultEps;
  std::size_t max_iters = 0;
  bool trace = false;
  bool phase1_only = false;
  bool no_fallback = false;
};

struct GenArgs {
  std::size_t rows = 3;
  std::size_t cols = 3;
  std::size_t count = 10;
  std::uint64_t seed = 1;
  std::int64_t lo = -50;
  std::int64_t hi = 50;
  std::string out_dir = ".";
};

struct BenchArgs {
  std::vector<std::string> sizes;
  std::size_t count = 500;
  std::uint64_t seed = 1;
  std::vector<std::string> rules;
  std::string mode = "float";
  double eps = kDefaultEps;
  std::size_t max_iters = 0;
  std::string format = "markdown";
  std::string output;
  std::size_t jobs = 1;
};

template <class T>
int report_solve(const LPInstance& inst, const SolveArgs& args, std::ostream& out) {
  const RuleId rule = *parse_rule(args.rule);
  SolveOptions options;
  options.eps = args.eps;
  options.limits.max_iterations = args.max_iters;
  options.limits.trace = args.trace;
  options.limits.snapshots = args.trace;
  options.fallback = !args.no_fallback;

  SolveOutcome<T> outcome;
  if (args.phase1_only) {
    outcome = attain_dual_feasibility(build_dictionary<T>(inst, args.eps), rule, options.limits);
  } else {
    outcome = solve<T>(inst, rule, options);
  }

  if (args.trace) {
    out << "Initial dictionary\n" << format_dictionary(build_dictionary<T>(inst, args.eps)) << "\n";
    out << format_trace(outcome) << "\n";
  }

  using Traits = ScalarTraits<T>;
  out << "status: " << to_string(outcome.status);
  if (outcome.status == Status::DualInconsistent) out << " (unbounded)";
  if (outcome.status == Status::PrimalInfeasible) out << " (infeasible)";
  out << "\n";
  out << "rule: " << rule_name(rule) << "\n";
  if (outcome.status == Status::Optimal || outcome.status == Status::DualFeasible) {
    out << "objective: " << Traits::format(outcome.final.objective_value()) << "\n";
    out << "x:";
    for (const auto& v : basic_solution(outcome.final, inst)) out << ' ' << Traits::format(v);
    out << "\n";
  }
  if (outcome.witness) out << "witness: " << *outcome.witness << "\n";
  out << "iterations: " << outcome.iterations << "\n";
  out << "pivots: " << outcome.pivots << "\n";
  if (!args.phase1_only) out << "dual simplex pivots: " << outcome.phase2_pivots << "\n";
  if (outcome.fell_back) out << "note: cap reached, finished with a least-index rule\n";

  switch (outcome.status) {
    case Status::Optimal:
    case Status::DualFeasible: return kExitOk;
    case Status::DualInconsistent:
    case Status::PrimalInfeasible: return kExitNoOptimum;
    case Status::LimitExceeded: return kExitLimit;
  }
  return kExitError;
}

int run_solve(const SolveArgs& args, std::ostream& out) {
  const LPInstance inst = read_instance_file(args.input);
  return args.mode == "exact" ? report_solve<Rational>(inst, args, out)
                              : report_solve<double>(inst, args, out);
}

int run_oracle(const std::string& input, std::ostream& out) {
  const LPInstance inst = read_instance_file(input);
  const OracleResult result = oracle_solve(inst);
  out << "status: " << to_string(result.kind) << "\n";
  if (result.kind == OracleResult::Kind::Optimal) {
    out << "objective: " << format_rational(result.value) << "\n";
    out << "x:";
    for (const auto& v : result.point) out << ' ' << format_rational(v);
    out << "\n";
  }
  return result.kind == OracleResult::Kind::Optimal ? kExitOk : kExitNoOptimum;
}

int run_gen(const GenArgs& args, std::ostream& out) {
  GenConfig cfg;
  cfg.m = args.rows;
  cfg.n = args.cols;
  cfg.lo = args.lo;
  cfg.hi = args.hi;
  cfg.seed = args.seed;
  cfg.count = args.count;
  if (cfg.lo > cfg.hi) throw std::invalid_argument("--lo must not exceed --hi");

  std::filesystem::create_directories(args.out_dir);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    std::ostringstream name;
    name << "lp_" << cfg.m << 'x' << cfg.n << "_s" << cfg.seed << '_' << i << ".lp";
    const auto path = std::filesystem::path(args.out_dir) / name.str();
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot write " + path.string());
    file << "# seed " << cfg.seed << " index " << i << "\n" << serialize_instance(random_instance(cfg, i));
    out << path.string() << "\n";
  }
  return kExitOk;
}

int run_bench(const BenchArgs& args, std::ostream& out) {
  BenchConfig cfg;
  if (!args.sizes.empty()) {
    cfg.sizes.clear();
    for (const auto& s : args.sizes) cfg.sizes.push_back(parse_size(s));
  }
  if (!args.rules.empty()) {
    cfg.rules.clear();
    for (const auto& r : args.rules) cfg.rules.push_back(*parse_rule(r));
  }
  cfg.count = args.count;
  cfg.seed = args.seed;
  cfg.mode = args.mode == "exact" ? Arithmetic::Exact : Arithmetic::Float;
  cfg.eps = args.eps;
  cfg.max_iterations = args.max_iters;
  cfg.jobs = args.jobs;

  const BenchReport report = run_benchmark(cfg);
  const std::string text =
      render_report(report, args.format == "csv" ? ReportFormat::Csv : ReportFormat::Markdown);
  if (args.output.empty()) {
    out << text;
  } else {
    std::ofstream file(args.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + args.output);
    file << text;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dual feasibility by the minimum angle rule, with classical comparators"};
  app.name("dualfeas");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("input", solve_args.input, "Instance file")->required();
  solve_cmd->add_option("--rule", solve_args.rule, "Dual feasibility rule")
      ->check(CLI::IsMember(kRuleNames));
  solve_cmd->add_option("--mode", solve_args.mode, "Arithmetic")->check(CLI::IsMember({"float", "exact"}));
  solve_cmd->add_option("--eps", solve_args.eps, "Float-mode zero tolerance")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--max-iters", solve_args.max_iters, "Iteration cap (0 = rule default)");
  solve_cmd->add_flag("--trace", solve_args.trace, "Print every dictionary along the way");
  solve_cmd->add_flag("--dual-feasibility-only", solve_args.phase1_only,
                      "Stop once the dictionary is dual feasible");
  solve_cmd->add_flag("--no-fallback", solve_args.no_fallback,
                      "Report LimitExceeded instead of finishing with a least-index rule");

  std::string oracle_input;
  auto* oracle_cmd = app.add_subcommand("oracle", "Solve an instance by basis enumeration");
  oracle_cmd->add_option("input", oracle_input, "Instance file")->required();

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Write random instance files");
  gen_cmd->add_option("--rows", gen_args.rows, "Constraints (m)")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--cols", gen_args.cols, "Variables (n)")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--count", gen_args.count, "Number of instances")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen_args.seed, "Stream seed");
  gen_cmd->add_option("--lo", gen_args.lo, "Smallest coefficient");
  gen_cmd->add_option("--hi", gen_args.hi, "Largest coefficient");
  gen_cmd->add_option("--out", gen_args.out_dir, "Output directory");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Compare iteration counts on random instances");
  bench_cmd->add_option("--sizes", bench_args.sizes, "Sizes as MxN (default: the 16 table sizes)")
      ->delimiter(',');
  bench_cmd->add_option("--count", bench_args.count, "Instances per size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_args.seed, "Stream seed");
  bench_cmd->add_option("--rules", bench_args.rules, "Rules to run (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember(kRuleNames));
  bench_cmd->add_option("--mode", bench_args.mode, "Arithmetic")->check(CLI::IsMember({"float", "exact"}));
  bench_cmd->add_option("--eps", bench_args.eps, "Float-mode zero tolerance")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--max-iters", bench_args.max_iters, "Iteration cap (0 = rule default)");
  bench_cmd->add_option("--format", bench_args.format, "Report format")
      ->check(CLI::IsMember({"markdown", "csv"}));
  bench_cmd->add_option("--output", bench_args.output, "Write the report here instead of stdout");
  bench_cmd->add_option("--jobs", bench_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args, out);
    if (*oracle_cmd) return run_oracle(oracle_input, out);
    if (*gen_cmd) return run_gen(gen_args, out);
    if (*bench_cmd) {
      for (const auto& s : bench_args.sizes) parse_size(s);
      return run_bench(bench_args, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace dualfeas::cli
