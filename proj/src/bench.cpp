#include "dualfeas/bench.hpp"

#include "dualfeas/instances.hpp"
#include "dualfeas/solver.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

namespace dualfeas {

std::vector<Size> default_sizes() {
  return {{3, 3},   {3, 5},   {3, 7},   {5, 5},   {5, 10},  {7, 5},   {7, 10},  {10, 5},
          {10, 10}, {10, 20}, {15, 15}, {15, 20}, {20, 20}, {20, 30}, {30, 30}, {40, 40}};
}

Size parse_size(std::string_view text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string_view::npos) throw std::invalid_argument("size must look like MxN");
  auto number = [&](std::string_view part) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || value == 0) {
      throw std::invalid_argument("bad size '" + std::string(text) + "'");
    }
    return value;
  };
  return {number(text.substr(0, x)), number(text.substr(x + 1))};
}

std::string format_size(Size size) { return std::to_string(size.m) + "x" + std::to_string(size.n); }

template <class Number>
Summary summarize(const std::vector<Number>& samples) {
  if (samples.empty()) throw EmptySample("cannot summarize an empty sample");
  double sum = 0.0;
  for (const auto& v : samples) sum += static_cast<double>(v);
  const double mean = sum / static_cast<double>(samples.size());
  if (samples.size() == 1) return {mean, 0.0};
  double sq = 0.0;
  for (const auto& v : samples) sq += (static_cast<double>(v) - mean) * (static_cast<double>(v) - mean);
  return {mean, std::sqrt(sq / static_cast<double>(samples.size() - 1))};
}

template Summary summarize<std::size_t>(const std::vector<std::size_t>&);
template Summary summarize<double>(const std::vector<double>&);
template Summary summarize<int>(const std::vector<int>&);

namespace {

struct RunResult {
  Status status = Status::LimitExceeded;
  std::size_t iterations = 0;
  std::size_t pivots = 0;
};

struct InstanceResult {
  bool start_dual_feasible = false;
  std::vector<RunResult> runs;
};

template <class T>
InstanceResult evaluate(const LPInstance& inst, const BenchConfig& cfg) {
  InstanceResult result;
  const Dictionary<T> start = build_dictionary<T>(inst, cfg.eps);
  result.start_dual_feasible = is_dual_feasible(start);
  Limits limits;
  limits.max_iterations = cfg.max_iterations;
  for (RuleId rule : cfg.rules) {
    const auto out = attain_dual_feasibility(start, rule, limits);
    result.runs.push_back({out.status, out.iterations, out.pivots});
  }
  return result;
}

InstanceResult evaluate_instance(const BenchConfig& cfg, Size size, std::size_t index) {
  GenConfig gen;
  gen.m = size.m;
  gen.n = size.n;
  gen.lo = cfg.lo;
  gen.hi = cfg.hi;
  gen.seed = cfg.seed;
  const LPInstance inst = random_instance(gen, index);
  return cfg.mode == Arithmetic::Exact ? evaluate<Rational>(inst, cfg) : evaluate<double>(inst, cfg);
}

}  // namespace

BenchReport run_benchmark(const BenchConfig& cfg) {
  if (cfg.count == 0) throw std::invalid_argument("count must be at least 1");
  BenchReport report;
  report.config = cfg;
  report.sizes = cfg.sizes;
  report.rules = cfg.rules;

  for (Size size : cfg.sizes) {
    std::vector<InstanceResult> results(cfg.count);
    const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, cfg.count));
    if (jobs == 1) {
      for (std::size_t i = 0; i < cfg.count; ++i) results[i] = evaluate_instance(cfg, size, i);
    } else {
      std::vector<std::thread> workers;
      for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
          for (std::size_t i = w; i < cfg.count; i += jobs) results[i] = evaluate_instance(cfg, size, i);
        });
      }
      for (auto& worker : workers) worker.join();
    }

    std::size_t start_feasible = 0;
    for (const auto& r : results) start_feasible += r.start_dual_feasible ? 1 : 0;
    report.start_dual_feasible.push_back(start_feasible);

    for (std::size_t k = 0; k < cfg.rules.size(); ++k) {
      BenchCell cell;
      cell.size = size;
      cell.rule = cfg.rules[k];
      cell.instances = cfg.count;
      for (const auto& r : results) {
        const RunResult& run = r.runs[k];
        if (run.status == Status::DualFeasible) {
          cell.samples.push_back(run.iterations);
          cell.pivots.push_back(run.pivots);
        } else if (run.status == Status::LimitExceeded) {
          ++cell.cap_hits;
        } else {
          ++cell.dual_inconsistent;
        }
      }
      if (!cell.samples.empty()) {
        const Summary s = summarize(cell.samples);
        cell.mean = s.mean;
        cell.stddev = s.stddev;
        cell.min = *std::min_element(cell.samples.begin(), cell.samples.end());
        cell.max = *std::max_element(cell.samples.begin(), cell.samples.end());
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

namespace {

std::string fixed(double value, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, value);
  return buf;
}

std::string render_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "size,rule,count,mean,stddev,min,max,cap_hits,dual_inconsistent\n";
  for (const auto& cell : report.cells) {
    out << format_size(cell.size) << ',' << rule_name(cell.rule) << ',' << cell.samples.size() << ',';
    if (cell.samples.empty()) {
      out << ",,,";
    } else {
      out << fixed(cell.mean, 6) << ',' << fixed(cell.stddev, 6) << ',' << cell.min << ',' << cell.max;
    }
    out << ',' << cell.cap_hits << ',' << cell.dual_inconsistent << '\n';
  }
  return out.str();
}

std::string render_markdown(const BenchReport& report) {
  const BenchConfig& cfg = report.config;
  std::ostringstream out;
  out << "# Iterations to dual feasibility\n\n";
  out << "- tool: dualfeas " << kVersion << "\n";
  out << "- seed: " << cfg.seed << "\n";
  out << "- instances per size: " << cfg.count << "\n";
  out << "- arithmetic: " << to_string(cfg.mode);
  if (cfg.mode == Arithmetic::Float) out << " (eps " << format_double(cfg.eps) << ")";
  out << "\n";
  out << "- model: max c'x s.t. Ax <= b, x >= 0; c, A, b uniform integers in [" << cfg.lo << ", "
      << cfg.hi << "]\n";
  out << "- size: rows x columns (m x n)\n";
  out << "- cell: mean (sample standard deviation, n-1) of iterations over instances that reached "
         "dual feasibility\n";
  out << "- comparators: primal feasibility rules applied to the negative transpose of the "
         "dictionary\n";
  out << "- minimum angle: one iteration per pass; a pass with an SIE exchange performs two pivots\n";
  out << "\n";

  out << "| Size |";
  for (RuleId rule : report.rules) out << ' ' << rule_title(rule) << " |";
  out << "\n|---|";
  for (std::size_t k = 0; k < report.rules.size(); ++k) out << "---|";
  out << "\n";
  if (report.rules.empty()) return out.str();
  for (std::size_t s = 0; s < report.sizes.size(); ++s) {
    out << "| " << format_size(report.sizes[s]) << " |";
    for (std::size_t k = 0; k < report.rules.size(); ++k) {
      const BenchCell& cell = report.cell(s, k);
      if (cell.samples.empty()) {
        out << " - |";
      } else {
        out << ' ' << fixed(cell.mean, 2) << " (" << fixed(cell.stddev, 2) << ") |";
      }
    }
    out << "\n";
  }

  out << "\n| Size | Start dual feasible |";
  for (RuleId rule : report.rules) out << ' ' << rule_title(rule) << " excluded (cap / inconsistent) |";
  out << "\n|---|---|";
  for (std::size_t k = 0; k < report.rules.size(); ++k) out << "---|";
  out << "\n";
  for (std::size_t s = 0; s < report.sizes.size(); ++s) {
    out << "| " << format_size(report.sizes[s]) << " | " << report.start_dual_feasible[s] << " |";
    for (std::size_t k = 0; k < report.rules.size(); ++k) {
      const BenchCell& cell = report.cell(s, k);
      out << ' ' << cell.cap_hits << " / " << cell.dual_inconsistent << " |";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string render_report(const BenchReport& report, ReportFormat format) {
  return format == ReportFormat::Csv ? render_csv(report) : render_markdown(report);
}

}  // namespace dualfeas
