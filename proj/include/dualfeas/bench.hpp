#pragma once

#include "dualfeas/outcome.hpp"
#include "dualfeas/scalar.hpp"

#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dualfeas {

inline constexpr std::string_view kVersion = "0.1.0";

struct Size {
  std::size_t m = 0;
  std::size_t n = 0;
  bool operator==(const Size&) const = default;
};

/// The sixteen rows x columns sizes of the classic comparison table.
std::vector<Size> default_sizes();

/// "10x20" -> {10, 20}. Throws std::invalid_argument.
Size parse_size(std::string_view text);
std::string format_size(Size size);

struct BenchConfig {
  std::vector<Size> sizes = default_sizes();
  std::size_t count = 500;
  std::uint64_t seed = 1;
  std::vector<RuleId> rules{std::begin(kAllRules), std::end(kAllRules)};
  Arithmetic mode = Arithmetic::Float;
  double eps = kDefaultEps;
  std::int64_t lo = -50;
  std::int64_t hi = 50;
  /// 0 keeps each rule's default cap.
  std::size_t max_iterations = 0;
  /// Worker threads; results never depend on it.
  std::size_t jobs = 1;
};

struct BenchCell {
  Size size;
  RuleId rule = RuleId::MinAngle;
  /// Instances generated for this size.
  std::size_t instances = 0;
  /// Iteration counts of the runs that reached dual feasibility.
  std::vector<std::size_t> samples;
  std::vector<std::size_t> pivots;
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t min = 0;
  std::size_t max = 0;
  std::size_t cap_hits = 0;
  std::size_t dual_inconsistent = 0;
};

struct BenchReport {
  BenchConfig config;
  std::vector<Size> sizes;
  std::vector<RuleId> rules;
  /// Row-major: cells[size_index * rules.size() + rule_index].
  std::vector<BenchCell> cells;
  /// Per size, instances whose starting dictionary was already dual feasible.
  std::vector<std::size_t> start_dual_feasible;

  const BenchCell& cell(std::size_t size_index, std::size_t rule_index) const {
    return cells[size_index * rules.size() + rule_index];
  }
};

class EmptySample : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Summary {
  double mean = 0.0;
  double stddev = 0.0;
};

/// Arithmetic mean and sample standard deviation (n - 1 denominator; 0 for a
/// single sample).
template <class Number>
Summary summarize(const std::vector<Number>& samples);

/// Paired design: each instance is generated once and handed to every rule.
BenchReport run_benchmark(const BenchConfig& cfg);

enum class ReportFormat { Markdown, Csv };

std::string render_report(const BenchReport& report, ReportFormat format);

}  // namespace dualfeas
