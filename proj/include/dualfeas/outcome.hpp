#pragma once

#include "dualfeas/tableau.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace dualfeas {

enum class RuleId { MinAngle, DantzigLex, Bland, BRule };

inline constexpr RuleId kAllRules[] = {RuleId::BRule, RuleId::Bland, RuleId::DantzigLex,
                                       RuleId::MinAngle};

/// CLI spelling: minangle, dantzig, bland, brule.
std::string_view rule_name(RuleId rule);
/// Column heading used in reports.
std::string_view rule_title(RuleId rule);
std::optional<RuleId> parse_rule(std::string_view name);

enum class Status { DualFeasible, Optimal, DualInconsistent, PrimalInfeasible, LimitExceeded };

std::string_view to_string(Status status);

struct CosineEntry {
  int row = 0;
  double cosine = 0.0;
};

using CosineTable = std::vector<CosineEntry>;

/// One pass of a rule: a single exchange, preceded by the SIE exchange for
/// minimum-angle passes that needed one.
template <class T>
struct StepRecord {
  RuleId rule = RuleId::MinAngle;
  int leaving = 0;
  int entering = 0;
  bool sie = false;
  /// Exchange made by the dual simplex after dual feasibility.
  bool dual_simplex = false;
  std::vector<int> improving;
  int main_direction = 0;
  int driving = 0;
  std::vector<int> resisting;
  CosineTable cosines;
  std::size_t pivots = 1;
  /// Dictionary snapshots, filled only when tracing.
  std::optional<Dictionary<T>> before;
  std::optional<Dictionary<T>> with_driving_row;
  std::optional<Dictionary<T>> after_sie;
  std::optional<Dictionary<T>> after_pivot;
  std::optional<Dictionary<T>> after;
};

template <class T>
struct SolveOutcome {
  Status status = Status::LimitExceeded;
  Dictionary<T> final;
  /// Outer passes; one per pivot for every rule but MinAngle.
  std::size_t iterations = 0;
  std::size_t pivots = 0;
  /// Column label for DualInconsistent, row label for PrimalInfeasible.
  std::optional<int> witness;
  /// Dual simplex exchanges performed after dual feasibility was reached.
  std::size_t phase2_pivots = 0;
  /// Set when solve() finished with Bland after the requested rule hit its cap.
  bool fell_back = false;
  std::vector<StepRecord<T>> trace;
};

struct Limits {
  /// 0 selects the rule default: 20 (m+n) passes for MinAngle, 10^4 otherwise.
  std::size_t max_iterations = 0;
  bool trace = false;
  bool snapshots = false;
};

inline constexpr std::size_t kComparatorCap = 10000;

inline std::size_t minangle_cap(std::size_t m, std::size_t n) { return 20 * (m + n); }

}  // namespace dualfeas
