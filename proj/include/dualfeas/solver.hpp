#pragma once


#include "dualfeas/outcome.hpp"
#include "dualfeas/tableau.hpp"

#include <vector>

namespace dualfeas {

/// Decision of a primal-feasibility pivot rule on one dictionary.
struct PivotChoice {
  enum class Kind { Feasible, Pivot, Inconsistent };

  Kind kind = Kind::Feasible;
  int leaving = 0;
  int entering = 0;
  /// Infeasible row with no negative coefficient, for Inconsistent.
  int witness = 0;
};

/// Least-index feasibility step. Row: smallest infeasible label. Column:
/// smallest label with a negative entry in that row. Leaving row: minimum
/// ratio over the feasible rows resisting the move plus the infeasible row
/// itself, smallest label on ties. Previously feasible rows stay feasible.
template <class T>
PivotChoice bland_feasibility_step(const Dictionary<T>& dict);

/// State carried across the pivots of one largest-coefficient run.
struct LexState {
  /// Basis the run started from; fixes the perturbation order.
  std::vector<int> reference;
  /// Row label being repaired, 0 when none is chosen yet.
  int target = 0;
};

/// Largest-coefficient feasibility step: most infeasible row, most negative
/// entry in it, minimum-ratio row with lexicographic tie-breaking.
///
/// Without `state` the step is memoryless and ties compare the scaled rows as
/// they stand (rhs first, then columns by ascending label).
///
/// With `state` the chosen row stays the target until it turns feasible, and
/// rows are compared through their perturbation vectors: rhs first, then for
/// every reference label in ascending order the row's coefficient on that label
/// (1 if it is the row's own basic variable, 0 if it is basic elsewhere). This
/// is Dantzig's method on the target row with a lexicographic ratio test, and it
/// cannot cycle.
template <class T>
PivotChoice dantzig_lex_step(const Dictionary<T>& dict, LexState* state = nullptr);

/// Ratio-test-free least-index step: pivots directly on the smallest
/// infeasible row and the smallest column with a negative entry in it.
template <class T>
PivotChoice brule_step(const Dictionary<T>& dict);

/// `state` is forwarded to dantzig_lex_step and ignored by the other rules.
template <class T>
PivotChoice feasibility_step(const Dictionary<T>& dict, RuleId rule, LexState* state = nullptr);

template <class T>
struct PrimalFeasibility {
  enum class Kind { Feasible, Infeasible, LimitExceeded };

  Kind kind = Kind::LimitExceeded;
  Dictionary<T> final;
  std::size_t pivots = 0;
  /// Inconsistent row label for Infeasible.
  std::optional<int> witness;
};

/// Runs a comparator rule on the dictionary itself until it is primal
/// feasible or shows an inconsistent row.
template <class T>
PrimalFeasibility<T> attain_primal_feasibility(const Dictionary<T>& dict, RuleId rule,
                                               const Limits& limits = {});

/// Drives the dictionary to dual feasibility with the given rule. Comparator
/// rules work on the negative transpose and map the result back.
template <class T>
SolveOutcome<T> attain_dual_feasibility(const Dictionary<T>& dict, RuleId rule,
                                        const Limits& limits = {});

enum class DualPricing {
  /// Most negative rhs leaves.
  MostNegative,
  /// Smallest infeasible label leaves; finite under degeneracy.
  LeastIndex,
};

/// Dual simplex from a dual feasible dictionary. Entering column minimises
/// d_0j / -d_ij over negative d_ij; ties go to the smaller label.
/// Throws std::invalid_argument when the input is not dual feasible.
template <class T>
SolveOutcome<T> dual_simplex(const Dictionary<T>& dict, const Limits& limits = {},
                             DualPricing pricing = DualPricing::MostNegative);

struct SolveOptions {
  Limits limits;
  double eps = kDefaultEps;
  /// Continue with Bland (phase 1) or least-index pricing (phase 2) when a cap is hit.
  bool fallback = true;
};

/// Slack dictionary, dual feasibility by `rule`, then dual simplex.
template <class T>
SolveOutcome<T> solve(const LPInstance& inst, RuleId rule, const SolveOptions& options = {});

}  // namespace dualfeas
