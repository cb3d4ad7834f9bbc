#include "dualfeas/solver.hpp"

#include "dualfeas/minangle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dualfeas {

std::string_view rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::MinAngle: return "minangle";
    case RuleId::DantzigLex: return "dantzig";
    case RuleId::Bland: return "bland";
    case RuleId::BRule: return "brule";
  }
  return "minangle";
}

std::string_view rule_title(RuleId rule) {
  switch (rule) {
    case RuleId::MinAngle: return "Minimum angle";
    case RuleId::DantzigLex: return "Dantzig";
    case RuleId::Bland: return "Bland's rule";
    case RuleId::BRule: return "B' Rule";
  }
  return "";
}

std::optional<RuleId> parse_rule(std::string_view name) {
  for (RuleId rule : kAllRules) {
    if (rule_name(rule) == name) return rule;
  }
  return std::nullopt;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::DualFeasible: return "DualFeasible";
    case Status::Optimal: return "Optimal";
    case Status::DualInconsistent: return "DualInconsistent";
    case Status::PrimalInfeasible: return "PrimalInfeasible";
    case Status::LimitExceeded: return "LimitExceeded";
  }
  return "";
}

namespace {

/// Row index with the smallest infeasible label, 0 if none.
template <class T>
std::size_t least_infeasible_row(const Dictionary<T>& dict) {
  std::size_t best = 0;
  for (std::size_t i = 1; i <= dict.num_rows(); ++i) {
    if (!dict.negative(dict.rhs(i))) continue;
    if (best == 0 || dict.basic_label(i) < dict.basic_label(best)) best = i;
  }
  return best;
}

template <class T>
std::size_t least_negative_col(const Dictionary<T>& dict, std::size_t row) {
  std::size_t best = 0;
  for (std::size_t j = 1; j <= dict.num_cols(); ++j) {
    if (!dict.negative(dict.at(row, j))) continue;
    if (best == 0 || dict.nonbasic_label(j) < dict.nonbasic_label(best)) best = j;
  }
  return best;
}

/// Rows that may block column `col` when row `infeasible` is being repaired.
template <class T>
std::vector<std::size_t> ratio_candidates(const Dictionary<T>& dict, std::size_t infeasible,
                                          std::size_t col) {
  std::vector<std::size_t> rows{infeasible};
  for (std::size_t k = 1; k <= dict.num_rows(); ++k) {
    if (k == infeasible) continue;
    if (!dict.negative(dict.rhs(k)) && dict.positive(dict.at(k, col))) rows.push_back(k);
  }
  return rows;
}

template <class T>
PivotChoice make_pivot(const Dictionary<T>& dict, std::size_t row, std::size_t col) {
  PivotChoice choice;
  choice.kind = PivotChoice::Kind::Pivot;
  choice.leaving = dict.basic_label(row);
  choice.entering = dict.nonbasic_label(col);
  return choice;
}

template <class T>
PivotChoice inconsistent(const Dictionary<T>& dict, std::size_t row) {
  PivotChoice choice;
  choice.kind = PivotChoice::Kind::Inconsistent;
  choice.witness = dict.basic_label(row);
  return choice;
}

/// -1, 0, 1 comparing the scaled rows of k1 and k2 lexicographically.
template <class T>
int lex_compare(const Dictionary<T>& dict, std::size_t k1, std::size_t k2, std::size_t col) {
  std::vector<std::size_t> order(dict.num_cols());
  std::iota(order.begin(), order.end(), std::size_t{1});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dict.nonbasic_label(a) < dict.nonbasic_label(b);
  });
  order.insert(order.begin(), 0);
  const T& p1 = dict.at(k1, col);
  const T& p2 = dict.at(k2, col);
  for (std::size_t c : order) {
    const T diff = dict.at(k1, c) / p1 - dict.at(k2, c) / p2;
    if (dict.negative(diff)) return -1;
    if (dict.positive(diff)) return 1;
  }
  return 0;
}

// Coefficient of reference label `label` in the perturbation vector of row k.
template <class T>
T perturbation(const Dictionary<T>& dict, std::size_t k, int label) {
  if (const auto col = dict.col_of(label)) return dict.at(k, *col);
  return dict.basic_label(k) == label ? T(1) : T(0);
}

template <class T>
bool lex_positive(const Dictionary<T>& dict, std::size_t k, const std::vector<int>& labels) {
  for (int label : labels) {
    const T v = perturbation(dict, k, label);
    if (dict.positive(v)) return true;
    if (dict.negative(v)) return false;
  }
  return false;
}

template <class T>
int lex_compare_reference(const Dictionary<T>& dict, std::size_t k1, std::size_t k2, std::size_t col,
                          const std::vector<int>& labels) {
  const T& p1 = dict.at(k1, col);
  const T& p2 = dict.at(k2, col);
  T diff = dict.rhs(k1) / p1 - dict.rhs(k2) / p2;
  if (dict.negative(diff)) return -1;
  if (dict.positive(diff)) return 1;
  for (int label : labels) {
    diff = perturbation(dict, k1, label) / p1 - perturbation(dict, k2, label) / p2;
    if (dict.negative(diff)) return -1;
    if (dict.positive(diff)) return 1;
  }
  return 0;
}

}  // namespace

template <class T>
PivotChoice bland_feasibility_step(const Dictionary<T>& dict) {
  const std::size_t row = least_infeasible_row(dict);
  if (row == 0) return {};
  const std::size_t col = least_negative_col(dict, row);
  if (col == 0) return inconsistent(dict, row);

  std::size_t best = 0;
  T best_ratio(0);
  for (std::size_t k : ratio_candidates(dict, row, col)) {
    const T ratio = dict.rhs(k) / dict.at(k, col);
    if (best == 0 || dict.negative(ratio - best_ratio) ||
        (!dict.positive(ratio - best_ratio) && dict.basic_label(k) < dict.basic_label(best))) {
      best = k;
      best_ratio = ratio;
    }
  }
  return make_pivot(dict, best, col);
}

template <class T>
PivotChoice dantzig_lex_step(const Dictionary<T>& dict, LexState* state) {
  std::vector<int> labels;
  if (state) {
    labels = state->reference;
    std::sort(labels.begin(), labels.end());
  }

  std::size_t row = 0;
  if (state && state->target != 0) {
    const auto kept = dict.row_of(state->target);
    if (kept && dict.negative(dict.rhs(*kept))) row = *kept;
  }
  if (row == 0) {
    for (std::size_t i = 1; i <= dict.num_rows(); ++i) {
      if (!dict.negative(dict.rhs(i))) continue;
      if (row == 0 || dict.negative(dict.rhs(i) - dict.rhs(row)) ||
          (!dict.positive(dict.rhs(i) - dict.rhs(row)) && dict.basic_label(i) < dict.basic_label(row))) {
        row = i;
      }
    }
  }
  if (state) state->target = row == 0 ? 0 : dict.basic_label(row);
  if (row == 0) return {};

  std::size_t col = 0;
  for (std::size_t j = 1; j <= dict.num_cols(); ++j) {
    if (!dict.negative(dict.at(row, j))) continue;
    if (col == 0 || dict.negative(dict.at(row, j) - dict.at(row, col)) ||
        (!dict.positive(dict.at(row, j) - dict.at(row, col)) &&
         dict.nonbasic_label(j) < dict.nonbasic_label(col))) {
      col = j;
    }
  }
  if (col == 0) return inconsistent(dict, row);

  std::vector<std::size_t> candidates = ratio_candidates(dict, row, col);
  if (state) {
    // Zero rows count as feasible only if their perturbation is positive.
    std::erase_if(candidates, [&](std::size_t k) {
      return k != row && dict.is_zero(dict.rhs(k)) && !lex_positive(dict, k, labels);
    });
  }

  std::size_t best = 0;
  T best_ratio(0);
  for (std::size_t k : candidates) {
    const T ratio = dict.rhs(k) / dict.at(k, col);
    bool take = best == 0 || dict.negative(ratio - best_ratio);
    if (!take && !dict.positive(ratio - best_ratio)) {
      const int cmp = state ? lex_compare_reference(dict, k, best, col, labels) : lex_compare(dict, k, best, col);
      take = cmp < 0 || (cmp == 0 && dict.basic_label(k) < dict.basic_label(best));
    }
    if (take) {
      best = k;
      best_ratio = ratio;
    }
  }
  return make_pivot(dict, best, col);
}

template <class T>
PivotChoice brule_step(const Dictionary<T>& dict) {
  const std::size_t row = least_infeasible_row(dict);
  if (row == 0) return {};
  const std::size_t col = least_negative_col(dict, row);
  if (col == 0) return inconsistent(dict, row);
  return make_pivot(dict, row, col);
}

template <class T>
PivotChoice feasibility_step(const Dictionary<T>& dict, RuleId rule, LexState* state) {
  switch (rule) {
    case RuleId::Bland: return bland_feasibility_step(dict);
    case RuleId::DantzigLex: return dantzig_lex_step(dict, state);
    case RuleId::BRule: return brule_step(dict);
    case RuleId::MinAngle: break;
  }
  throw std::invalid_argument("minangle is not a primal feasibility rule");
}

namespace {

// Shared loop of the comparator rules. `flip` says whether `work` is the
// negative transpose of the caller's dictionary.
template <class T>
SolveOutcome<T> run_feasibility(Dictionary<T> work, RuleId rule, const Limits& limits, bool flip) {
  SolveOutcome<T> out;
  const std::size_t cap = limits.max_iterations != 0 ? limits.max_iterations : kComparatorCap;
  auto view = [flip](const Dictionary<T>& d) { return flip ? negative_transpose(d) : d; };
  LexState lex{std::vector<int>(work.basis().begin(), work.basis().end()), 0};

  while (true) {
    const PivotChoice choice = feasibility_step(work, rule, &lex);
    if (choice.kind == PivotChoice::Kind::Feasible) {
      out.status = flip ? Status::DualFeasible : Status::Optimal;
      break;
    }
    if (choice.kind == PivotChoice::Kind::Inconsistent) {
      out.status = flip ? Status::DualInconsistent : Status::PrimalInfeasible;
      out.witness = choice.witness;
      break;
    }
    if (out.iterations >= cap) {
      out.status = Status::LimitExceeded;
      break;
    }
    StepRecord<T> record;
    record.rule = rule;
    if (limits.snapshots) record.before = view(work);
    work.pivot_at(work.require_row(choice.leaving), work.require_col(choice.entering));
    // A dual exchange (j, i) is the primal exchange (i, j).
    record.leaving = flip ? choice.entering : choice.leaving;
    record.entering = flip ? choice.leaving : choice.entering;
    if (limits.snapshots) record.after = view(work);
    ++out.iterations;
    ++out.pivots;
    if (limits.trace) out.trace.push_back(std::move(record));
  }
  out.final = view(work);
  return out;
}

}  // namespace

template <class T>
PrimalFeasibility<T> attain_primal_feasibility(const Dictionary<T>& dict, RuleId rule,
                                               const Limits& limits) {
  auto run = run_feasibility(dict, rule, limits, false);
  PrimalFeasibility<T> out;
  out.final = std::move(run.final);
  out.pivots = run.pivots;
  out.witness = run.witness;
  switch (run.status) {
    case Status::PrimalInfeasible: out.kind = PrimalFeasibility<T>::Kind::Infeasible; break;
    case Status::LimitExceeded: out.kind = PrimalFeasibility<T>::Kind::LimitExceeded; break;
    default: out.kind = PrimalFeasibility<T>::Kind::Feasible; break;
  }
  return out;
}

template <class T>
SolveOutcome<T> attain_dual_feasibility(const Dictionary<T>& dict, RuleId rule, const Limits& limits) {
  if (rule == RuleId::MinAngle) return attain_dual_feasibility_minangle(dict, limits);
  return run_feasibility(negative_transpose(dict), rule, limits, true);
}

template <class T>
SolveOutcome<T> dual_simplex(const Dictionary<T>& dict, const Limits& limits, DualPricing pricing) {
  if (!is_dual_feasible(dict)) throw std::invalid_argument("dual simplex needs a dual feasible dictionary");
  SolveOutcome<T> out;
  const std::size_t cap = limits.max_iterations != 0 ? limits.max_iterations : kComparatorCap;
  Dictionary<T> work = dict;

  while (true) {
    std::size_t row = 0;
    for (std::size_t i = 1; i <= work.num_rows(); ++i) {
      if (!work.negative(work.rhs(i))) continue;
      if (row == 0) {
        row = i;
        continue;
      }
      const bool lower_label = work.basic_label(i) < work.basic_label(row);
      if (pricing == DualPricing::LeastIndex) {
        if (lower_label) row = i;
      } else if (work.negative(work.rhs(i) - work.rhs(row)) ||
                 (!work.positive(work.rhs(i) - work.rhs(row)) && lower_label)) {
        row = i;
      }
    }
    if (row == 0) {
      out.status = Status::Optimal;
      break;
    }

    std::size_t col = 0;
    T best_ratio(0);
    for (std::size_t j = 1; j <= work.num_cols(); ++j) {
      if (!work.negative(work.at(row, j))) continue;
      const T ratio = work.objective_coeff(j) / -work.at(row, j);
      if (col == 0 || work.negative(ratio - best_ratio) ||
          (!work.positive(ratio - best_ratio) && work.nonbasic_label(j) < work.nonbasic_label(col))) {
        col = j;
        best_ratio = ratio;
      }
    }
    if (col == 0) {
      out.status = Status::PrimalInfeasible;
      out.witness = work.basic_label(row);
      break;
    }
    if (out.iterations >= cap) {
      out.status = Status::LimitExceeded;
      break;
    }

    StepRecord<T> record;
    record.dual_simplex = true;
    if (limits.snapshots) record.before = work;
    record.leaving = work.basic_label(row);
    record.entering = work.nonbasic_label(col);
    work.pivot_at(row, col);
    if (limits.snapshots) record.after = work;
    ++out.iterations;
    ++out.pivots;
    if (limits.trace) out.trace.push_back(std::move(record));
  }
  out.final = std::move(work);
  return out;
}

namespace {

template <class T>
void absorb(SolveOutcome<T>& into, SolveOutcome<T>&& more) {
  into.iterations += more.iterations;
  into.pivots += more.pivots;
  into.status = more.status;
  into.witness = more.witness;
  into.final = std::move(more.final);
  for (auto& record : more.trace) into.trace.push_back(std::move(record));
}

}  // namespace

template <class T>
SolveOutcome<T> solve(const LPInstance& inst, RuleId rule, const SolveOptions& options) {
  const Dictionary<T> start = build_dictionary<T>(inst, options.eps);
  SolveOutcome<T> out = attain_dual_feasibility(start, rule, options.limits);

  if (out.status == Status::LimitExceeded && options.fallback) {
    Limits bland_limits = options.limits;
    bland_limits.max_iterations = 0;
    absorb(out, attain_dual_feasibility(out.final, RuleId::Bland, bland_limits));
    out.fell_back = true;
  }

  if (out.status == Status::DualInconsistent) {
    // Dual infeasible: the LP is unbounded if it has a feasible point at all.
    Limits check_limits;
    const auto feasibility = attain_primal_feasibility(out.final, RuleId::Bland, check_limits);
    using Kind = typename PrimalFeasibility<T>::Kind;
    if (feasibility.kind == Kind::Infeasible) {
      out.status = Status::PrimalInfeasible;
      out.witness = feasibility.witness;
    } else if (feasibility.kind == Kind::LimitExceeded) {
      out.status = Status::LimitExceeded;
    }
    return out;
  }
  if (out.status != Status::DualFeasible) return out;

  SolveOutcome<T> phase2 = dual_simplex(out.final, options.limits);
  if (phase2.status == Status::LimitExceeded && options.fallback) {
    Limits least_index = options.limits;
    least_index.max_iterations = 0;
    auto rest = dual_simplex(phase2.final, least_index, DualPricing::LeastIndex);
    absorb(phase2, std::move(rest));
    out.fell_back = true;
  }
  out.phase2_pivots = phase2.pivots;
  out.pivots += phase2.pivots;
  out.status = phase2.status;
  out.witness = phase2.witness;
  out.final = std::move(phase2.final);
  for (auto& record : phase2.trace) out.trace.push_back(std::move(record));
  return out;
}

#define DUALFEAS_INSTANTIATE(T)                                                                        \
  template PivotChoice bland_feasibility_step<T>(const Dictionary<T>&);                               \
  template PivotChoice dantzig_lex_step<T>(const Dictionary<T>&, LexState*);                         \
  template PivotChoice brule_step<T>(const Dictionary<T>&);                                           \
  template PivotChoice feasibility_step<T>(const Dictionary<T>&, RuleId, LexState*);                 \
  template PrimalFeasibility<T> attain_primal_feasibility<T>(const Dictionary<T>&, RuleId, const Limits&); \
  template SolveOutcome<T> attain_dual_feasibility<T>(const Dictionary<T>&, RuleId, const Limits&);   \
  template SolveOutcome<T> dual_simplex<T>(const Dictionary<T>&, const Limits&, DualPricing);         \
  template SolveOutcome<T> solve<T>(const LPInstance&, RuleId, const SolveOptions&);

DUALFEAS_INSTANTIATE(double)
DUALFEAS_INSTANTIATE(Rational)

#undef DUALFEAS_INSTANTIATE

}  // namespace dualfeas
