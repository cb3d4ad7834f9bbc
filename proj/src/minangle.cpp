#include "dualfeas/minangle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

namespace dualfeas {

namespace {

template <class T>
T squared_row_norm(const Dictionary<T>& dict, std::size_t row) {
  T sum(0);
  for (std::size_t j = 1; j <= dict.num_cols(); ++j) sum += dict.at(row, j) * dict.at(row, j);
  return sum;
}

// Selection key: cos^2 for resisting rows (whose cosine is positive).
template <class T>
T squared_cosine(const Dictionary<T>& dict, std::size_t row, std::size_t col) {
  const T norm = squared_row_norm(dict, row);
  return dict.at(row, col) * dict.at(row, col) / norm;
}

bool strictly_larger(double a, double b) {
  return std::sqrt(a) - std::sqrt(b) > kCosineTieTolerance;
}

bool strictly_larger(const Rational& a, const Rational& b) { return a > b; }

}  // namespace

template <class T>
std::vector<int> improving_set(const Dictionary<T>& dict) {
  std::vector<int> out;
  for (std::size_t j = 1; j <= dict.num_cols(); ++j) {
    if (dict.negative(dict.objective_coeff(j))) out.push_back(dict.nonbasic_label(j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class T>
int main_direction(const Dictionary<T>& dict, std::span<const int> improving) {
  if (improving.empty()) throw std::invalid_argument("empty improving set");
  std::vector<int> labels(improving.begin(), improving.end());
  std::sort(labels.begin(), labels.end());
  int best = labels.front();
  T best_value = dict.objective_coeff(dict.require_col(best));
  for (int label : labels) {
    const T& value = dict.objective_coeff(dict.require_col(label));
    if (dict.negative(value - best_value)) {
      best = label;
      best_value = value;
    }
  }
  return best;
}

template <class T>
std::pair<Dictionary<T>, SieContext> sie_transform(const Dictionary<T>& dict,
                                                   std::span<const int> improving, int l) {
  if (improving.size() <= 1) {
    throw DegenerateSie("SIE transformation needs at least two improving columns");
  }
  if (std::find(improving.begin(), improving.end(), l) == improving.end()) {
    throw std::invalid_argument("main direction is not an improving column");
  }

  SieContext ctx;
  ctx.driving = dict.next_label();
  ctx.main_direction = l;
  ctx.improving.assign(improving.begin(), improving.end());
  ctx.inserted = true;

  std::vector<T> row(dict.num_cols(), T(0));
  for (int label : improving) {
    const std::size_t col = dict.require_col(label);
    // x_r is a combination of x_L with weights -d_0j, all positive.
    assert(dict.negative(dict.objective_coeff(col)));
    row[col - 1] = dict.objective_coeff(col);
  }

  Dictionary<T> out = dict;
  out.append_row(ctx.driving, T(0), row);
  out.pivot_at(out.num_rows(), out.require_col(l));
  return {std::move(out), std::move(ctx)};
}

template <class T>
double cosine(const Dictionary<T>& dict, int k, int r) {
  using Traits = ScalarTraits<T>;
  const std::size_t row = dict.require_row(k);
  const std::size_t col = dict.require_col(r);
  const T norm_sq = squared_row_norm(dict, row);
  if (dict.is_zero(norm_sq)) {
    throw ZeroRow("row " + std::to_string(k) + " has a zero h-vector");
  }
  return Traits::to_double(dict.at(row, col)) / std::sqrt(Traits::to_double(norm_sq));
}

template <class T>
std::vector<int> resisting_set(const Dictionary<T>& dict, int r) {
  const std::size_t col = dict.require_col(r);
  std::vector<int> out;
  for (std::size_t i = 1; i <= dict.num_rows(); ++i) {
    if (dict.positive(dict.at(i, col))) out.push_back(dict.basic_label(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class T>
CosineTable cosine_table(const Dictionary<T>& dict, std::span<const int> resisting, int r) {
  CosineTable table;
  table.reserve(resisting.size());
  for (int k : resisting) table.push_back({k, cosine(dict, k, r)});
  return table;
}

template <class T>
int most_contrary(const Dictionary<T>& dict, std::span<const int> resisting, int r) {
  if (resisting.empty()) throw std::invalid_argument("empty resisting set");
  const std::size_t col = dict.require_col(r);
  int best = 0;
  T best_key(0);
  for (int k : resisting) {
    const T key = squared_cosine(dict, dict.require_row(k), col);
    if (best == 0 || strictly_larger(key, best_key) ||
        (!strictly_larger(best_key, key) && k < best)) {
      best = k;
      best_key = key;
    }
  }
  return best;
}

template <class T>
MinAngleStep<T> minangle_iteration(const Dictionary<T>& dict, bool snapshots) {
  MinAngleStep<T> step;
  step.record.rule = RuleId::MinAngle;
  if (snapshots) step.record.before = dict;

  // Steps 1-3: improving set and main direction.
  step.record.improving = improving_set(dict);
  if (step.record.improving.empty()) {
    step.kind = MinAngleStep<T>::Kind::AlreadyDualFeasible;
    step.dict = dict;
    step.record.pivots = 0;
    return step;
  }
  const int l = main_direction(dict, step.record.improving);
  step.record.main_direction = l;

  // Step 4: single improving edge.
  Dictionary<T> work;
  int r = l;
  if (step.record.improving.size() > 1) {
    auto [transformed, ctx] = sie_transform(dict, step.record.improving, l);
    r = ctx.driving;
    step.record.sie = true;
    step.record.pivots = 2;
    if (snapshots) {
      Dictionary<T> inserted = dict;
      std::vector<T> row(dict.num_cols(), T(0));
      for (int label : step.record.improving) {
        const std::size_t col = dict.require_col(label);
        row[col - 1] = dict.objective_coeff(col);
      }
      inserted.append_row(r, T(0), row);
      step.record.with_driving_row = std::move(inserted);
      step.record.after_sie = transformed;
    }
    work = std::move(transformed);
  } else {
    work = dict;
  }
  step.record.driving = r;

  // Step 5: resisting constraints.
  step.record.resisting = resisting_set(work, r);
  if (step.record.resisting.empty()) {
    step.kind = MinAngleStep<T>::Kind::DualInconsistent;
    step.witness = r;
    step.record.pivots = step.record.sie ? 1 : 0;
    step.dict = std::move(work);
    return step;
  }

  // Step 6: most contrary constraint.
  step.record.cosines = cosine_table(work, step.record.resisting, r);
  const int leaving = most_contrary(work, step.record.resisting, r);

  // Step 7.
  work.pivot_at(work.require_row(leaving), work.require_col(r));
  step.record.leaving = leaving;
  step.record.entering = r;
  if (snapshots) step.record.after_pivot = work;

  // Step 8: the driving row goes away only if this pass created it.
  if (step.record.sie) work.remove_row(work.require_row(r));
  if (snapshots) step.record.after = work;

  step.kind = MinAngleStep<T>::Kind::Pivoted;
  step.dict = std::move(work);
  return step;
}

template <class T>
SolveOutcome<T> attain_dual_feasibility_minangle(const Dictionary<T>& dict, const Limits& limits) {
  SolveOutcome<T> out;
  const std::size_t cap = limits.max_iterations != 0
                              ? limits.max_iterations
                              : minangle_cap(dict.num_rows(), dict.num_cols());
  Dictionary<T> current = dict;
  while (true) {
    if (out.iterations >= cap) {
      if (is_dual_feasible(current)) {
        out.status = Status::DualFeasible;
      } else {
        out.status = Status::LimitExceeded;
      }
      break;
    }
    auto step = minangle_iteration(current, limits.snapshots);
    using Kind = typename MinAngleStep<T>::Kind;
    if (step.kind == Kind::AlreadyDualFeasible) {
      out.status = Status::DualFeasible;
      break;
    }
    out.pivots += step.record.pivots;
    if (step.kind == Kind::DualInconsistent) {
      out.status = Status::DualInconsistent;
      out.witness = step.witness;
      if (limits.trace) out.trace.push_back(std::move(step.record));
      current = std::move(step.dict);
      break;
    }
    ++out.iterations;
    if (limits.trace) out.trace.push_back(std::move(step.record));
    current = std::move(step.dict);
  }
  out.final = std::move(current);
  return out;
}

#define DUALFEAS_INSTANTIATE(T)                                                                  \
  template std::vector<int> improving_set<T>(const Dictionary<T>&);                              \
  template int main_direction<T>(const Dictionary<T>&, std::span<const int>);                    \
  template std::pair<Dictionary<T>, SieContext> sie_transform<T>(const Dictionary<T>&,           \
                                                                 std::span<const int>, int);     \
  template double cosine<T>(const Dictionary<T>&, int, int);                                     \
  template std::vector<int> resisting_set<T>(const Dictionary<T>&, int);                         \
  template CosineTable cosine_table<T>(const Dictionary<T>&, std::span<const int>, int);         \
  template int most_contrary<T>(const Dictionary<T>&, std::span<const int>, int);                \
  template MinAngleStep<T> minangle_iteration<T>(const Dictionary<T>&, bool);                    \
  template SolveOutcome<T> attain_dual_feasibility_minangle<T>(const Dictionary<T>&, const Limits&);

DUALFEAS_INSTANTIATE(double)
DUALFEAS_INSTANTIATE(Rational)

#undef DUALFEAS_INSTANTIATE

}  // namespace dualfeas
