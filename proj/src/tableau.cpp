#include "dualfeas/tableau.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace dualfeas {

LPInstance::LPInstance(std::size_t rows, std::size_t cols)
    : m(rows), n(cols), c(cols), a(rows * cols), b(rows) {}

void LPInstance::validate() const {
  if (m == 0 || n == 0) throw std::invalid_argument("instance needs m >= 1 and n >= 1");
  if (c.size() != n) throw std::invalid_argument("objective has wrong length");
  if (b.size() != m) throw std::invalid_argument("rhs has wrong length");
  if (a.size() != m * n) throw std::invalid_argument("constraint matrix has wrong size");
}

std::string_view to_string(DictionaryStatus::Kind kind) {
  using Kind = DictionaryStatus::Kind;
  switch (kind) {
    case Kind::OptimalFeasible: return "OptimalFeasible";
    case Kind::Inconsistent: return "Inconsistent";
    case Kind::Unbounded: return "Unbounded";
    case Kind::PrimalFeasible: return "PrimalFeasible";
    case Kind::DualFeasible: return "DualFeasible";
    case Kind::None: return "None";
  }
  return "None";
}

template <class T>
Dictionary<T>::Dictionary(std::vector<int> basis, std::vector<int> nonbasis, std::vector<T> cells,
                          double eps)
    : basis_(std::move(basis)), nonbasis_(std::move(nonbasis)), cells_(std::move(cells)), eps_(eps) {
  if (cells_.size() != (basis_.size() + 1) * (nonbasis_.size() + 1)) {
    throw std::invalid_argument("dictionary cell count does not match its labels");
  }
  std::vector<int> labels(basis_.begin(), basis_.end());
  labels.insert(labels.end(), nonbasis_.begin(), nonbasis_.end());
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw std::invalid_argument("dictionary labels must be unique");
  }
  if (!labels.empty() && labels.front() <= 0) {
    throw std::invalid_argument("dictionary labels must be positive");
  }
}

template <class T>
std::optional<std::size_t> Dictionary<T>::row_of(int label) const {
  auto it = std::find(basis_.begin(), basis_.end(), label);
  if (it == basis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin()) + 1;
}

template <class T>
std::optional<std::size_t> Dictionary<T>::col_of(int label) const {
  auto it = std::find(nonbasis_.begin(), nonbasis_.end(), label);
  if (it == nonbasis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - nonbasis_.begin()) + 1;
}

template <class T>
std::size_t Dictionary<T>::require_row(int label) const {
  if (auto row = row_of(label)) return *row;
  throw UnknownLabel("label " + std::to_string(label) + " is not basic");
}

template <class T>
std::size_t Dictionary<T>::require_col(int label) const {
  if (auto col = col_of(label)) return *col;
  throw UnknownLabel("label " + std::to_string(label) + " is not nonbasic");
}

template <class T>
void Dictionary<T>::pivot_at(std::size_t row, std::size_t col) {
  const std::size_t rows = basis_.size() + 1;
  const std::size_t cols = width();
  if (row == 0 || row >= rows || col == 0 || col >= cols) {
    throw std::out_of_range("pivot position outside the tableau");
  }
  const T p = at(row, col);
  if (is_zero(p)) {
    throw ZeroPivot("pivot element at (" + std::to_string(basis_[row - 1]) + ", " +
                    std::to_string(nonbasis_[col - 1]) + ") is zero");
  }

  // New pivot row: x_enter = d_i0/p - sum_{k != enter} (d_ik/p) x_k - (1/p) x_leave.
  for (std::size_t k = 0; k < cols; ++k) {
    if (k != col) at(row, k) /= p;
  }
  at(row, col) = T(1) / p;

  for (std::size_t r = 0; r < rows; ++r) {
    if (r == row) continue;
    const T factor = at(r, col);
    if (factor == T(0)) continue;
    for (std::size_t k = 0; k < cols; ++k) {
      if (k != col) at(r, k) -= factor * at(row, k);
    }
    at(r, col) = -factor * at(row, col);
  }
  std::swap(basis_[row - 1], nonbasis_[col - 1]);
}

template <class T>
void Dictionary<T>::append_row(int label, T rhs, std::span<const T> coeffs) {
  if (coeffs.size() != nonbasis_.size()) {
    throw std::invalid_argument("appended row has wrong length");
  }
  if (row_of(label) || col_of(label)) {
    throw std::invalid_argument("label " + std::to_string(label) + " already in use");
  }
  cells_.push_back(std::move(rhs));
  cells_.insert(cells_.end(), coeffs.begin(), coeffs.end());
  basis_.push_back(label);
}

template <class T>
void Dictionary<T>::remove_row(std::size_t row) {
  if (row == 0 || row > basis_.size()) throw std::out_of_range("row outside the tableau");
  auto first = cells_.begin() + static_cast<std::ptrdiff_t>(row * width());
  cells_.erase(first, first + static_cast<std::ptrdiff_t>(width()));
  basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row - 1));
}

template <class T>
Dictionary<T> build_dictionary(const LPInstance& inst, double eps) {
  inst.validate();
  using Traits = ScalarTraits<T>;
  std::vector<int> nonbasis(inst.n);
  std::vector<int> basis(inst.m);
  for (std::size_t j = 0; j < inst.n; ++j) nonbasis[j] = static_cast<int>(j + 1);
  for (std::size_t i = 0; i < inst.m; ++i) basis[i] = static_cast<int>(inst.n + i + 1);

  std::vector<T> cells;
  cells.reserve((inst.m + 1) * (inst.n + 1));
  cells.emplace_back(0);
  for (const auto& cj : inst.c) cells.push_back(Traits::from_rational(-cj));
  for (std::size_t i = 0; i < inst.m; ++i) {
    cells.push_back(Traits::from_rational(inst.b[i]));
    for (std::size_t j = 0; j < inst.n; ++j) cells.push_back(Traits::from_rational(inst.coeff(i, j)));
  }
  return Dictionary<T>(std::move(basis), std::move(nonbasis), std::move(cells), eps);
}

template <class T>
Dictionary<T> pivot(const Dictionary<T>& dict, int leave, int enter) {
  Dictionary<T> out = dict;
  out.pivot_at(dict.require_row(leave), dict.require_col(enter));
  return out;
}

template <class T>
bool is_primal_feasible(const Dictionary<T>& dict) {
  for (std::size_t i = 1; i <= dict.num_rows(); ++i) {
    if (dict.negative(dict.rhs(i))) return false;
  }
  return true;
}

template <class T>
bool is_dual_feasible(const Dictionary<T>& dict) {
  for (std::size_t j = 1; j <= dict.num_cols(); ++j) {
    if (dict.negative(dict.objective_coeff(j))) return false;
  }
  return true;
}

template <class T>
DictionaryStatus classify(const Dictionary<T>& dict) {
  DictionaryStatus status;
  status.primal_feasible = is_primal_feasible(dict);
  status.dual_feasible = is_dual_feasible(dict);
  using Kind = DictionaryStatus::Kind;
  if (status.primal_feasible && status.dual_feasible) {
    status.kind = Kind::OptimalFeasible;
    return status;
  }

  std::optional<int> inconsistent;
  for (std::size_t i = 1; i <= dict.num_rows(); ++i) {
    if (!dict.negative(dict.rhs(i))) continue;
    bool blocked = true;
    for (std::size_t j = 1; j <= dict.num_cols() && blocked; ++j) {
      blocked = !dict.negative(dict.at(i, j));
    }
    const int label = dict.basic_label(i);
    if (blocked && (!inconsistent || label < *inconsistent)) inconsistent = label;
  }
  if (inconsistent) {
    status.kind = Kind::Inconsistent;
    status.witness = inconsistent;
    return status;
  }

  std::optional<int> unbounded;
  for (std::size_t j = 1; j <= dict.num_cols(); ++j) {
    if (!dict.negative(dict.objective_coeff(j))) continue;
    bool ray = true;
    for (std::size_t i = 1; i <= dict.num_rows() && ray; ++i) {
      ray = !dict.positive(dict.at(i, j));
    }
    const int label = dict.nonbasic_label(j);
    if (ray && (!unbounded || label < *unbounded)) unbounded = label;
  }
  if (unbounded) {
    status.kind = Kind::Unbounded;
    status.witness = unbounded;
    return status;
  }

  if (status.primal_feasible) {
    status.kind = Kind::PrimalFeasible;
  } else if (status.dual_feasible) {
    status.kind = Kind::DualFeasible;
  }
  return status;
}

template <class T>
std::vector<T> basic_solution(const Dictionary<T>& dict, const LPInstance& inst) {
  std::vector<T> x(inst.n, T(0));
  for (std::size_t i = 1; i <= dict.num_rows(); ++i) {
    const int label = dict.basic_label(i);
    if (label >= 1 && static_cast<std::size_t>(label) <= inst.n) {
      x[static_cast<std::size_t>(label) - 1] = dict.rhs(i);
    }
  }
  return x;
}

template <class T>
Dictionary<T> negative_transpose(const Dictionary<T>& dict) {
  const std::size_t m = dict.num_rows();
  const std::size_t n = dict.num_cols();
  std::vector<T> cells((n + 1) * (m + 1));
  auto cell = [&](std::size_t r, std::size_t c) -> T& { return cells[r * (m + 1) + c]; };

  cell(0, 0) = -dict.at(0, 0);
  for (std::size_t i = 1; i <= m; ++i) cell(0, i) = dict.at(i, 0);
  for (std::size_t j = 1; j <= n; ++j) {
    cell(j, 0) = dict.at(0, j);
    for (std::size_t i = 1; i <= m; ++i) cell(j, i) = -dict.at(i, j);
  }
  std::vector<int> basis(dict.nonbasis().begin(), dict.nonbasis().end());
  std::vector<int> nonbasis(dict.basis().begin(), dict.basis().end());
  return Dictionary<T>(std::move(basis), std::move(nonbasis), std::move(cells), dict.eps());
}

#define DUALFEAS_INSTANTIATE(T)                                                  \
  template class Dictionary<T>;                                                  \
  template Dictionary<T> build_dictionary<T>(const LPInstance&, double);         \
  template Dictionary<T> pivot<T>(const Dictionary<T>&, int, int);               \
  template bool is_primal_feasible<T>(const Dictionary<T>&);                     \
  template bool is_dual_feasible<T>(const Dictionary<T>&);                       \
  template DictionaryStatus classify<T>(const Dictionary<T>&);                   \
  template std::vector<T> basic_solution<T>(const Dictionary<T>&, const LPInstance&); \
  template Dictionary<T> negative_transpose<T>(const Dictionary<T>&);

DUALFEAS_INSTANTIATE(double)
DUALFEAS_INSTANTIATE(Rational)

#undef DUALFEAS_INSTANTIATE

}  // namespace dualfeas
