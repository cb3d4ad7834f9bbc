#pragma once

#include "dualfeas/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualfeas {

/// max c'x subject to Ax <= b, x >= 0, with exact coefficients.
///
/// A is stored row-major. Decision variables carry labels 1..n and the slack of
/// row i carries label n+i.
struct LPInstance {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Rational> c;
  std::vector<Rational> a;
  std::vector<Rational> b;

  LPInstance() = default;
  LPInstance(std::size_t rows, std::size_t cols);

  const Rational& coeff(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  Rational& coeff(std::size_t i, std::size_t j) { return a[i * n + j]; }

  /// Throws std::invalid_argument when sizes disagree or a dimension is zero.
  void validate() const;

  bool operator==(const LPInstance&) const = default;
};

class ZeroPivot : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownLabel : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Dense dictionary D(B) = [z, d0N; dB0, dBN].
///
/// Every row reads "value = d_0 - sum_j d_j x_j": row 0 is the objective and
/// row i (1-based) expresses basic variable basis()[i-1]. Column j (1-based)
/// belongs to nonbasic variable nonbasis()[j-1]. A pivot keeps positions: the
/// entering label takes the leaving label's row slot and vice versa.
template <class T>
class Dictionary {
 public:
  using Traits = ScalarTraits<T>;

  Dictionary() = default;

  /// cells holds (1+|basis|) x (1+|nonbasis|) entries row-major.
  Dictionary(std::vector<int> basis, std::vector<int> nonbasis, std::vector<T> cells,
             double eps = kDefaultEps);

  std::size_t num_rows() const { return basis_.size(); }
  std::size_t num_cols() const { return nonbasis_.size(); }
  std::size_t width() const { return nonbasis_.size() + 1; }

  const T& at(std::size_t row, std::size_t col) const { return cells_[row * width() + col]; }
  T& at(std::size_t row, std::size_t col) { return cells_[row * width() + col]; }

  const T& objective_value() const { return at(0, 0); }
  const T& objective_coeff(std::size_t col) const { return at(0, col); }
  const T& rhs(std::size_t row) const { return at(row, 0); }

  std::span<const int> basis() const { return basis_; }
  std::span<const int> nonbasis() const { return nonbasis_; }
  int basic_label(std::size_t row) const { return basis_[row - 1]; }
  int nonbasic_label(std::size_t col) const { return nonbasis_[col - 1]; }

  /// 1-based row of a basic label, if present.
  std::optional<std::size_t> row_of(int label) const;
  /// 1-based column of a nonbasic label, if present.
  std::optional<std::size_t> col_of(int label) const;
  std::size_t require_row(int label) const;
  std::size_t require_col(int label) const;

  double eps() const { return eps_; }

  /// Fresh label for an artificial variable: |B| + |N| + 1.
  int next_label() const { return static_cast<int>(basis_.size() + nonbasis_.size()) + 1; }

  bool negative(const T& x) const { return Traits::negative(x, eps_); }
  bool positive(const T& x) const { return Traits::positive(x, eps_); }
  bool is_zero(const T& x) const { return Traits::zero(x, eps_); }

  /// In-place exchange at 1-based (row, col). Throws ZeroPivot.
  void pivot_at(std::size_t row, std::size_t col);

  /// Appends a basic row. coeffs has one entry per nonbasic column.
  void append_row(int label, T rhs, std::span<const T> coeffs);
  void remove_row(std::size_t row);

  bool operator==(const Dictionary&) const = default;

 private:
  std::vector<int> basis_;
  std::vector<int> nonbasis_;
  std::vector<T> cells_;
  double eps_ = kDefaultEps;
};

/// Slack basis: N = {1..n}, B = {n+1..n+m}, D = [0, -c; b, A].
template <class T>
Dictionary<T> build_dictionary(const LPInstance& inst, double eps = kDefaultEps);

/// Pivot by labels; returns the exchanged dictionary.
template <class T>
Dictionary<T> pivot(const Dictionary<T>& dict, int leave, int enter);

struct DictionaryStatus {
  enum class Kind { OptimalFeasible, Inconsistent, Unbounded, PrimalFeasible, DualFeasible, None };

  Kind kind = Kind::None;
  /// Row label for Inconsistent, column label for Unbounded.
  std::optional<int> witness;
  bool primal_feasible = false;
  bool dual_feasible = false;
};

std::string_view to_string(DictionaryStatus::Kind kind);

/// Strongest applicable status, in the order of DictionaryStatus::Kind.
/// Witnesses are the smallest qualifying label.
template <class T>
DictionaryStatus classify(const Dictionary<T>& dict);

template <class T>
bool is_primal_feasible(const Dictionary<T>& dict);

template <class T>
bool is_dual_feasible(const Dictionary<T>& dict);

/// Values of the decision variables x_1..x_n: basic ones from the rhs column,
/// nonbasic ones zero.
template <class T>
std::vector<T> basic_solution(const Dictionary<T>& dict, const LPInstance& inst);

/// Dual dictionary: [-z, dB0'; d0N', -dBN'] with basis and nonbasis exchanged.
///
/// The dual's rhs column is the primal objective row, so dual feasibility of the
/// primal is primal feasibility of the result. Applying it twice is the identity.
template <class T>
Dictionary<T> negative_transpose(const Dictionary<T>& dict);

extern template class Dictionary<double>;
extern template class Dictionary<Rational>;

}  // namespace dualfeas
