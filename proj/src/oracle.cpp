#include "dualfeas/instances.hpp"

#include <optional>

namespace dualfeas {

std::string_view to_string(OracleResult::Kind kind) {
  switch (kind) {
    case OracleResult::Kind::Optimal: return "Optimal";
    case OracleResult::Kind::Infeasible: return "Infeasible";
    case OracleResult::Kind::Unbounded: return "Unbounded";
  }
  return "";
}

namespace {

// Column q of [A | I].
Rational column_entry(const LPInstance& inst, std::size_t row, std::size_t q) {
  if (q < inst.n) return inst.coeff(row, q);
  return Rational(q - inst.n == row ? 1 : 0);
}

Rational cost(const LPInstance& inst, std::size_t q) { return q < inst.n ? inst.c[q] : Rational(0); }

// Solves A_B [x | W] = [b | A] by Gauss-Jordan elimination. Result row i holds
// x_B(i) in column 0 and (A_B^{-1} a_q)_i in column 1 + q. nullopt if singular.
std::optional<std::vector<std::vector<Rational>>> eliminate(const LPInstance& inst,
                                                            const std::vector<std::size_t>& basis) {
  const std::size_t m = inst.m;
  const std::size_t total = inst.n + inst.m;
  std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m + 1 + total));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) mat[i][k] = column_entry(inst, i, basis[k]);
    mat[i][m] = inst.b[i];
    for (std::size_t q = 0; q < total; ++q) mat[i][m + 1 + q] = column_entry(inst, i, q);
  }
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t p = k;
    while (p < m && mat[p][k] == 0) ++p;
    if (p == m) return std::nullopt;
    std::swap(mat[p], mat[k]);
    const Rational piv = mat[k][k];
    for (auto& v : mat[k]) v /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == k || mat[r][k] == 0) continue;
      const Rational f = mat[r][k];
      for (std::size_t c = 0; c < mat[r].size(); ++c) mat[r][c] -= f * mat[k][c];
    }
  }
  std::vector<std::vector<Rational>> out(m, std::vector<Rational>(1 + total));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c <= total; ++c) out[i][c] = mat[i][m + c];
  }
  return out;
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace

OracleResult oracle_solve(const LPInstance& inst) {
  inst.validate();
  const std::size_t m = inst.m;
  const std::size_t total = inst.n + inst.m;
  if (binomial(total, m) > 1e6) throw TooLarge("too many bases to enumerate");

  OracleResult result;
  bool found = false;
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = i;

  while (true) {
    if (auto sol = eliminate(inst, basis)) {
      bool feasible = true;
      for (std::size_t i = 0; i < m && feasible; ++i) feasible = (*sol)[i][0] >= 0;
      if (feasible) {
        Rational value = 0;
        for (std::size_t i = 0; i < m; ++i) value += cost(inst, basis[i]) * (*sol)[i][0];

        std::vector<bool> in_basis(total, false);
        for (std::size_t q : basis) in_basis[q] = true;
        for (std::size_t q = 0; q < total; ++q) {
          if (in_basis[q]) continue;
          // Moving x_q up by t changes x_B by -t w; improving ray when all w <= 0.
          Rational reduced = cost(inst, q);
          bool ray = true;
          for (std::size_t i = 0; i < m; ++i) {
            const Rational& w = (*sol)[i][1 + q];
            reduced -= cost(inst, basis[i]) * w;
            if (w > 0) ray = false;
          }
          if (ray && reduced > 0) {
            result.kind = OracleResult::Kind::Unbounded;
            result.value = 0;
            result.point.clear();
            return result;
          }
        }

        if (!found || value > result.value) {
          found = true;
          result.kind = OracleResult::Kind::Optimal;
          result.value = value;
          result.point.assign(inst.n, Rational(0));
          for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < inst.n) result.point[basis[i]] = (*sol)[i][0];
          }
        }
      }
    }

    // Next m-combination of {0..total-1} in lexicographic order.
    std::size_t k = m;
    while (k > 0 && basis[k - 1] == total - m + k - 1) --k;
    if (k == 0) break;
    ++basis[k - 1];
    for (std::size_t i = k; i < m; ++i) basis[i] = basis[i - 1] + 1;
  }

  if (!found) result.kind = OracleResult::Kind::Infeasible;
  return result;
}

}  // namespace dualfeas
