#pragma once

// Shared fixtures for the unit and acceptance tests.

#include "dualfeas/instances.hpp"
#include "dualfeas/tableau.hpp"

#include <random>
#include <vector>

namespace dualfeas::testing {

/// max 3x1 + 5x2 s.t. x1 <= 4, 2x2 <= 12, 3x1 + 2x2 <= 18.
inline LPInstance example_instance() {
  LPInstance inst(3, 2);
  inst.c = {3, 5};
  inst.a = {1, 0, 0, 2, 3, 2};
  inst.b = {4, 12, 18};
  return inst;
}

inline constexpr const char* kExampleText =
    "# worked example\n"
    "lp 3 2\n"
    "3 5\n"
    "1 0 4\n"
    "0 2 12\n"
    "3 2 18\n";

/// Values of every original variable 1..n+m at the basic solution of `dict`.
template <class T>
std::vector<T> full_solution(const Dictionary<T>& dict, const LPInstance& inst) {
  std::vector<T> x(inst.n + inst.m, T(0));
  for (std::size_t i = 1; i <= dict.num_rows(); ++i) {
    const int label = dict.basic_label(i);
    if (label >= 1 && static_cast<std::size_t>(label) <= inst.n + inst.m) {
      x[static_cast<std::size_t>(label) - 1] = dict.rhs(i);
    }
  }
  return x;
}

template <class T>
T to_scalar(const Rational& q) {
  return ScalarTraits<T>::from_rational(q);
}

/// Random integer instance of the given shape from a test-local stream.
inline LPInstance random_small_instance(std::mt19937_64& rng, std::size_t m, std::size_t n,
                                        int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> draw(lo, hi);
  LPInstance inst(m, n);
  for (auto& v : inst.c) v = draw(rng);
  for (auto& v : inst.a) v = draw(rng);
  for (auto& v : inst.b) v = draw(rng);
  return inst;
}

/// Pivot sequence over random nonzero positions, as (leave, enter) labels.
struct Walk {
  LPInstance inst;
  std::vector<std::pair<int, int>> pivots;
};

/// Random instance plus up to `steps` random exchanges on nonzero entries,
/// chosen in exact arithmetic so both modes can replay them.
inline Walk random_walk(std::mt19937_64& rng, std::size_t max_dim, std::size_t steps) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  Walk walk{random_small_instance(rng, dim(rng), dim(rng)), {}};
  auto dict = build_dictionary<Rational>(walk.inst);
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 1; i <= dict.num_rows(); ++i) {
      for (std::size_t j = 1; j <= dict.num_cols(); ++j) {
        if (dict.at(i, j) != 0) cells.emplace_back(i, j);
      }
    }
    if (cells.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
    const auto [i, j] = cells[pick(rng)];
    walk.pivots.emplace_back(dict.basic_label(i), dict.nonbasic_label(j));
    dict.pivot_at(i, j);
  }
  return walk;
}

template <class T>
Dictionary<T> replay(const Walk& walk, double eps = kDefaultEps) {
  auto dict = build_dictionary<T>(walk.inst, eps);
  for (auto [leave, enter] : walk.pivots) dict = pivot(dict, leave, enter);
  return dict;
}

}  // namespace dualfeas::testing
