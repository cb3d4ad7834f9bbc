#include "dualfeas/tableau.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace dualfeas {
namespace {

using testing::example_instance;
using Kind = DictionaryStatus::Kind;

Dictionary<Rational> make(std::vector<int> basis, std::vector<int> nonbasis,
                          std::vector<Rational> cells) {
  return Dictionary<Rational>(std::move(basis), std::move(nonbasis), std::move(cells));
}

TEST(BuildDictionary, ExampleHasSlackBasis) {
  const auto d = build_dictionary<Rational>(example_instance());
  EXPECT_EQ(std::vector<int>(d.basis().begin(), d.basis().end()), (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(std::vector<int>(d.nonbasis().begin(), d.nonbasis().end()), (std::vector<int>{1, 2}));
  const std::vector<std::vector<int>> expected{{0, -3, -5}, {4, 1, 0}, {12, 0, 2}, {18, 3, 2}};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(d.at(r, c), expected[r][c]) << r << "," << c;
  }
}

TEST(BuildDictionary, ZeroInstanceIsOptimalFeasible) {
  LPInstance inst(1, 1);
  const auto d = build_dictionary<Rational>(inst);
  EXPECT_EQ(d.at(0, 0), 0);
  EXPECT_EQ(d.at(0, 1), 0);
  EXPECT_EQ(d.at(1, 0), 0);
  EXPECT_EQ(d.at(1, 1), 0);
  const auto status = classify(d);
  EXPECT_EQ(status.kind, Kind::OptimalFeasible);
  EXPECT_TRUE(status.primal_feasible);
  EXPECT_TRUE(status.dual_feasible);
}

TEST(BuildDictionary, NegativeCostIsDualFeasible) {
  LPInstance inst(1, 1);
  inst.c = {-1};
  inst.a = {1};
  inst.b = {5};
  const auto d = build_dictionary<Rational>(inst);
  EXPECT_EQ(d.at(0, 1), 1);
  EXPECT_TRUE(is_dual_feasible(d));
}

TEST(BuildDictionary, RejectsMalformedInstance) {
  LPInstance inst(2, 2);
  inst.b.pop_back();
  EXPECT_THROW(build_dictionary<double>(inst), std::invalid_argument);
}

TEST(Dictionary, RejectsDuplicateLabels) {
  EXPECT_THROW(make({1}, {1}, {0, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(make({1}, {2}, {0, 0, 0}), std::invalid_argument);
}

TEST(Pivot, ExampleIterationOneMainPivot) {
  // Dictionary after the SIE exchange, before pivoting on (4, 6).
  auto d = make({3, 4, 5, 2}, {1, 6},
                {0, 0, -1,
                 4, 1, 0,
                 12, Rational(-6, 5), Rational(2, 5),
                 18, Rational(9, 5), Rational(2, 5),
                 0, Rational(3, 5), Rational(-1, 5)});
  const auto out = pivot(d, 4, 6);
  EXPECT_EQ(out.basic_label(2), 6);
  EXPECT_EQ(out.nonbasic_label(2), 4);
  EXPECT_EQ(out.objective_value(), 30);
  EXPECT_EQ(out.at(0, 1), -3);
  EXPECT_EQ(out.at(0, 2), Rational(5, 2));
  const auto row = [&](int label, Rational rhs, Rational a, Rational b) {
    const auto r = out.require_row(label);
    EXPECT_EQ(out.at(r, 0), rhs) << label;
    EXPECT_EQ(out.at(r, 1), a) << label;
    EXPECT_EQ(out.at(r, 2), b) << label;
  };
  row(3, 4, 1, 0);
  row(6, 30, -3, Rational(5, 2));
  row(5, 6, 3, -1);
  row(2, 6, 0, Rational(1, 2));
}

TEST(Pivot, ExampleIterationTwo) {
  auto d = make({3, 5, 2}, {1, 4},
                {30, -3, Rational(5, 2),
                 4, 1, 0,
                 6, 3, -1,
                 6, 0, Rational(1, 2)});
  const auto out = pivot(d, 3, 1);
  EXPECT_EQ(out.objective_value(), 42);
  EXPECT_EQ(out.at(0, 1), 3);
  EXPECT_EQ(out.at(0, 2), Rational(5, 2));
  EXPECT_EQ(out.rhs(out.require_row(5)), -6);
  EXPECT_EQ(out.rhs(out.require_row(1)), 4);
  EXPECT_EQ(out.rhs(out.require_row(2)), 6);
}

TEST(Pivot, ZeroPivotThrows) {
  const auto d = build_dictionary<Rational>(example_instance());
  EXPECT_THROW(pivot(d, 3, 2), ZeroPivot);
  auto f = build_dictionary<double>(example_instance());
  f.at(1, 2) = 1e-9;
  EXPECT_THROW(f.pivot_at(1, 2), ZeroPivot);
}

TEST(Pivot, UnknownLabelThrows) {
  const auto d = build_dictionary<Rational>(example_instance());
  EXPECT_THROW(pivot(d, 1, 2), UnknownLabel);
  EXPECT_THROW(pivot(d, 3, 9), UnknownLabel);
}

TEST(Pivot, InvolutionExactOnRandomWalks) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto walk = testing::random_walk(rng, 5, 4);
    const auto d = testing::replay<Rational>(walk);
    for (std::size_t i = 1; i <= d.num_rows(); ++i) {
      for (std::size_t j = 1; j <= d.num_cols(); ++j) {
        if (d.at(i, j) == 0) continue;
        const int leave = d.basic_label(i);
        const int enter = d.nonbasic_label(j);
        EXPECT_EQ(pivot(pivot(d, leave, enter), enter, leave), d);
      }
    }
  }
}

TEST(Classify, ExampleFinalDictionaryIsDualFeasibleOnly) {
  auto d = make({1, 5, 2}, {3, 4},
                {42, 3, Rational(5, 2),
                 4, 1, 0,
                 -6, -3, -1,
                 6, 0, Rational(1, 2)});
  const auto status = classify(d);
  EXPECT_EQ(status.kind, Kind::DualFeasible);
  EXPECT_TRUE(status.dual_feasible);
  EXPECT_FALSE(status.primal_feasible);
}

TEST(Classify, UnboundedColumnWitness) {
  auto d = make({2, 3}, {1}, {0, -1, 5, 0, 7, -2});
  const auto status = classify(d);
  EXPECT_EQ(status.kind, Kind::Unbounded);
  ASSERT_TRUE(status.witness);
  EXPECT_EQ(*status.witness, 1);
}

TEST(Classify, InconsistentRowWitnessIsSmallestLabel) {
  auto d = make({7, 4}, {1, 2}, {0, 1, 1, -1, 0, 3, -2, 1, 0});
  const auto status = classify(d);
  EXPECT_EQ(status.kind, Kind::Inconsistent);
  EXPECT_EQ(*status.witness, 4);
}

// Independent restatement of the four sign-pattern definitions.
struct BruteStatus {
  bool primal = true;
  bool dual = true;
  bool inconsistent = false;
  bool unbounded = false;
};

BruteStatus brute_classify(const Dictionary<Rational>& d) {
  BruteStatus s;
  const std::size_t m = d.num_rows();
  const std::size_t n = d.num_cols();
  for (std::size_t i = 1; i <= m; ++i) s.primal = s.primal && d.at(i, 0) >= 0;
  for (std::size_t j = 1; j <= n; ++j) s.dual = s.dual && d.at(0, j) >= 0;
  for (std::size_t i = 1; i <= m; ++i) {
    bool all_nonneg = true;
    for (std::size_t j = 1; j <= n; ++j) all_nonneg = all_nonneg && d.at(i, j) >= 0;
    s.inconsistent = s.inconsistent || (d.at(i, 0) < 0 && all_nonneg);
  }
  for (std::size_t j = 1; j <= n; ++j) {
    bool all_nonpos = true;
    for (std::size_t i = 1; i <= m; ++i) all_nonpos = all_nonpos && d.at(i, j) <= 0;
    s.unbounded = s.unbounded || (d.at(0, j) < 0 && all_nonpos);
  }
  return s;
}

TEST(Classify, AgreesWithBruteForceOnRandomTableaus) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 2000; ++trial) {
    const int m = dim(rng);
    const int n = dim(rng);
    std::vector<int> basis;
    std::vector<int> nonbasis;
    for (int j = 1; j <= n; ++j) nonbasis.push_back(j);
    for (int i = 1; i <= m; ++i) basis.push_back(n + i);
    std::vector<Rational> cells;
    for (int k = 0; k < (m + 1) * (n + 1); ++k) cells.emplace_back(entry(rng));
    const auto d = make(basis, nonbasis, cells);
    const auto brute = brute_classify(d);
    const auto status = classify(d);
    EXPECT_EQ(status.primal_feasible, brute.primal);
    EXPECT_EQ(status.dual_feasible, brute.dual);
    Kind expected = Kind::None;
    if (brute.primal && brute.dual) {
      expected = Kind::OptimalFeasible;
    } else if (brute.inconsistent) {
      expected = Kind::Inconsistent;
    } else if (brute.unbounded) {
      expected = Kind::Unbounded;
    } else if (brute.primal) {
      expected = Kind::PrimalFeasible;
    } else if (brute.dual) {
      expected = Kind::DualFeasible;
    }
    EXPECT_EQ(status.kind, expected);
  }
}

TEST(BasicSolution, ExampleInitialAndSuperOptimal) {
  const auto inst = example_instance();
  const auto d0 = build_dictionary<Rational>(inst);
  EXPECT_EQ(basic_solution(d0, inst), (std::vector<Rational>{0, 0}));

  auto d2 = make({1, 5, 2}, {3, 4},
                 {42, 3, Rational(5, 2),
                  4, 1, 0,
                  -6, -3, -1,
                  6, 0, Rational(1, 2)});
  EXPECT_EQ(basic_solution(d2, inst), (std::vector<Rational>{4, 6}));
}

TEST(BasicSolution, ObjectiveAndEqualitySystemHoldAfterPivots) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto walk = testing::random_walk(rng, 5, 5);
    const auto& inst = walk.inst;
    const auto d = testing::replay<Rational>(walk);
    const auto x = testing::full_solution(d, inst);

    Rational objective = 0;
    for (std::size_t j = 0; j < inst.n; ++j) objective += inst.c[j] * x[j];
    EXPECT_EQ(objective, d.objective_value());

    for (std::size_t i = 0; i < inst.m; ++i) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < inst.n; ++j) lhs += inst.coeff(i, j) * x[j];
      EXPECT_EQ(lhs + x[inst.n + i], inst.b[i]);
    }
  }
}

TEST(NegativeTranspose, InvolutionAndSignPattern) {
  const auto d = build_dictionary<Rational>(example_instance());
  const auto t = negative_transpose(d);
  EXPECT_EQ(std::vector<int>(t.basis().begin(), t.basis().end()), (std::vector<int>{1, 2}));
  EXPECT_EQ(t.rhs(1), -3);
  EXPECT_EQ(t.rhs(2), -5);
  EXPECT_EQ(t.at(0, 1), 4);
  EXPECT_EQ(t.at(1, 1), -1);
  EXPECT_EQ(negative_transpose(t), d);
  EXPECT_FALSE(is_primal_feasible(t));
  EXPECT_TRUE(is_dual_feasible(t));
}

TEST(NegativeTranspose, SwapsFeasibilityOnRandomDictionaries) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto walk = testing::random_walk(rng, 5, 3);
    const auto d = testing::replay<Rational>(walk);
    const auto t = negative_transpose(d);
    EXPECT_EQ(negative_transpose(t), d);
    EXPECT_EQ(is_dual_feasible(d), is_primal_feasible(t));
    EXPECT_EQ(is_primal_feasible(d), is_dual_feasible(t));
    if (classify(d).kind == Kind::OptimalFeasible) {
      EXPECT_EQ(classify(t).kind, Kind::OptimalFeasible);
    }
  }
}

TEST(NegativeTranspose, CommutesWithPivoting) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto walk = testing::random_walk(rng, 4, 2);
    const auto d = testing::replay<Rational>(walk);
    for (std::size_t i = 1; i <= d.num_rows(); ++i) {
      for (std::size_t j = 1; j <= d.num_cols(); ++j) {
        if (d.at(i, j) == 0) continue;
        const int leave = d.basic_label(i);
        const int enter = d.nonbasic_label(j);
        EXPECT_EQ(negative_transpose(pivot(d, leave, enter)),
                  pivot(negative_transpose(d), enter, leave));
      }
    }
  }
}

TEST(FloatMode, InvolutionWithinTolerance) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const auto walk = testing::random_walk(rng, 5, 4);
    const auto d = testing::replay<double>(walk);
    for (std::size_t i = 1; i <= d.num_rows(); ++i) {
      for (std::size_t j = 1; j <= d.num_cols(); ++j) {
        if (std::fabs(d.at(i, j)) <= 1e-3) continue;
        const int leave = d.basic_label(i);
        const int enter = d.nonbasic_label(j);
        const auto back = pivot(pivot(d, leave, enter), enter, leave);
        for (std::size_t r = 0; r <= d.num_rows(); ++r) {
          for (std::size_t c = 0; c <= d.num_cols(); ++c) {
            EXPECT_NEAR(back.at(r, c), d.at(r, c), 1e-6);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace dualfeas
