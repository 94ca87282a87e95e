#include <gtest/gtest.h>

#include "support.hpp"

using namespace pfaffrep;
using namespace testsupport;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int bound, double density) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::bernoulli_distribution keep(density);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (keep(rng)) m(i, j) = dist(rng);
    }
  }
  return m;
}

IntMatrix columns(const IntMatrix& m, std::size_t from, std::size_t to) {
  IntMatrix out(m.rows(), to - from);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = from; j < to; ++j) out(i, j - from) = m(i, j);
  }
  return out;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      f(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// Invariant factors from determinantal divisors: s_k = D_k / D_{k-1},
// D_k = gcd of all k x k minors.
std::vector<BigInt> invariant_factors_by_minors(const IntMatrix& a) {
  std::vector<BigInt> out;
  BigInt previous = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    BigInt g = 0;
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), determinant(sub).get_mpz_t());
      });
    });
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

void expect_hermite_contract(const IntMatrix& a, const HermiteResult& h) {
  ASSERT_EQ(h.U.rows(), a.cols());
  ASSERT_EQ(abs(determinant(h.U)), 1);
  const IntMatrix au = a * h.U;
  EXPECT_EQ(columns(au, 0, h.rank), h.H);
  EXPECT_TRUE(columns(au, h.rank, a.cols()).is_zero());
  // Column echelon: pivot rows strictly increase, pivots positive, entries
  // above a pivot zero and entries left of it reduced.
  for (std::size_t k = 0; k < h.rank; ++k) {
    const std::size_t p = h.pivot_rows[k];
    EXPECT_GT(h.H(p, k), 0);
    if (k > 0) EXPECT_GT(p, h.pivot_rows[k - 1]);
    for (std::size_t i = 0; i < p; ++i) EXPECT_EQ(h.H(i, k), 0);
    for (std::size_t j = 0; j < k; ++j) {
      EXPECT_GE(h.H(p, j), 0);
      EXPECT_LT(h.H(p, j), h.H(p, k));
    }
  }
}

LinearSystem system_from(const IntMatrix& a, const IntMatrix& t) {
  LinearSystem sys;
  sys.A = a;
  sys.T = t;
  return sys;
}

}  // namespace

TEST(Hermite, Examples) {
  const HermiteResult id = hnf(IntMatrix::identity(4));
  EXPECT_EQ(id.H, IntMatrix::identity(4));
  EXPECT_EQ(id.U, IntMatrix::identity(4));
  EXPECT_EQ(id.rank, 4u);

  const HermiteResult zero = hnf(IntMatrix(3, 5));
  EXPECT_EQ(zero.rank, 0u);
  EXPECT_EQ(zero.H.cols(), 0u);

  const IntMatrix a = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  expect_hermite_contract(a, hnf(a));
}

TEST(Hermite, RandomMatricesUnimodularTransform) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 60; ++k) {
    const std::size_t rows = 1 + k % 12;
    const std::size_t cols = 1 + k;  // up to 60 columns
    const IntMatrix a = random_matrix(rows, cols, rng, 6, k % 2 ? 0.3 : 0.8);
    expect_hermite_contract(a, hnf(a));
  }
}

TEST(Hermite, WithoutTransformGivesSameH) {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 20; ++k) {
    const IntMatrix a = random_matrix(6, 9, rng, 5, 0.6);
    const HermiteResult with = hnf(a), without = hnf(a, false);
    EXPECT_EQ(with.H, without.H);
    EXPECT_EQ(with.rank, without.rank);
    EXPECT_EQ(without.U.rows(), 0u);
  }
}

TEST(Smith, Examples) {
  IntMatrix d(2, 2);
  d(0, 0) = 2;
  d(1, 1) = 3;
  EXPECT_EQ(snf(d).invariant_factors, (std::vector<BigInt>{1, 6}));
  EXPECT_EQ(invariant_factors_by_minors(d), (std::vector<BigInt>{1, 6}));
  EXPECT_EQ(snf(IntMatrix(3, 3)).rank, 0u);
  EXPECT_EQ(snf(from_rows({{2, 4}, {4, 8}})).invariant_factors, (std::vector<BigInt>{2}));
}

TEST(Smith, AgreesWithDeterminantalDivisors) {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 150; ++k) {
    const std::size_t rows = 1 + k % 4, cols = 1 + (k / 4) % 5;
    IntMatrix a = random_matrix(rows, cols, rng, 8, 0.7);
    if (k % 5 == 0) {
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a(i, j) *= 6;
      }
    }
    const SmithResult s = snf(a);
    ASSERT_EQ(s.invariant_factors, invariant_factors_by_minors(a));
    ASSERT_EQ(s.rank, s.invariant_factors.size());
    for (std::size_t i = 1; i < s.invariant_factors.size(); ++i) {
      ASSERT_EQ(s.invariant_factors[i] % s.invariant_factors[i - 1], 0);
    }
  }
}

TEST(Solve, RandomConsistentSystems) {
  std::mt19937_64 rng(44);
  for (int k = 0; k < 60; ++k) {
    const std::size_t m = 2 + k % 7, n = m + k % 5, thetas = 1 + k % 4;
    IntMatrix a = random_matrix(m, n, rng, 4, 0.6);
    // Right-hand sides in the image of A, so the system is solvable over Z.
    const IntMatrix t = a * random_matrix(n, thetas, rng, 5, 1.0);
    const LinearSystem sys = system_from(a, t);
    const ParametricSolution sol = solve_parametric(sys);
    ASSERT_TRUE(verify_solution(sys, sol));
    ASSERT_TRUE(sol.certificate.solvable_over_z);
    ASSERT_EQ(sol.rank, hnf(a, false).rank);
    ASSERT_EQ(sol.free_count(), n - sol.rank);
    // The kernel basis is saturated: N has trivial invariant factors.
    for (const auto& f : snf(sol.nullspace).invariant_factors) ASSERT_EQ(f, 1);
  }
}

TEST(Solve, InconsistentOverZ) {
  const LinearSystem sys = system_from(from_rows({{2, 0}, {0, 1}}), from_rows({{1}, {0}}));
  try {
    solve_parametric(sys);
    FAIL();
  } catch (const NotSolvableOverZ& e) {
    EXPECT_FALSE(e.certificate().solvable_over_z);
    ASSERT_TRUE(e.certificate().failure.has_value());
    EXPECT_EQ(e.certificate().failure->theta_column, 0u);
    ASSERT_FALSE(e.certificate().invariant_factors.empty());
    EXPECT_EQ(e.certificate().invariant_factors.back().first, 2);
  }
  // Inconsistent even over Q.
  EXPECT_THROW(solve_parametric(system_from(from_rows({{1}, {1}}), from_rows({{1}, {0}}))), NotSolvableOverZ);
}

TEST(Solve, VerifyDetectsCorruption) {
  const LinearSystem sys = extract_system(build_template(5));
  ParametricSolution sol = solve_parametric(sys);
  EXPECT_TRUE(verify_solution(sys, sol));
  ParametricSolution bad = sol;
  bad.particular(3, 5) += 1;
  EXPECT_FALSE(verify_solution(sys, bad));
  bad = sol;
  bad.nullspace(0, 0) += 1;
  EXPECT_FALSE(verify_solution(sys, bad));

  const LinearSystem empty = system_from(IntMatrix(0, 0), IntMatrix(0, 0));
  EXPECT_TRUE(verify_solution(empty, solve_parametric(empty)));
}

TEST(Solve, DegreeFiveShape) {
  const LinearSystem sys = extract_system(build_template(5));
  EXPECT_EQ(sys.monomials.size(), 18u);
  EXPECT_EQ(sys.A.cols(), 42u);
  EXPECT_EQ(sys.T.cols(), 21u);
  EXPECT_EQ(sys.equation_text(0), "b[1,2] - a[2,6] = Theta[4,1,0]");
  const ParametricSolution sol = solve_parametric(sys);
  EXPECT_EQ(sol.rank, 18u);
  EXPECT_EQ(sol.free_count(), 24u);
  EXPECT_EQ(sol.unknown_count(), 42u);
  EXPECT_TRUE(sol.certificate.solvable_over_z);
  EXPECT_EQ(sol, solve_parametric(sys));
}

TEST(Solve, EquationTextUsesBothThetaTerms) {
  const LinearSystem sys = extract_system(build_template(5));
  for (std::size_t r = 0; r < sys.monomials.size(); ++r) {
    if (sys.monomials[r] == Monomial3{1, 3, 1}) {
      EXPECT_EQ(sys.equation_text(r), "-a[1,3] - b[1,4] + c[2,4] = Theta[0,5,0] + Theta[1,3,1]");
    }
  }
}

// u = P theta + N t solves A u = T theta for random integer theta and t.
TEST(Solve, RandomSubstitutionsPerDegree) {
  std::mt19937_64 rng(45);
  for (int d = 5; d <= 12; ++d) {
    const LinearSystem sys = extract_system(build_template(d));
    const ParametricSolution sol = solve_parametric(sys);
    ASSERT_TRUE(sol.certificate.solvable_over_z) << d;
    ASSERT_EQ(sol.rank, sys.monomials.size()) << "full row rank expected at d=" << d;
    for (int k = 0; k < 100; ++k) {
      const IntMatrix theta = random_matrix(sys.thetas.size(), 1, rng, 50, 1.0);
      const IntMatrix t = random_matrix(sol.free_count(), 1, rng, 50, 1.0);
      const IntMatrix u = sol.particular * theta + sol.nullspace * t;
      ASSERT_EQ(sys.A * u, sys.T * theta) << d;
    }
  }
}

TEST(Extract, RejectsNonlinearTemplates) {
  PfaffianTemplate t = build_template(5);
  // A symbol in a fixed row breaks the structure the extraction relies on.
  t.matrix.set(1, 7, {SymbolicCoefficient::symbol(SymbolId::entry(Axis::A, 1, 7)), {}, {}});
  EXPECT_THROW(extract_system(t), Error);

  PfaffianTemplate corners = build_template(5);
  corners.matrix.set(1, 2, LinearForm<SymbolicCoefficient>::along_x({}));
  try {
    extract_system(corners);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PurePowerViolation);
  }
}
