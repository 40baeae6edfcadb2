#include <cmath>

#include <Eigen/SVD>
#include <gtest/gtest.h>

#include "lcpkit/objective.hpp"
#include "lcpkit/rng.hpp"
#include "lcpkit/schedule.hpp"
#include "lcpkit/solvers.hpp"

namespace lcpkit {
namespace {

TEST(Gamma, Values) {
  EXPECT_DOUBLE_EQ(gamma(1), 1.0);
  EXPECT_DOUBLE_EQ(gamma(2), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(gamma(9), 0.2);
  EXPECT_THROW(gamma(0), std::invalid_argument);
}

TEST(BigGamma, Values) {
  EXPECT_DOUBLE_EQ(big_gamma(1), 1.0);
  EXPECT_DOUBLE_EQ(big_gamma(2), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(big_gamma(10), 1.0 / 55.0);
  EXPECT_THROW(big_gamma(0), std::invalid_argument);
}

TEST(BigGamma, MatchesProductRecursion) {
  double product = 1.0;  // Gamma_1
  for (int k = 2; k <= 10000; ++k) {
    product *= 1.0 - gamma(k);
    EXPECT_NEAR(big_gamma(k), product, 1e-12 * product) << "k=" << k;
  }
}

TEST(BigGamma, StepRatioBound) {
  for (int k = 1; k <= 10000; ++k) {
    double ratio = gamma(k) * gamma(k) / big_gamma(k);
    EXPECT_LE(ratio, 2.0 + 1e-12) << "k=" << k;
  }
}

TEST(UnrollRecursion, Examples) {
  const double g1[] = {1.0};
  const double b1[] = {0.0};
  EXPECT_DOUBLE_EQ(unroll_recursion(5.0, g1, b1), 0.0);

  const double g2[] = {1.0, 2.0 / 3.0};
  const double b2[] = {1.0, 1.0};
  EXPECT_NEAR(unroll_recursion(0.0, g2, b2), 4.0 / 3.0, 1e-15);

  const double g3[] = {1.0, 2.0 / 3.0, 0.5};
  const double b3[] = {0.0, 0.0, 0.0};
  EXPECT_DOUBLE_EQ(unroll_recursion(1.0, g3, b3), 0.0);
}

TEST(UnrollRecursion, RejectsBadGamma) {
  const double bad_low[] = {0.0};
  const double bad_high[] = {1.5};
  const double b[] = {0.0};
  EXPECT_THROW(unroll_recursion(0.0, bad_low, b), std::invalid_argument);
  EXPECT_THROW(unroll_recursion(0.0, bad_high, b), std::invalid_argument);
  EXPECT_THROW(unroll_recursion(0.0, {}, {}), std::invalid_argument);
}

// Any sequence obeying Delta_k <= (1 - gamma_k) Delta_{k-1} + B_k must stay
// below the unrolled bound.
TEST(UnrollRecursion, DominatesSatisfyingSequences) {
  RngStream rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int len = 1 + static_cast<int>(rng.uniform() * 20);
    std::vector<double> gs(len), bs(len);
    double delta0 = rng.uniform() * 10.0;
    double delta = delta0;
    for (int i = 0; i < len; ++i) {
      gs[i] = 1e-3 + (1.0 - 1e-3) * rng.uniform();
      bs[i] = rng.uniform();
      double slack = rng.uniform() * 0.5;
      delta = (1.0 - gs[i]) * delta + bs[i] - slack;
    }
    double bound = unroll_recursion(delta0, gs, bs);
    EXPECT_LE(delta, bound + 1e-12);
  }
}

TEST(GoldenSection, FindsParabolaMinimum) {
  double x = golden_section([](double a) { return (a - 0.3) * (a - 0.3); },
                            0.0, 1.0);
  EXPECT_NEAR(x, 0.3, 1e-8);
}

TEST(GoldenSection, PrefersEndpointsOnMonotoneObjectives) {
  EXPECT_DOUBLE_EQ(golden_section([](double a) { return a; }, 0.0, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(golden_section([](double a) { return -a; }, 0.0, 1.0), 1.0);
}

TEST(Rng, DeterministicStreams) {
  RngStream a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.next_u64(), b.next_u64());
  }
  EXPECT_NE(RngStream(42).next_u64(), c.next_u64());
  EXPECT_NE(RngStream::derive(42, 1), RngStream::derive(42, 2));
}

TEST(Rng, UniformRange) {
  RngStream rng(5);
  for (int i = 0; i < 10000; ++i) {
    double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

class QuadraticObjectiveTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::vector<Eigen::Triplet<double>> t;
    RngStream rng(11);
    for (int r = 0; r < 6; ++r) {
      for (int c = 0; c < 4; ++c) {
        t.emplace_back(r, c, rng.uniform());
      }
    }
    op_ = std::make_shared<SparseLinearMap>(6, 4, t);
    Vector b(6);
    for (int i = 0; i < 6; ++i) b[i] = rng.uniform(-1.0, 1.0);
    q_ = std::make_unique<QuadraticObjective>(op_, b);
  }

  std::shared_ptr<SparseLinearMap> op_;
  std::unique_ptr<QuadraticObjective> q_;
};

TEST_F(QuadraticObjectiveTest, GradientMatchesFiniteDifferences) {
  RngStream rng(13);
  Vector x(4);
  for (int i = 0; i < 4; ++i) x[i] = rng.uniform(-1.0, 1.0);
  Vector g = q_->grad(x);
  const double h = 1e-6;
  for (int i = 0; i < 4; ++i) {
    Vector e = Vector::Zero(4);
    e[i] = h;
    double fd = (q_->value(x + e) - q_->value(x - e)) / (2.0 * h);
    EXPECT_NEAR(g[i], fd, 1e-6 * std::max(1.0, std::abs(fd)));
  }
}

TEST_F(QuadraticObjectiveTest, LipschitzMatchesDenseSpectralNorm) {
  Matrix dense = Matrix(op_->matrix());
  Eigen::JacobiSVD<Matrix> svd(dense);
  double sigma = svd.singularValues()[0];
  EXPECT_NEAR(q_->lipschitz(), 2.0 * sigma * sigma, 1e-6 * sigma * sigma);
}

TEST_F(QuadraticObjectiveTest, SmoothnessUpperBoundHolds) {
  RngStream rng(17);
  const double lip = q_->lipschitz();
  for (int trial = 0; trial < 100; ++trial) {
    Vector x(4), y(4);
    for (int i = 0; i < 4; ++i) {
      x[i] = rng.uniform(-1.0, 1.0);
      y[i] = rng.uniform(-1.0, 1.0);
    }
    double lhs = q_->value(y);
    double rhs = q_->value(x) + q_->grad(x).dot(y - x) +
                 0.5 * lip * (y - x).squaredNorm();
    EXPECT_LE(lhs, rhs + 1e-10);
  }
}

TEST_F(QuadraticObjectiveTest, LinesearchMatchesGoldenSection) {
  RngStream rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    Vector y(4), x(4);
    for (int i = 0; i < 4; ++i) {
      y[i] = rng.uniform(-1.0, 1.0);
      x[i] = rng.uniform(-1.0, 1.0);
    }
    double closed = q_->linesearch(y, x);
    double searched = golden_section(
        [&](double a) { return q_->value((1.0 - a) * y + a * x); }, 0.0, 1.0);
    EXPECT_NEAR(q_->value((1.0 - closed) * y + closed * x),
                q_->value((1.0 - searched) * y + searched * x), 1e-9);
  }
}

TEST_F(QuadraticObjectiveTest, LinesearchDegenerateDirection) {
  Vector y = Vector::Constant(4, 0.25);
  EXPECT_DOUBLE_EQ(q_->linesearch(y, y), 0.0);
}

TEST(WolfeGap, Examples) {
  // f(x) = ||x||^2 at the hypercube minimizer.
  SmoothObjective f;
  f.value = [](const Vector& x) { return x.squaredNorm(); };
  f.grad = [](const Vector& x) { return Vector(2.0 * x); };
  f.lipschitz = 2.0;
  FeasibleSet cube = FeasibleSet::hypercube(2);
  EXPECT_DOUBLE_EQ(wolfe_gap(f, cube, Vector::Zero(2)), 0.0);

  // Linear objective over the standard simplex.
  Vector c(2);
  c << 1.0, -1.0;
  SmoothObjective lin;
  lin.value = [c](const Vector& x) { return c.dot(x); };
  lin.grad = [c](const Vector&) { return c; };
  FeasibleSet simplex = FeasibleSet::standard_simplex(2);
  Vector y(2);
  y << 1.0, 0.0;
  EXPECT_DOUBLE_EQ(wolfe_gap(lin, simplex, y), 2.0);

  // ||x||^2 over the scaled simplex at a vertex.
  EXPECT_DOUBLE_EQ(wolfe_gap(f, simplex, y), 2.0);
}

TEST(WolfeGap, UpperBoundsSuboptimality) {
  SmoothObjective f;
  f.value = [](const Vector& x) { return x.squaredNorm(); };
  f.grad = [](const Vector& x) { return Vector(2.0 * x); };
  FeasibleSet simplex = FeasibleSet::standard_simplex(5);
  RngStream rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    Vector y = simplex.sample(rng);
    double gap = wolfe_gap(f, simplex, y);
    EXPECT_GE(gap, -1e-12);
    for (int inner = 0; inner < 20; ++inner) {
      Vector x = simplex.sample(rng);
      EXPECT_GE(gap + 1e-10, f.value(y) - f.value(x));
    }
  }
}

}  // namespace
}  // namespace lcpkit
