#include "partlim/limit_function.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "partlim/quadrature.hpp"

namespace {

using partlim::eval_F;
using partlim::eval_F_ode;
using partlim::f1;
using partlim::f2;
using partlim::interval_index;

TEST(IntervalIndex, BreakpointsBelongToTheirRightEndpointInterval) {
  EXPECT_EQ(interval_index(1.0), 1);
  EXPECT_EQ(interval_index(0.75), 1);
  EXPECT_EQ(interval_index(0.51), 1);
  EXPECT_EQ(interval_index(0.5), 2);
  EXPECT_EQ(interval_index(0.4), 2);
  EXPECT_EQ(interval_index(1.0 / 3.0), 3);
  EXPECT_EQ(interval_index(0.3), 3);
  EXPECT_EQ(interval_index(0.25), 4);
  EXPECT_EQ(interval_index(0.2), 5);
  EXPECT_EQ(interval_index(0.15), 6);
  EXPECT_EQ(interval_index(1.0 / 21.0), 21);
}

TEST(IntervalIndex, RefusesOutsideUnitInterval) {
  EXPECT_THROW(interval_index(0.0), std::invalid_argument);
  EXPECT_THROW(interval_index(-0.3), std::invalid_argument);
  EXPECT_THROW(interval_index(1.2), std::invalid_argument);
  EXPECT_THROW(interval_index(std::nan("")), std::invalid_argument);
}

TEST(ClosedForms, FrozenValuesAndBreakpointBehavior) {
  EXPECT_DOUBLE_EQ(f1(1.0), 0.0);
  EXPECT_DOUBLE_EQ(f1(0.5), 1.0);
  EXPECT_NEAR(f1(0.75), 1.0 / 3.0, 1e-15);
  // Continuity of the two closed forms at the shared breakpoint.
  EXPECT_NEAR(f2(0.5), 1.0, 1e-15);
  // Independent arithmetic for the same point: f2(0.4) = 2 - 1.5 ln 1.5.
  EXPECT_NEAR(f2(0.4), 2.0 - 1.5 * std::log(1.5), 1e-14);
  EXPECT_NEAR(f2(1.0 / 3.0), 3.0 - 2.0 * std::log(2.0), 1e-14);
}

TEST(ClosedForms, DomainsAreClosedAtBreakpointsAndRefuseBeyond) {
  EXPECT_NO_THROW(f1(0.5));
  EXPECT_NO_THROW(f1(1.0));
  EXPECT_THROW(f1(0.49), std::invalid_argument);
  EXPECT_THROW(f1(1.01), std::invalid_argument);
  EXPECT_NO_THROW(f2(1.0 / 3.0));
  EXPECT_NO_THROW(f2(0.5));
  EXPECT_THROW(f2(0.32), std::invalid_argument);
  EXPECT_THROW(f2(0.51), std::invalid_argument);
}

class PiecewiseFixture : public ::testing::Test {
 protected:
  static const partlim::PiecewiseLimit& pw() {
    static const partlim::PiecewiseLimit p = partlim::build_piecewise(10);
    return p;
  }
};

TEST_F(PiecewiseFixture, IntervalIntegralsMatchIndependentOracles) {
  // I_1 analytically: integral of (1-x)/x over [1/2, 1] = ln 2 - 1/2.
  EXPECT_NEAR(pw().interval_integrals.at(0), std::log(2.0) - 0.5, 1e-12);

  // I_2 against a fixed-grid composite Simpson oracle at 10^6 panels.
  const double lo = 1.0 / 3.0, hi = 0.5;
  const int panels = 1000000;
  const double h = (hi - lo) / panels;
  double sum = f2(lo) + f2(hi);
  for (int i = 1; i < panels; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f2(lo + i * h);
  const double oracle = sum * h / 3.0;
  EXPECT_NEAR(pw().interval_integrals.at(1), oracle, 1e-11);
}

TEST_F(PiecewiseFixture, QuadratureMatchesClosedFormsOnFirstTwoIntervals) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double x1 = 0.5 + 0.5 * (i + 1) / 100.0;
    worst = std::max(worst, std::abs(eval_F(pw(), x1) - f1(x1)));
    const double x2 = 1.0 / 3.0 + (0.5 - 1.0 / 3.0) * (i + 1) / 100.0;
    worst = std::max(worst, std::abs(eval_F(pw(), x2) - f2(x2)));
  }
  EXPECT_LT(worst, 1e-8);
}

TEST_F(PiecewiseFixture, FrozenDeepValues) {
  EXPECT_NEAR(eval_F(pw(), 0.4), 2.0 - 1.5 * std::log(1.5), 1e-10);
  EXPECT_NEAR(eval_F(pw(), 1.0 / 3.0), 3.0 - 2.0 * std::log(2.0), 1e-10);
  // Deeper intervals have no elementary closed form; values frozen from
  // two independent implementations of the recurrence.
  EXPECT_NEAR(eval_F(pw(), 0.3), 1.6922832515930122, 1e-9);
  EXPECT_NEAR(eval_F(pw(), 0.15), 1.781054812140507, 1e-9);
}

TEST_F(PiecewiseFixture, ContinuousAcrossBreakpoints) {
  for (int r = 2; r <= 7; ++r) {
    const double bp = 1.0 / r;
    const double from_deeper = eval_F(pw(), bp - 1e-9);     // interval r side
    const double from_shallower = eval_F(pw(), bp + 1e-9);  // interval r-1 side
    EXPECT_NEAR(from_deeper, from_shallower, 1e-5) << "r=" << r;
    // And the breakpoint itself agrees with its left-side evaluation.
    EXPECT_NEAR(eval_F(pw(), bp), from_deeper, 1e-6) << "r=" << r;
  }
}

TEST_F(PiecewiseFixture, PureRecursionCrossCheck) {
  // Independent evaluation with no cached interpolants: closed form f2
  // inside adaptive quadrature for interval 3, and that evaluator inside
  // another adaptive quadrature for interval 4.
  const partlim::QuadratureConfig q;
  const double i1 = partlim::integrate([](double t) { return f1(t); }, 0.5, 1.0, q);
  const auto f3 = [&](double x) {
    const double y = std::clamp(x / (1.0 - x), 1.0 / 3.0, 0.5);
    const double inner = partlim::integrate([](double t) { return f2(t); }, y, 0.5, q);
    return (1.0 - x) / x * (1.0 - (i1 + inner));
  };
  const double i2 = partlim::integrate([](double t) { return f2(t); }, 1.0 / 3.0, 0.5, q);
  const auto f4 = [&](double x) {
    const double y = std::clamp(x / (1.0 - x), 0.25, 1.0 / 3.0);
    const double inner = partlim::integrate(f3, y, 1.0 / 3.0, q);
    return (1.0 - x) / x * (1.0 - (i1 + i2 + inner));
  };
  for (double x : {0.26, 0.29, 0.32}) EXPECT_NEAR(eval_F(pw(), x), f3(x), 1e-9) << "x=" << x;
  for (double x : {0.21, 0.23, 0.24}) EXPECT_NEAR(eval_F(pw(), x), f4(x), 1e-9) << "x=" << x;
}

TEST_F(PiecewiseFixture, OdeEvaluatorAgreesWithQuadrature) {
  double worst = 0.0;
  for (int i = 1; i <= 60; ++i) {
    const double x = 1.0 / 6.0 + (0.5 - 1.0 / 6.0) * i / 60.0;
    worst = std::max(worst, std::abs(eval_F(pw(), x) - eval_F_ode(pw(), x)));
  }
  EXPECT_LT(worst, 1e-6);
}

TEST_F(PiecewiseFixture, OdeSeedsContinuouslyAtBreakpoints) {
  for (int r : {2, 3, 5}) {
    const double bp = 1.0 / r;
    EXPECT_NEAR(eval_F_ode(pw(), bp), eval_F(pw(), bp), 1e-9) << "r=" << r;
  }
}

TEST_F(PiecewiseFixture, ValuesArePositiveAndBoundedOnBuiltRange) {
  // F stays within (0, e^gamma + eps) over the built range; the upper
  // plateau observed numerically is ~1.781.
  for (int i = 1; i < 200; ++i) {
    const double x = 1.0 / 11.0 + (1.0 - 1.0 / 11.0) * i / 200.0;
    const double v = eval_F(pw(), x);
    EXPECT_GT(v, 0.0) << "x=" << x;
    EXPECT_LT(v, 1.8) << "x=" << x;
  }
}

TEST_F(PiecewiseFixture, RefusalsOutsideBuiltRange) {
  EXPECT_THROW(eval_F(pw(), 0.05), partlim::computation_error);  // interval 20 > built 10
  EXPECT_THROW(eval_F(pw(), 0.0), std::invalid_argument);
  EXPECT_THROW(eval_F(pw(), 1.5), std::invalid_argument);
  EXPECT_THROW(eval_F_ode(pw(), 0.05), partlim::computation_error);
  EXPECT_THROW(partlim::build_piecewise(0), std::invalid_argument);
}

TEST(PiecewiseLimit, DeepBuildApproachesTheObservedPlateau) {
  const auto deep = partlim::build_piecewise(21);
  EXPECT_NEAR(eval_F(deep, 1.0 / 21.0), 1.7810724179901982, 1e-9);
}

}  // namespace
