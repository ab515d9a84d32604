#include "partlim/chebyshev.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace {

using partlim::ChebyshevModel;

TEST(Chebyshev, ReproducesSmoothFunctions) {
  const auto m = ChebyshevModel::fit([](double x) { return std::exp(x) * std::cos(2.0 * x); },
                                     -0.5, 1.5, 40);
  for (int i = 0; i <= 100; ++i) {
    const double x = -0.5 + 2.0 * i / 100.0;
    EXPECT_NEAR(m(x), std::exp(x) * std::cos(2.0 * x), 1e-13) << "x=" << x;
  }
}

TEST(Chebyshev, ExactOnLowDegreePolynomials) {
  const auto m = ChebyshevModel::fit([](double x) { return 3.0 * x * x - x + 0.25; }, 1.0, 2.0, 8);
  for (double x : {1.0, 1.3, 1.77, 2.0})
    EXPECT_NEAR(m(x), 3.0 * x * x - x + 0.25, 1e-13);
}

TEST(Chebyshev, AntiderivativeMatchesClosedForms) {
  // The production use-case: integral of (1-t)/t over suffixes of [1/2, 1].
  const auto m = ChebyshevModel::fit([](double t) { return (1.0 - t) / t; }, 0.5, 1.0, 64);
  const auto exact = [](double y) { return std::log(1.0 / y) - (1.0 - y); };  // integral over [y, 1]
  for (double y : {0.5, 0.6, 0.75, 0.9, 1.0})
    EXPECT_NEAR(m.integral_to_upper(y), exact(y), 1e-14) << "y=" << y;
  EXPECT_NEAR(m.integral_full(), std::log(2.0) - 0.5, 1e-14);
}

TEST(Chebyshev, AntiderivativeOfOscillatorMatches) {
  const auto m = ChebyshevModel::fit([](double t) { return std::sin(5.0 * t); }, 0.0, 2.0, 48);
  const auto exact = [](double y) { return (std::cos(5.0 * y) - std::cos(10.0)) / 5.0; };
  for (double y : {0.0, 0.4, 1.1, 1.9}) EXPECT_NEAR(m.integral_to_upper(y), exact(y), 1e-12);
}

TEST(Chebyshev, ValidatesArguments) {
  EXPECT_THROW(ChebyshevModel::fit([](double) { return 0.0; }, 1.0, 1.0, 8),
               std::invalid_argument);
  EXPECT_THROW(ChebyshevModel::fit([](double) { return 0.0; }, 0.0, 1.0, 0),
               std::invalid_argument);
}

}  // namespace
