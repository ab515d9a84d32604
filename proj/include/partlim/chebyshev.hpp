#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace partlim {

// Chebyshev interpolant of a smooth function on [a, b], fitted at the
// N+1 Chebyshev-Lobatto points.  Stores the coefficients of the plain
// expansion f(x) ~ sum_k c_k T_k(t), t = (2x - a - b)/(b - a), evaluated
// by Clenshaw recurrence.  The exact antiderivative of the expansion is
// available in closed form from the coefficient recurrence
// A_k = (c_{k-1} - c_{k+1}) / (2k), which is what makes cached models
// cheap to integrate against.
class ChebyshevModel {
 public:
  ChebyshevModel() = default;

  template <typename F>
  static ChebyshevModel fit(F&& f, double a, double b, int degree) {
    if (!(a < b)) throw std::invalid_argument("ChebyshevModel::fit: need a < b");
    if (degree < 1) throw std::invalid_argument("ChebyshevModel::fit: degree must be >= 1");
    const int n = degree;
    std::vector<double> vals(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
      const double t = std::cos(std::numbers::pi * j / n);
      vals[static_cast<std::size_t>(j)] = f(0.5 * (a + b) + 0.5 * (b - a) * t);
    }
    ChebyshevModel m;
    m.a_ = a;
    m.b_ = b;
    m.coef_.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
      double s = 0.5 * (vals[0] + (k % 2 == 0 ? vals[static_cast<std::size_t>(n)]
                                              : -vals[static_cast<std::size_t>(n)]));
      for (int j = 1; j < n; ++j)
        s += vals[static_cast<std::size_t>(j)] * std::cos(std::numbers::pi * j * k / n);
      double c = 2.0 * s / n;
      if (k == 0 || k == n) c *= 0.5;
      m.coef_[static_cast<std::size_t>(k)] = c;
    }
    return m;
  }

  double lower() const { return a_; }
  double upper() const { return b_; }
  int degree() const { return static_cast<int>(coef_.size()) - 1; }

  double operator()(double x) const {
    const double t = (2.0 * x - a_ - b_) / (b_ - a_);
    return clenshaw(coef_, t);
  }

  // Integral of the model over [x, b].
  double integral_to_upper(double x) const {
    const auto anti = antiderivative_coef();
    const double t = (2.0 * x - a_ - b_) / (b_ - a_);
    return 0.5 * (b_ - a_) * (clenshaw(anti, 1.0) - clenshaw(anti, t));
  }

  // Integral of the model over the whole interval [a, b].
  double integral_full() const { return integral_to_upper(a_); }

 private:
  static double clenshaw(const std::vector<double>& c, double t) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) {
      const double tmp = 2.0 * t * b1 - b2 + c[i];
      b2 = b1;
      b1 = tmp;
    }
    return t * b1 - b2 + c[0];
  }

  std::vector<double> antiderivative_coef() const {
    const std::size_t n = coef_.size();
    std::vector<double> anti(n + 1, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
      // The k = 1 term doubles c_0: integral of T_0 is T_1 itself, not
      // T_1 / 2 (plain-c_0 storage, no halved-constant convention).
      const double hi = (k == 1) ? 2.0 * coef_[0] : coef_[k - 1];
      const double lo = (k + 1 < n) ? coef_[k + 1] : 0.0;
      anti[k] = (hi - lo) / (2.0 * static_cast<double>(k));
    }
    return anti;
  }

  double a_ = 0.0;
  double b_ = 1.0;
  std::vector<double> coef_;
};

}  // namespace partlim
