#include "mmdg/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mmdg {

LegendreValue legendre(int n, double x) {
  if (n == 0) return {1.0, 0.0};
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  // Derivative from the three-term identity; at x = +-1 use the closed form.
  double dp;
  if (std::abs(1.0 - x * x) < 1e-300) {
    dp = 0.5 * n * (n + 1.0) * (x > 0 ? 1.0 : (n % 2 == 0 ? -1.0 : 1.0));
  } else {
    dp = n * (x * p1 - p0) / (x * x - 1.0);
  }
  return {p1, dp};
}

GLRule gl_rule(int n) {
  if (n < 1) {
    throw std::invalid_argument("gl_rule: order must be >= 1, got " +
                                std::to_string(n));
  }
  GLRule rule;
  rule.order = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess for the i-th largest root.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) break;
    }
    const double dp = legendre(n, x).dp;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

LagrangeBasis::LagrangeBasis(int degree) : degree_(degree) {
  if (degree < 0) {
    throw std::invalid_argument("LagrangeBasis: negative degree");
  }
  const int np = size();
  rule_ = gl_rule(np);
  const auto& xs = rule_.nodes;

  barycentric_.assign(np, 1.0);
  for (int q = 0; q < np; ++q)
    for (int r = 0; r < np; ++r)
      if (r != q) barycentric_[q] /= (xs[q] - xs[r]);

  diff_.resize(np * np);
  diff2_.resize(np * np);
  for (int r = 0; r < np; ++r)
    for (int q = 0; q < np; ++q) {
      diff_[r * np + q] = deriv(q, xs[r]);
      diff2_[r * np + q] = second_deriv(q, xs[r]);
    }

  left_.resize(np);
  right_.resize(np);
  dleft_.resize(np);
  dright_.resize(np);
  for (int q = 0; q < np; ++q) {
    left_[q] = eval(q, -1.0);
    right_[q] = eval(q, 1.0);
    dleft_[q] = deriv(q, -1.0);
    dright_[q] = deriv(q, 1.0);
  }

  // Expand prod_{r != q} (xi - xi_r) into monomials, scaled by the
  // barycentric weight. Accumulated in long double.
  monomial_.assign(np * np, 0.0);
  for (int q = 0; q < np; ++q) {
    std::vector<long double> c(np, 0.0L);
    c[0] = 1.0L;
    int deg = 0;
    for (int r = 0; r < np; ++r) {
      if (r == q) continue;
      for (int m = deg + 1; m >= 1; --m) c[m] = c[m - 1] - xs[r] * c[m];
      c[0] = -xs[r] * c[0];
      ++deg;
    }
    for (int m = 0; m < np; ++m)
      monomial_[q * np + m] = static_cast<double>(c[m] * barycentric_[q]);
  }
}

void LagrangeBasis::check_index(int q) const {
  if (q < 0 || q > degree_) {
    throw std::out_of_range("LagrangeBasis: index " + std::to_string(q) +
                            " outside [0, " + std::to_string(degree_) + "]");
  }
}

double LagrangeBasis::eval(int q, double xi) const {
  check_index(q);
  double v = 1.0;
  for (int r = 0; r < size(); ++r)
    if (r != q) v *= (xi - rule_.nodes[r]);
  return v * barycentric_[q];
}

double LagrangeBasis::deriv(int q, double xi) const {
  check_index(q);
  // d/dxi prod_{r != q}(xi - xi_r) = sum_k prod_{r != q,k}(xi - xi_r)
  double sum = 0.0;
  for (int k = 0; k < size(); ++k) {
    if (k == q) continue;
    double prod = 1.0;
    for (int r = 0; r < size(); ++r)
      if (r != q && r != k) prod *= (xi - rule_.nodes[r]);
    sum += prod;
  }
  return sum * barycentric_[q];
}

double LagrangeBasis::second_deriv(int q, double xi) const {
  check_index(q);
  double sum = 0.0;
  for (int k = 0; k < size(); ++k) {
    if (k == q) continue;
    for (int m = 0; m < size(); ++m) {
      if (m == q || m == k) continue;
      double prod = 1.0;
      for (int r = 0; r < size(); ++r)
        if (r != q && r != k && r != m) prod *= (xi - rule_.nodes[r]);
      sum += prod;
    }
  }
  return sum * barycentric_[q];
}

}  // namespace mmdg
