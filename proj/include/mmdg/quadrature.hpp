#pragma once

#include <span>
#include <vector>

namespace mmdg {

/// Gauss-Legendre rule on the reference interval [-1, 1].
struct GLRule {
  int order = 0;
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive, sum to 2
};

/// n-point Gauss-Legendre rule (exact for polynomials of degree <= 2n-1).
/// Nodes are found by Newton iteration on P_n. Throws std::invalid_argument
/// for n < 1.
GLRule gl_rule(int n);

/// Legendre polynomial P_n(x) and its derivative.
struct LegendreValue {
  double p;
  double dp;
};
LegendreValue legendre(int n, double x);

/// Nodal Lagrange basis of degree p on the (p+1) Gauss-Legendre points of
/// [-1, 1]. Indices are 0-based: q in [0, p].
///
/// Everything the DG forms need is tabulated at construction: the
/// differentiation matrices D(r, q) = l_q'(xi_r) and D2(r, q) = l_q''(xi_r),
/// face values l_q(+-1), l_q'(+-1), and the monomial coefficients of each
/// l_q (used for exact Gaussian integrals). Immutable afterwards.
class LagrangeBasis {
 public:
  explicit LagrangeBasis(int degree);

  int degree() const noexcept { return degree_; }
  int size() const noexcept { return degree_ + 1; }

  std::span<const double> nodes() const noexcept { return rule_.nodes; }
  std::span<const double> weights() const noexcept { return rule_.weights; }
  const GLRule& rule() const noexcept { return rule_; }

  /// l_q(xi), l_q'(xi), l_q''(xi). Throws std::out_of_range for bad q.
  double eval(int q, double xi) const;
  double deriv(int q, double xi) const;
  double second_deriv(int q, double xi) const;

  /// D(r, q) = l_q'(xi_r).
  double diff(int r, int q) const noexcept { return diff_[r * size() + q]; }
  /// D2(r, q) = l_q''(xi_r).
  double diff2(int r, int q) const noexcept { return diff2_[r * size() + q]; }

  double at_left(int q) const noexcept { return left_[q]; }
  double at_right(int q) const noexcept { return right_[q]; }
  double deriv_left(int q) const noexcept { return dleft_[q]; }
  double deriv_right(int q) const noexcept { return dright_[q]; }

  /// Coefficients c_m, m = 0..p, with l_q(xi) = sum_m c_m xi^m.
  std::span<const double> monomial(int q) const noexcept {
    return {monomial_.data() + q * size(), static_cast<std::size_t>(size())};
  }

 private:
  void check_index(int q) const;

  int degree_;
  GLRule rule_;
  std::vector<double> barycentric_;
  std::vector<double> diff_, diff2_;
  std::vector<double> left_, right_, dleft_, dright_;
  std::vector<double> monomial_;
};

}  // namespace mmdg
