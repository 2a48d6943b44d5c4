#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "mmdg/quadrature.hpp"
#include "oracles.hpp"

using namespace mmdg;

TEST_CASE("gl_rule closed forms") {
  auto r1 = gl_rule(1);
  CHECK(r1.nodes[0] == doctest::Approx(0.0));
  CHECK(r1.weights[0] == doctest::Approx(2.0));

  auto r2 = gl_rule(2);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

  auto r3 = gl_rule(3);
  CHECK(r3.nodes[0] == doctest::Approx(-std::sqrt(0.6)).epsilon(1e-15));
  CHECK(std::abs(r3.nodes[1]) < 1e-15);
  CHECK(r3.weights[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-15));
  CHECK(r3.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-15));

  CHECK_THROWS_AS(gl_rule(0), std::invalid_argument);
}

TEST_CASE("gl_rule integrates monomials up to degree 2n-1") {
  for (int n = 1; n <= 8; ++n) {
    const auto r = gl_rule(n);
    double wsum = 0.0;
    for (int k = 0; k < n; ++k) {
      wsum += r.weights[k];
      CHECK(r.nodes[k] == doctest::Approx(-r.nodes[n - 1 - k]).epsilon(1e-15));
      if (k > 0) CHECK(r.nodes[k] > r.nodes[k - 1]);
    }
    CHECK(std::abs(wsum - 2.0) < 1e-14);
    for (int m = 0; m <= 2 * n - 1; ++m) {
      double q = 0.0;
      for (int k = 0; k < n; ++k) q += r.weights[k] * std::pow(r.nodes[k], m);
      const double exact = (m % 2) ? 0.0 : 2.0 / (m + 1);
      CHECK(std::abs(q - exact) < 1e-14);
    }
  }
}

TEST_CASE("Lagrange basis: cardinality, partition of unity, product form") {
  for (int p = 1; p <= 4; ++p) {
    LagrangeBasis b(p);
    std::vector<double> nodes(b.nodes().begin(), b.nodes().end());
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        CHECK(std::abs(b.eval(q, nodes[r]) - (q == r ? 1.0 : 0.0)) < 1e-14);
    for (double xi : {-1.0, -0.7, 0.1, 0.3, 0.95, 1.0}) {
      double s = 0.0, ds = 0.0;
      for (int q = 0; q <= p; ++q) {
        s += b.eval(q, xi);
        ds += b.deriv(q, xi);
        CHECK(b.eval(q, xi) == doctest::Approx(oracle::lagrange(nodes, q, xi)).epsilon(1e-13));
      }
      CHECK(std::abs(s - 1.0) < 1e-14);
      CHECK(std::abs(ds) < 1e-12);
    }
  }
  LagrangeBasis b(2);
  CHECK_THROWS_AS(b.eval(3, 0.0), std::out_of_range);
  CHECK_THROWS_AS(b.eval(-1, 0.0), std::out_of_range);
}

TEST_CASE("Lagrange derivatives") {
  LagrangeBasis b1(1);
  const double x1 = b1.nodes()[0], x2 = b1.nodes()[1];
  for (double xi : {-0.5, 0.0, 0.8}) CHECK(b1.deriv(0, xi) == doctest::Approx(-1.0 / (x2 - x1)));

  LagrangeBasis b(2);
  std::vector<double> nodes(b.nodes().begin(), b.nodes().end());
  const double h = 1e-6, xi = 0.1;
  const double fd = (oracle::lagrange(nodes, 2, xi + h) - oracle::lagrange(nodes, 2, xi - h)) / (2 * h);
  CHECK(std::abs(b.deriv(2, xi) - fd) < 1e-6);
  const double fd2 = (b.deriv(2, xi + h) - b.deriv(2, xi - h)) / (2 * h);
  CHECK(std::abs(b.second_deriv(2, xi) - fd2) < 1e-6);

  // face tables agree with pointwise evaluation
  for (int q = 0; q < 3; ++q) {
    CHECK(b.at_left(q) == doctest::Approx(b.eval(q, -1.0)));
    CHECK(b.at_right(q) == doctest::Approx(b.eval(q, 1.0)));
    CHECK(b.deriv_left(q) == doctest::Approx(b.deriv(q, -1.0)));
    CHECK(b.deriv_right(q) == doctest::Approx(b.deriv(q, 1.0)));
  }
}

TEST_CASE("differentiation matrix is exact on degree <= p polynomials") {
  for (int p = 1; p <= 4; ++p) {
    LagrangeBasis b(p);
    auto poly = [p](double x) { double s = 0; for (int m = 0; m <= p; ++m) s += (m + 1) * std::pow(x, m); return s; };
    auto dpoly = [p](double x) { double s = 0; for (int m = 1; m <= p; ++m) s += m * (m + 1) * std::pow(x, m - 1); return s; };
    for (int r = 0; r <= p; ++r) {
      double d = 0.0;
      for (int q = 0; q <= p; ++q) d += b.diff(r, q) * poly(b.nodes()[q]);
      CHECK(std::abs(d - dpoly(b.nodes()[r])) < 1e-12);
    }
  }
}

TEST_CASE("monomial coefficients reproduce the basis") {
  LagrangeBasis b(3);
  for (int q = 0; q < 4; ++q)
    for (double xi : {-0.9, 0.2, 0.77}) {
      double s = 0.0;
      const auto c = b.monomial(q);
      for (int m = 0; m < 4; ++m) s += c[m] * std::pow(xi, m);
      CHECK(s == doctest::Approx(b.eval(q, xi)).epsilon(1e-13));
    }
}
