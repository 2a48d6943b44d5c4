#include <cmath>
#include <memory>
#include <numbers>

#include "doctest.h"
#include "mmdg/error.hpp"
#include "mmdg/maxwellian.hpp"
#include "oracles.hpp"

using namespace mmdg;

TEST_CASE("gaussian_moment over the real line") {
  const FluidState s{1.7, -0.6, 2.3};
  CHECK(gaussian_moment(0, -kInf, kInf, s) == doctest::Approx(1.7).epsilon(1e-15));
  CHECK(gaussian_moment(1, -kInf, kInf, s) == doctest::Approx(1.7 * -0.6).epsilon(1e-14));
  CHECK(gaussian_moment(2, -kInf, kInf, s) == doctest::Approx(1.7 * (0.36 + 2.3)).epsilon(1e-14));
}

TEST_CASE("gaussian_moment matches dense quadrature on finite intervals") {
  for (int trial = 0; trial < 20; ++trial) {
    const FluidState s{oracle::uniform(0.2, 2), oracle::uniform(-2, 2), oracle::uniform(0.2, 3)};
    const double a = oracle::uniform(-4, 0), b = a + oracle::uniform(0.1, 5);
    for (int m = 0; m <= 5; ++m) {
      const double ref = oracle::simpson([&](double v) { return std::pow(v, m) * oracle::maxwellian(s.n, s.u, s.theta, v); },
                                         a, b, 4000);
      CHECK(std::abs(gaussian_moment(m, a, b, s) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("far tails stay accurate") {
  // the region where erf(a) - erf(b) cancels catastrophically
  const FluidState s{1.0, 0.0, 1.0};
  const double ref = oracle::simpson([&](double v) { return oracle::maxwellian(1, 0, 1, v); }, 6.0, 12.0, 20000);
  CHECK(oracle::rel(gaussian_moment(0, 6.0, kInf, s), ref) < 1e-10);
  CHECK(oracle::rel(gaussian_moment(0, -kInf, -6.0, s), ref) < 1e-10);
  CHECK(oracle::rel(gaussian_moment(0, 6.0, 12.0, s), ref) < 1e-10);
}

TEST_CASE("abs_v_moments closed forms and errors") {
  const auto a = abs_v_moments({1, 0, 1});
  CHECK(a[0] == doctest::Approx(2.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-14));
  CHECK(std::abs(abs_v_moments({1, 0, 2.5})[1]) < 1e-15);
  CHECK_THROWS_AS(abs_v_moments({1, 0, 0}), DomainError);
  CHECK_THROWS_AS(eval_maxwellian({1, 0, -1}, 0.0), DomainError);
  CHECK(eval_maxwellian({2, 0.5, 4.5}, 0.5) == doctest::Approx(2.0 / std::sqrt(9 * std::numbers::pi)));
}

TEST_CASE("maxwellian_nodal_field") {
  auto m = std::make_shared<const PhaseMesh>(build_mesh(0, 1, 3, -6, 6, 4, 2));
  MomentField rho(m);
  for (std::size_t k = 0; k < rho.size(); ++k) rho[k] = moments_from_fluid({2, 0.5, 4.5});
  const auto st = maxwellian_nodal_field(rho);
  REQUIRE(st.size() == rho.size());
  for (const auto& s : st) {
    CHECK(s.n == doctest::Approx(2));
    CHECK(s.u == doctest::Approx(0.5));
    CHECK(s.theta == doctest::Approx(4.5));
  }
  rho.at(1, 2) = {1, 3, 1};
  CHECK_THROWS_AS(maxwellian_nodal_field(rho), DomainError);
}

TEST_CASE("maxwellian_cell_integrals: exact, extended and nodal modes") {
  auto m = build_mesh(0, 1, 1, -6, 6, 4, 2);
  const FluidState s{1.0, 0.3, 1.0};
  std::vector<double> nodes(m.basis().nodes().begin(), m.basis().nodes().end());
  std::array<double, 3> i0{}, i1{}, id{};
  for (int j = 0; j < 4; ++j) {
    maxwellian_cell_integrals(m, s, j, {false, false}, i0, i1, id);
    const double a = m.v_edge(j), h = m.dv();
    for (int q = 0; q < 3; ++q) {
      auto l = [&](double v) { return oracle::lagrange(nodes, q, 2 * (v - a) / h - 1); };
      auto dl = [&](double v) { return oracle::lagrange_deriv(nodes, q, 2 * (v - a) / h - 1) * 2 / h; };
      auto M = [&](double v) { return oracle::maxwellian(1, 0.3, 1, v); };
      CHECK(std::abs(i0[q] - oracle::simpson([&](double v) { return l(v) * M(v); }, a, a + h, 2000)) < 1e-13);
      CHECK(std::abs(i1[q] - oracle::simpson([&](double v) { return v * l(v) * M(v); }, a, a + h, 2000)) < 1e-13);
      CHECK(std::abs(id[q] - oracle::simpson([&](double v) { return dl(v) * M(v); }, a, a + h, 2000)) < 1e-13);
    }
  }
  // extended first cell: sum of l_q is 1, so the integral reaches -inf
  maxwellian_cell_integrals(m, s, 0, {true, false}, i0, i1, id);
  CHECK(i0[0] + i0[1] + i0[2] == doctest::Approx(gaussian_moment(0, -kInf, -3.0, s)).epsilon(1e-13));
  // nodal rule
  maxwellian_cell_integrals(m, s, 1, {false, true}, i0, i1, id);
  for (int q = 0; q < 3; ++q)
    CHECK(i0[q] == doctest::Approx(m.v_weight(q) * eval_maxwellian(s, m.v_node(1, q))).epsilon(1e-14));
}
