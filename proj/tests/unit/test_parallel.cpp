#include <cmath>
#include <memory>
#include <numbers>

#include "doctest.h"
#include "mmdg/lenard_bernstein.hpp"
#include "mmdg/micro_macro.hpp"
#include "mmdg/parallel.hpp"
#include "mmdg/poisson.hpp"
#include "mmdg/problems.hpp"
#include "mmdg/time_integration.hpp"
#include "mmdg/vlasov.hpp"
#include "oracles.hpp"

using namespace mmdg;

namespace {
bool same(const DistributionField& a, const DistributionField& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a.data()[k] != b.data()[k]) return false;
  return true;
}
}  // namespace

TEST_CASE("serial and parallel kernels agree bitwise") {
  const double pi = std::numbers::pi;
  auto m = std::make_shared<const PhaseMesh>(build_mesh(-2 * pi, 2 * pi, 12, -6, 6, 8, 2));
  auto f = sample_nodal(m, [](double x, double v) { return initial_distribution(Problem::two_stream, x, v); });
  const auto rho = moments_of(f, Exec::serial);
  const auto rp = moments_of(f, Exec::parallel);
  for (std::size_t k = 0; k < rho.size(); ++k) CHECK(rho[k] == rp[k]);

  const auto field = solve_poisson(rho, calibrate_ne(rho));
  DistributionField a(m), b(m);
  vlasov_form(f, field, periodic_bc(), a, Exec::serial);
  vlasov_form(f, field, periodic_bc(), b, Exec::parallel);
  CHECK(same(a, b));

  micro_maxwellian_form(rho, field, MicroOptions{}, periodic_bc(), a, Exec::serial);
  micro_maxwellian_form(rho, field, MicroOptions{}, periodic_bc(), b, Exec::parallel);
  CHECK(same(a, b));

  LBOperator op(*m);
  a = f;
  b = f;
  implicit_lb_solve(op, a, rho, 0.7, Exec::serial);
  implicit_lb_solve(op, b, rho, 0.7, Exec::parallel);
  CHECK(same(a, b));

  MomentField ma(m), mb(m);
  macro_form(rho, &f, field, periodic_bc(), ma, Exec::serial);
  macro_form(rho, &f, field, periodic_bc(), mb, Exec::parallel);
  for (std::size_t k = 0; k < ma.size(); ++k) CHECK(ma[k] == mb[k]);
}

TEST_CASE("whole micro-macro steps agree bitwise") {
  const double pi = std::numbers::pi;
  auto m = std::make_shared<const PhaseMesh>(build_mesh(-2 * pi, 2 * pi, 8, -6, 6, 8, 2));
  auto setup = init_problem(Problem::landau, m);
  DistributionField g0;
  split_initial_condition(setup.f0, setup.rho0, MaxwellianQuadrature{}, g0);
  SolverOptions so, po;
  so.nu = po.nu = 0.25;
  so.exec = Exec::serial;
  MicroMacroSolver s(setup.rho0, g0, setup.bc, tableau("pdars"), so);
  MicroMacroSolver p(setup.rho0, g0, setup.bc, tableau("pdars"), po);
  for (int k = 0; k < 3; ++k) {
    s.step(0.05);
    p.step(0.05);
  }
  CHECK(same(s.g(), p.g()));
  for (std::size_t k = 0; k < s.rho().size(); ++k) CHECK(s.rho()[k] == p.rho()[k]);
  CHECK(max_threads() >= 1);
}
