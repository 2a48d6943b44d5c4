#include "mmdg/euler.hpp"

#include <algorithm>
#include <cmath>

#include "mmdg/error.hpp"
#include "mmdg/micro_macro.hpp"

namespace mmdg {

namespace {

constexpr double g1 = (kGamma - 1.0) / (2.0 * kGamma);  // 1/3
constexpr double g2 = (kGamma + 1.0) / (2.0 * kGamma);  // 2/3

struct Side {
  double rho, u, p, c;
};

Side side_of(const FluidState& s) {
  if (!(s.n > 0.0) || !(s.theta > 0.0))
    throw DomainError("Riemann state must have positive density and temperature", 0.0);
  const double p = s.n * s.theta;
  return {s.n, s.u, p, std::sqrt(kGamma * p / s.n)};
}

// Toro's pressure function for one side and its derivative.
void pressure_fn(double p, const Side& k, double& f, double& df) {
  if (p > k.p) {
    const double A = 2.0 / ((kGamma + 1.0) * k.rho);
    const double B = (kGamma - 1.0) / (kGamma + 1.0) * k.p;
    const double q = std::sqrt(A / (p + B));
    f = (p - k.p) * q;
    df = q * (1.0 - 0.5 * (p - k.p) / (p + B));
  } else {
    const double r = std::pow(p / k.p, g1);
    f = 2.0 * k.c / (kGamma - 1.0) * (r - 1.0);
    df = std::pow(p / k.p, -g2) / (k.rho * k.c);
  }
}

}  // namespace

RiemannSolution riemann_star(const FluidState& left, const FluidState& right) {
  const Side L = side_of(left), R = side_of(right);
  const double du = R.u - L.u;
  if (2.0 * (L.c + R.c) / (kGamma - 1.0) <= du)
    throw DomainError("Riemann data generate vacuum", 0.0);

  auto F = [&](double p, double& df) {
    double fl, dfl, fr, dfr;
    pressure_fn(p, L, fl, dfl);
    pressure_fn(p, R, fr, dfr);
    df = dfl + dfr;
    return fl + fr + du;
  };

  // F is increasing and concave in p; bracket the root first.
  double lo = 0.0, hi = std::max(L.p, R.p);
  double d;
  while (F(hi, d) < 0.0) hi *= 2.0;
  double p = std::clamp(0.5 * (L.p + R.p), 1e-14 * hi, hi);
  double fp = F(p, d);
  for (int it = 0; it < 200 && std::abs(fp) > 1e-13; ++it) {
    if (fp < 0.0) lo = p; else hi = p;
    double next = p - fp / d;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    p = next;
    fp = F(p, d);
  }
  if (std::abs(fp) > 1e-13) throw SolverError("Riemann star-pressure iteration did not converge");

  double fl, dfl, fr, dfr;
  pressure_fn(p, L, fl, dfl);
  pressure_fn(p, R, fr, dfr);
  return {p, 0.5 * (L.u + R.u) + 0.5 * (fr - fl), fp};
}

FluidState exact_riemann(const FluidState& left, const FluidState& right,
                         double xi) {
  const Side L = side_of(left), R = side_of(right);
  const auto star = riemann_star(left, right);
  const double ps = star.p_star, us = star.u_star;
  const double gm = (kGamma - 1.0) / (kGamma + 1.0);
  auto out = [](double rho, double u, double p) { return FluidState{rho, u, p / rho}; };

  if (xi <= us) {
    if (ps > L.p) {
      const double sL = L.u - L.c * std::sqrt(g2 * ps / L.p + g1);
      if (xi <= sL) return out(L.rho, L.u, L.p);
      const double r = ps / L.p;
      return out(L.rho * (r + gm) / (gm * r + 1.0), us, ps);
    }
    const double cs = L.c * std::pow(ps / L.p, g1);
    if (xi <= L.u - L.c) return out(L.rho, L.u, L.p);
    if (xi >= us - cs) return out(L.rho * std::pow(ps / L.p, 1.0 / kGamma), us, ps);
    const double c = 2.0 / (kGamma + 1.0) * (L.c + 0.5 * (kGamma - 1.0) * (L.u - xi));
    const double u = 2.0 / (kGamma + 1.0) * (L.c + 0.5 * (kGamma - 1.0) * L.u + xi);
    const double rho = L.rho * std::pow(c / L.c, 2.0 / (kGamma - 1.0));
    return out(rho, u, L.p * std::pow(c / L.c, 2.0 * kGamma / (kGamma - 1.0)));
  }
  if (ps > R.p) {
    const double sR = R.u + R.c * std::sqrt(g2 * ps / R.p + g1);
    if (xi >= sR) return out(R.rho, R.u, R.p);
    const double r = ps / R.p;
    return out(R.rho * (r + gm) / (gm * r + 1.0), us, ps);
  }
  const double cs = R.c * std::pow(ps / R.p, g1);
  if (xi >= R.u + R.c) return out(R.rho, R.u, R.p);
  if (xi <= us + cs) return out(R.rho * std::pow(ps / R.p, 1.0 / kGamma), us, ps);
  const double c = 2.0 / (kGamma + 1.0) * (R.c - 0.5 * (kGamma - 1.0) * (R.u - xi));
  const double u = 2.0 / (kGamma + 1.0) * (-R.c + 0.5 * (kGamma - 1.0) * R.u + xi);
  const double rho = R.rho * std::pow(c / R.c, 2.0 / (kGamma - 1.0));
  return out(rho, u, R.p * std::pow(c / R.c, 2.0 * kGamma / (kGamma - 1.0)));
}

EulerPoissonSolver::EulerPoissonSolver(MomentField rho0, SpatialBC bc,
                                       bool field_free, Exec exec)
    : mesh_(rho0.mesh_ptr()),
      rho_(std::move(rho0)),
      bc_(std::move(bc)),
      field_free_(field_free),
      exec_(exec) {
  ne_ = calibrate_ne(rho_);
  field_ = solve_field(rho_);
}

ElectricField EulerPoissonSolver::solve_field(const MomentField& rho) const {
  if (field_free_) return zero_field(*mesh_);
  return solve_poisson(rho, ne_, bc_.periodic() ? PoissonBC::periodic
                                                : PoissonBC::dirichlet);
}

void EulerPoissonSolver::step(double dt) {
  MomentField r0(mesh_), r1(mesh_);
  macro_form(rho_, nullptr, field_, bc_, r0, exec_);
  MomentField stage = rho_;
  stage.axpy(-dt, r0);
  const auto field1 = solve_field(stage);
  macro_form(stage, nullptr, field1, bc_, r1, exec_);
  rho_.axpy(-0.5 * dt, r0);
  rho_.axpy(-0.5 * dt, r1);
  field_ = solve_field(rho_);
  time_ += dt;
}

void euler_poisson_solve(
    EulerPoissonSolver& solver, double t_end, double dt,
    const std::function<void(const EulerPoissonSolver&)>& observe) {
  if (observe) observe(solver);
  while (solver.time() < t_end - 1e-12 * dt) {
    solver.step(std::min(dt, t_end - solver.time()));
    if (observe) observe(solver);
  }
}

}  // namespace mmdg
