#pragma once

#include <functional>

#include "mmdg/fields.hpp"
#include "mmdg/poisson.hpp"
#include "mmdg/vlasov.hpp"

namespace mmdg {

// The 1V kinetic closure carries internal energy n theta / 2 per unit
// length, so p = n theta and e_int = p / (gamma - 1) force gamma = 3.
inline constexpr double kGamma = 3.0;

struct RiemannSolution {
  double p_star = 0.0;
  double u_star = 0.0;
  /// Pressure-function residual at p_star.
  double residual = 0.0;
};

/// Star region of the Riemann problem for the gamma = 3 Euler system.
/// Throws DomainError when the data generate vacuum.
RiemannSolution riemann_star(const FluidState& left, const FluidState& right);

/// Self-similar exact solution sampled at xi = x / t.
FluidState exact_riemann(const FluidState& left, const FluidState& right,
                         double xi);

/// Macro DG discretization with g = 0 coupled to Poisson, SSP-RK2 in time.
class EulerPoissonSolver {
 public:
  EulerPoissonSolver(MomentField rho0, SpatialBC bc, bool field_free,
                     Exec exec = Exec::parallel);

  void step(double dt);

  const MomentField& rho() const noexcept { return rho_; }
  const ElectricField& field() const noexcept { return field_; }
  double time() const noexcept { return time_; }

 private:
  ElectricField solve_field(const MomentField& rho) const;

  MeshPtr mesh_;
  MomentField rho_;
  SpatialBC bc_;
  bool field_free_;
  Exec exec_;
  double ne_ = 0.0;
  ElectricField field_;
  double time_ = 0.0;
};

/// Runs to t_end with a fixed step (the last one is shortened), calling
/// observe after the initial state and after every step.
void euler_poisson_solve(
    EulerPoissonSolver& solver, double t_end, double dt,
    const std::function<void(const EulerPoissonSolver&)>& observe = {});

}  // namespace mmdg
