#pragma once

#include <vector>

#include "mmdg/fields.hpp"
#include "mmdg/poisson.hpp"

namespace mmdg {

/// Spatial boundary treatment. Ghost states are frozen copies of the initial
/// data just outside the domain: the velocity slice and the moments seen by
/// the numerical fluxes at x_min (left) and x_max (right).
struct SpatialBC {
  enum class Kind { periodic, ghost };
  Kind kind = Kind::periodic;
  std::vector<double> f_left, f_right;
  Moments rho_left{}, rho_right{};

  bool periodic() const noexcept { return kind == Kind::periodic; }
};

SpatialBC periodic_bc();
/// Ghost traces taken from the boundary traces of `f0` (and of `rho0` when
/// given) at t = 0.
SpatialBC ghost_bc(const DistributionField& f0, const MomentField* rho0 = nullptr);

/// Left/right velocity trace of element i at x_{i-1/2}^+ / x_{i+1/2}^-.
void left_x_trace(const DistributionField& f, int i, std::span<double> out);
void right_x_trace(const DistributionField& f, int i, std::span<double> out);

/// Upwind x-flux slice at edge k (0..nx): vhat^+ f(x^-) + vhat^- f(x^+),
/// evaluated at the velocity nodes.
void x_flux_slice(const DistributionField& f, const SpatialBC& bc, int k,
                  std::span<double> out);

/// Mass-inverted Vlasov form. out(i,q,j,s) = B^vp(f, E; l_q l_s) divided by
/// (dx w_q/2)(dv w_s/2), so that df/dt = -out for pure advection.
///
/// When net_flux is non-null it receives <e F>(x_max) - <e F>(x_min), the
/// net outflow of the moments through the spatial boundary.
void vlasov_form(const DistributionField& f, const ElectricField& field,
                 const SpatialBC& bc, DistributionField& out,
                 Exec exec = Exec::parallel, Moments* net_flux = nullptr);

}  // namespace mmdg
