#pragma once

#include <vector>

#include "mmdg/fields.hpp"
#include "mmdg/maxwellian.hpp"
#include "mmdg/poisson.hpp"
#include "mmdg/vlasov.hpp"

namespace mmdg {

/// Euler flux <e v M[rho]> = (n u, n(u^2 + theta), n(u^2 + 3 theta) u / 2).
Moments macro_flux(const Moments& rho, double x = 0.0);

/// Kinetic upwind flux between traces rho_L = rho(x^-) and rho_R = rho(x^+):
///   (F(L) + F(R))/2 - <e |v| (M_R - M_L)>/2.
Moments macro_numflux(const Moments& left, const Moments& right, double x = 0.0);

/// <e vhat^+ g(x^-)> + <e vhat^- g(x^+)> over the velocity mesh, from the two
/// velocity traces at an edge.
Moments micro_numflux_moments(const PhaseMesh& mesh,
                              std::span<const double> g_minus,
                              std::span<const double> g_plus);

/// Left/right moment traces at edge k (0..nx), honouring the boundary.
void edge_moments(const MomentField& rho, const SpatialBC& bc, int k,
                  Moments& minus, Moments& plus);

/// Mass-inverted macro residual: out_q^i = B^macro(rho, g, E; l_q)/(dx w_q/2),
/// so d rho/dt = -out. g may be null (pure Euler-Poisson).
/// net_flux receives the total moment outflow through x_min and x_max.
void macro_form(const MomentField& rho, const DistributionField* g,
                const ElectricField& field, const SpatialBC& bc,
                MomentField& out, Exec exec = Exec::parallel,
                Moments* net_flux = nullptr);

struct MicroOptions {
  MaxwellianQuadrature quad;
  /// Drop the E-flux of the Maxwellian at v_min and v_max.
  bool zero_velocity_boundary_flux = true;
};

/// Projection of the nodal Maxwellian expansion onto the DG space:
/// out(i,q,j,s) = int E[rho_q^i] l_s dv / (dv w_s / 2).
void maxwellian_projection(const MomentField& rho, const MaxwellianQuadrature& quad,
                           DistributionField& out, Exec exec = Exec::parallel);

/// Mass-inverted Maxwellian transport form B^micro(rho, E; l_q l_s).
void micro_maxwellian_form(const MomentField& rho, const ElectricField& field,
                           const MicroOptions& opt, const SpatialBC& bc,
                           DistributionField& out, Exec exec = Exec::parallel);

/// Per-node moments <e g> of a velocity slice field.
std::vector<Moments> micro_moments(const DistributionField& g);

/// Gamma_q^i = R^macro_q - sum_{j,s} (dv w_s/2) e(v_s) (R^vp + R^micro)_{q,j,s}
/// (mass-inverted), the rate at which one explicit step changes <e g>.
std::vector<Moments> gamma_residual(const MomentField& rho,
                                    const DistributionField& g,
                                    const ElectricField& field,
                                    const MicroOptions& opt, const SpatialBC& bc,
                                    Exec exec = Exec::parallel);

}  // namespace mmdg
