#pragma once

#include <limits>
#include <span>
#include <vector>

#include "mmdg/fields.hpp"

namespace mmdg {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// n / sqrt(2 pi theta) exp(-(v - u)^2 / (2 theta)). Throws DomainError for
/// theta <= 0.
double eval_maxwellian(const FluidState& s, double v);

/// Exact int_a^b v^m M dv; a may be -inf and b may be +inf.
///
/// Uses v M = u M - theta dM/dv, which gives the upward recurrence
///   I_{m+1} = u I_m + theta (m I_{m-1} - [v^m M]_a^b)
/// seeded by the erf/erfc form of I_0.
double gaussian_moment(int m, double a, double b, const FluidState& s);

/// Fills out[k] = int_a^b v^k M dv for k = 0 .. out.size()-1.
void gaussian_moments(double a, double b, const FluidState& s,
                      std::span<double> out);

/// (<e_0 |v| M>, <e_1 |v| M>, <e_2 |v| M>) over the real line, closed form.
Moments abs_v_moments(const FluidState& s);

/// Fluid state at every spatial node (the nodal Maxwellian expansion
/// E[rho](x, v) = sum_k E[rho_k](v) l_k(x)).
std::vector<FluidState> maxwellian_nodal_field(const MomentField& rho);

/// How velocity integrals of Maxwellians against the DG basis are evaluated.
struct MaxwellianQuadrature {
  /// Integrate over (-inf, v_min + dv] and [v_max - dv, inf) in the first and
  /// last velocity elements.
  bool extended_cells = true;
  /// Replace the exact integrals by the (p+1)-point nodal GL rule (ablation).
  /// Extended cells are meaningless here and ignored.
  bool inconsistent = false;
};

/// Per-element integrals of one Maxwellian against the velocity basis of
/// element j:
///   i0[s] = int l_s M dv,  i1[s] = int v l_s M dv,  id[s] = int l_s' M dv.
/// Each span must hold p+1 entries.
void maxwellian_cell_integrals(const PhaseMesh& mesh, const FluidState& s,
                               int j, const MaxwellianQuadrature& quad,
                               std::span<double> i0, std::span<double> i1,
                               std::span<double> id);

}  // namespace mmdg
