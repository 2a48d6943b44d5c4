#pragma once

#include <vector>

#include "mmdg/fields.hpp"

namespace mmdg {

/// Continuous piecewise-linear potential Phi at the element edges x_{i+1/2}
/// (nx+1 values) and the element-constant field E_i = -(Phi_{i+1}-Phi_i)/dx.
struct ElectricField {
  std::vector<double> phi;
  std::vector<double> E;
};

enum class PoissonBC { periodic, dirichlet };

/// E = 0, Phi = 0 on the given mesh.
ElectricField zero_field(const PhaseMesh& mesh);

/// Linear FEM solve of -Phi'' = n - n_e with the density taken from
/// component 0 of rho. The load is integrated element-wise with the
/// (p+1)-point GL rule against the hat functions.
///
/// periodic: gauge sum_i Phi_i = 0 over the nx distinct edge values. Throws
/// SolverError when the load does not sum to zero (incompatible n_e).
/// dirichlet: Phi = 0 at both domain ends.
ElectricField solve_poisson(const MomentField& rho, double ne,
                            PoissonBC bc = PoissonBC::periodic);

/// Mean initial density over the spatial domain.
double calibrate_ne(const MomentField& rho0);

/// 1/2 int E^2 dx.
double potential_energy(const PhaseMesh& mesh, const ElectricField& field);

}  // namespace mmdg
