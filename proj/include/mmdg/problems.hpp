#pragma once

#include <string>
#include <string_view>

#include "mmdg/fields.hpp"
#include "mmdg/vlasov.hpp"

namespace mmdg {

enum class Problem { relaxation, riemann, two_stream, landau };

Problem parse_problem(std::string_view name);
std::string to_string(Problem p);

/// Per-problem default parameters.
struct ProblemDefaults {
  double x_min = 0.0, x_max = 1.0;
  double v_min = -6.0, v_max = 6.0;
  int nx = 1, nv = 16, degree = 2;
  double nu = 0.0;
  double t_end = 1.0;
  std::string tableau = "pdars";
  /// Fixed time step; 0 selects the CFL rule.
  double dt = 0.0;
  bool field_free = false;
  bool transport = true;
  bool periodic = true;
};

ProblemDefaults problem_defaults(Problem p);

/// Initial distribution f0(x, v) of the problem.
double initial_distribution(Problem p, double x, double v);

/// Riemann states left and right of x = 0.
FluidState riemann_left();
FluidState riemann_right();

/// Moments of the continuous f0 at every spatial node, integrated over the
/// velocity domain with a dense GL rule (points_per_cell per velocity
/// element) instead of the (p+1) nodal samples.
MomentField initial_moments(Problem p, const MeshPtr& mesh, int points_per_cell = 16);

struct ProblemSetup {
  MeshPtr mesh;
  DistributionField f0;
  /// initial_moments of the problem; seeds the macro state.
  MomentField rho0;
  SpatialBC bc;
};

/// Nodal sampling of f0 on the given mesh, its dense moments, and the
/// spatial BC (ghost states from the initial traces for the Riemann problem,
/// periodic otherwise).
ProblemSetup init_problem(Problem p, MeshPtr mesh);

}  // namespace mmdg
