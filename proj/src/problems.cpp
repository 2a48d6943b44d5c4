#include "mmdg/problems.hpp"

#include <cmath>
#include <numbers>

#include "mmdg/error.hpp"
#include "mmdg/maxwellian.hpp"
#include "mmdg/quadrature.hpp"

namespace mmdg {

Problem parse_problem(std::string_view name) {
  if (name == "relaxation") return Problem::relaxation;
  if (name == "riemann") return Problem::riemann;
  if (name == "two_stream") return Problem::two_stream;
  if (name == "landau") return Problem::landau;
  throw ConfigError("unknown problem '" + std::string(name) + "'");
}

std::string to_string(Problem p) {
  switch (p) {
    case Problem::relaxation: return "relaxation";
    case Problem::riemann: return "riemann";
    case Problem::two_stream: return "two_stream";
    case Problem::landau: return "landau";
  }
  return "?";
}

ProblemDefaults problem_defaults(Problem p) {
  ProblemDefaults d;
  const double pi = std::numbers::pi;
  switch (p) {
    case Problem::relaxation:
      // space homogeneous: one element, no transport, backward Euler
      d.x_min = 0.0; d.x_max = 1.0; d.nx = 1;
      d.v_min = -12.0; d.v_max = 12.0; d.nv = 48;
      d.nu = 1e3; d.t_end = 1.0; d.tableau = "ars111"; d.dt = 1e-2;
      d.field_free = true; d.transport = false;
      break;
    case Problem::riemann:
      d.x_min = -1.0; d.x_max = 1.0; d.nx = 256;
      d.v_min = -6.0; d.v_max = 6.0; d.nv = 16;
      d.nu = 1e3; d.t_end = 0.1; d.tableau = "pdars";
      d.field_free = true; d.periodic = false;
      break;
    case Problem::two_stream:
      d.x_min = -2.0 * pi; d.x_max = 2.0 * pi; d.nx = 64;
      d.v_min = -2.0 * pi; d.v_max = 2.0 * pi; d.nv = 64;
      d.nu = 0.0; d.t_end = 10.0; d.tableau = "ssprk3";
      break;
    case Problem::landau:
      d.x_min = -2.0 * pi; d.x_max = 2.0 * pi; d.nx = 32;
      d.v_min = -6.0; d.v_max = 6.0; d.nv = 64;
      d.nu = 0.25; d.t_end = 50.0; d.tableau = "pdars";
      break;
  }
  return d;
}

FluidState riemann_left() { return {1.0, 0.0, 1.0}; }
FluidState riemann_right() { return {0.125, 0.0, 0.8}; }

double initial_distribution(Problem p, double x, double v) {
  const double pi = std::numbers::pi;
  switch (p) {
    case Problem::relaxation:
      return eval_maxwellian({1.0, -1.5, 0.5}, v) + eval_maxwellian({1.0, 2.5, 0.5}, v);
    case Problem::riemann:
      return eval_maxwellian(x < 0.0 ? riemann_left() : riemann_right(), v);
    case Problem::two_stream:
      return (1.0 - 0.5 * std::cos(0.5 * x)) * v * v / std::sqrt(pi) * std::exp(-v * v);
    case Problem::landau:
      return (1.0 + 1e-4 * std::cos(0.5 * x)) * std::exp(-0.5 * v * v) /
             std::sqrt(2.0 * pi);
  }
  return 0.0;
}

MomentField initial_moments(Problem p, const MeshPtr& mesh, int points_per_cell) {
  const auto rule = gl_rule(points_per_cell);
  const double h = 0.5 * mesh->dv();
  return sample_moments(mesh, [&](double x) {
    Moments m{};
    for (int j = 0; j < mesh->nv(); ++j) {
      const double vc = mesh->v_edge(j) + h;
      for (int k = 0; k < points_per_cell; ++k) {
        const double v = vc + h * rule.nodes[k];
        const double f = h * rule.weights[k] * initial_distribution(p, x, v);
        const auto e = e_vec(v);
        for (int c = 0; c < 3; ++c) m[c] += f * e[c];
      }
    }
    return m;
  });
}

ProblemSetup init_problem(Problem p, MeshPtr mesh) {
  ProblemSetup s;
  s.mesh = mesh;
  s.f0 = sample_nodal(mesh, [p](double x, double v) { return initial_distribution(p, x, v); });
  s.rho0 = initial_moments(p, mesh);
  if (p == Problem::riemann) {
    s.bc = ghost_bc(s.f0, &s.rho0);
  } else {
    s.bc = periodic_bc();
  }
  return s;
}

}  // namespace mmdg
