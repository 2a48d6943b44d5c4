#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mmdg/cleaning.hpp"
#include "mmdg/fields.hpp"
#include "mmdg/lenard_bernstein.hpp"
#include "mmdg/micro_macro.hpp"
#include "mmdg/poisson.hpp"
#include "mmdg/vlasov.hpp"

namespace mmdg {

/// Double Butcher tableau of a diagonally implicit IMEX-RK scheme.
struct ButcherTableau {
  std::string name;
  int stages = 0;
  std::vector<double> explicit_a, implicit_a;  // row-major stages x stages
  std::vector<double> explicit_w, implicit_w;
  std::vector<double> explicit_c, implicit_c;
  bool gsa = false;

  double at(int l, int m) const { return explicit_a[l * stages + m]; }
  double a(int l, int m) const { return implicit_a[l * stages + m]; }
  bool has_implicit_part() const;
};

/// ars111, pdars, ssprk2 or ssprk3. Throws ConfigError for other names.
ButcherTableau tableau(std::string_view name);

/// dt = C / (2p+1) * dx / max(|v_min|, |v_max|).
double cfl_dt(const PhaseMesh& mesh, double cfl);
double cfl_dt(double dx, int degree, double vmax, double cfl);

struct SolverOptions {
  double nu = 0.0;
  /// Phase-space advection on/off (off for the space-homogeneous problem).
  bool transport = true;
  bool field_free = false;
  Exec exec = Exec::parallel;
  // micro-macro only
  bool clean = true;
  MicroOptions micro;
};

/// Time integrator for the direct DG discretization of f.
class DirectSolver {
 public:
  DirectSolver(DistributionField f0, SpatialBC bc, ButcherTableau tab,
               SolverOptions opt);

  void step(double dt);

  const DistributionField& f() const noexcept { return f_; }
  const ElectricField& field() const noexcept { return field_; }
  double time() const noexcept { return time_; }
  double ne() const noexcept { return ne_; }
  /// Time-integrated net moment outflow through the spatial boundary.
  const Moments& boundary_outflow() const noexcept { return outflow_; }
  const SpatialBC& bc() const noexcept { return bc_; }

 private:
  ElectricField solve_field(const MomentField& rho) const;

  MeshPtr mesh_;
  DistributionField f_;
  SpatialBC bc_;
  ButcherTableau tab_;
  SolverOptions opt_;
  LBOperator lb_;
  ElectricField field_;
  double ne_ = 0.0;
  double time_ = 0.0;
  Moments outflow_{};
};

/// Time integrator for the micro-macro pair (rho, g).
class MicroMacroSolver {
 public:
  /// g0 is used as given; see split_initial_condition for the usual setup.
  MicroMacroSolver(MomentField rho0, DistributionField g0, SpatialBC bc,
                   ButcherTableau tab, SolverOptions opt);

  void step(double dt);

  const MomentField& rho() const noexcept { return rho_; }
  const DistributionField& g() const noexcept { return g_; }
  const ElectricField& field() const noexcept { return field_; }
  double time() const noexcept { return time_; }
  double ne() const noexcept { return ne_; }
  const Moments& boundary_outflow() const noexcept { return outflow_; }
  const SpatialBC& bc() const noexcept { return bc_; }
  const SolverOptions& options() const noexcept { return opt_; }

  /// f = projection of E[rho] + g.
  DistributionField assemble_f() const;

 private:
  ElectricField solve_field(const MomentField& rho) const;

  MeshPtr mesh_;
  MomentField rho_;
  DistributionField g_;
  SpatialBC bc_;
  ButcherTableau tab_;
  SolverOptions opt_;
  LBOperator lb_;
  Cleaner cleaner_;
  ElectricField field_;
  double ne_ = 0.0;
  double time_ = 0.0;
  Moments outflow_{};
};

/// rho0 = moments of f0, g0 = f0 - projection of E[rho0], then cleaned. The
/// projection is exact whatever quad.inconsistent says.
void split_initial_condition(const DistributionField& f0,
                             const MaxwellianQuadrature& quad, MomentField& rho0,
                             DistributionField& g0, Exec exec = Exec::parallel);
/// Same split with prescribed macro moments (e.g. moments of the continuous
/// initial data rather than of its nodal samples).
void split_initial_condition(const DistributionField& f0, const MomentField& rho0,
                             const MaxwellianQuadrature& quad, DistributionField& g0,
                             Exec exec = Exec::parallel);

}  // namespace mmdg
