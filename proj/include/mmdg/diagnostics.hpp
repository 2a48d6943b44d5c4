#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "mmdg/euler.hpp"
#include "mmdg/fields.hpp"
#include "mmdg/poisson.hpp"
#include "mmdg/time_integration.hpp"

namespace mmdg {

/// One row of the diagnostics stream. Columns that do not apply to a method
/// hold NaN and are written as empty fields.
struct DiagnosticsRecord {
  double time = 0.0;
  /// Totals of the discrete velocity moments of f (for the micro-macro pair
  /// f is the projected Maxwellian of rho plus g).
  Moments m_f{};
  /// Totals of the evolved macro moments (micro-macro and Euler only).
  Moments m_rho{};
  /// Time-integrated moment outflow through the spatial boundary.
  Moments outflow{};
  double energy = 0.0;
  double potential_energy = 0.0;
  Moments g_max{}, g_l1{};
  /// int E <v g> dx, the rate at which a nonzero <v g> spoils the
  /// total-energy balance of the micro-macro scheme.
  double energy_residual = 0.0;
  double min_f = 0.0;
};

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const DiagnosticsRecord& rec);

/// 1/2 int [int f v^2 dv + E^2] dx, kinetic part from the third moment.
double total_energy(const MomentField& rho, const ElectricField& field);
double total_energy(const DistributionField& f, const ElectricField& field,
                    Exec exec = Exec::parallel);

DiagnosticsRecord record_of(const DirectSolver& s);
DiagnosticsRecord record_of(const MicroMacroSolver& s);
DiagnosticsRecord record_of(const EulerPoissonSolver& s);

/// || X - X_ref ||_1 / || X_ref ||_1 with the spatial GL rule; X and X_ref
/// hold one value per spatial node. Throws ConfigError on size mismatch.
double error_norm(const PhaseMesh& mesh, std::span<const double> x,
                  std::span<const double> x_ref);

/// Nodal (n, u, theta) of a moment field, component-wise.
struct FluidProfile {
  std::vector<double> n, u, theta;
};
FluidProfile fluid_profile(const MomentField& rho);

struct DampingFit {
  double rate = 0.0;   // Upsilon, E_pot ~ exp(-2 Upsilon t)
  double slope = 0.0;  // of log E_pot over the local maxima
  int maxima = 0;
};

/// Least-squares slope of log(local maxima of E_pot) over [t_a, t_b].
/// Throws ConfigError when fewer than two maxima fall in the window.
DampingFit fit_damping_rate(std::span<const double> t, std::span<const double> epot,
                            double t_a, double t_b);

/// Linear interpolation of (t, y) onto t0, t0 + h, ... up to t1.
std::vector<double> resample(std::span<const double> t, std::span<const double> y,
                             double t0, double t1, double h);

/// Lag (in samples, b relative to a) maximizing the normalized
/// cross-correlation of two equally sampled signals, searched in
/// [-max_lag, max_lag]. Positive lag: b trails a.
int cross_correlation_lag(std::span<const double> a, std::span<const double> b,
                          int max_lag);

}  // namespace mmdg
