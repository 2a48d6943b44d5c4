#pragma once

#include <optional>
#include <vector>

#include "mmdg/config.hpp"
#include "mmdg/diagnostics.hpp"

namespace mmdg {

struct RunResult {
  std::vector<DiagnosticsRecord> records;
  MeshPtr mesh;
  double dt = 0.0;
  int steps = 0;
  /// Final distribution (assembled for micro-macro, empty for Euler).
  DistributionField f;
  /// Final micro part (micro-macro only).
  DistributionField g;
  /// Final macro moments (moments of f for the direct method).
  MomentField rho;
  ElectricField field;

  /// max over records of |M_k(t) - M_k(0) + outflow_k(t)|, taken from the
  /// evolved totals (rho for micro-macro and Euler, f for direct).
  Moments max_conservation_error{};
  /// max over records of |E_t(t) - E_t(0)| / |E_t(0)|.
  double max_energy_drift = 0.0;
  std::optional<DampingFit> damping;

  std::vector<double> times() const;
  std::vector<double> potential_energy() const;
};

/// init -> time loop -> diagnostics -> snapshots -> summary. When out_dir is
/// set, writes diagnostics.csv, summary.txt and the snapshot files there.
/// Errors raised during stepping are rethrown as SolverError tagged with the
/// step index, after the diagnostics gathered so far have been flushed.
RunResult run(RunConfig cfg);

/// Mesh implied by the configuration.
MeshPtr make_mesh(const RunConfig& cfg);

/// Time step implied by the configuration (fixed dt or CFL rule).
double run_dt(const RunConfig& cfg, const PhaseMesh& mesh);

}  // namespace mmdg
