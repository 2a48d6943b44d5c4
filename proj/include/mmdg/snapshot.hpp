#pragma once

#include <string>
#include <vector>

#include "mmdg/fields.hpp"

namespace mmdg {

// Plain-text nodal snapshots. A block of "# key=value" lines (nx, nv, p,
// x_min, x_max, v_min, v_max, time) is followed by a CSV header and one row
// per node, floats at 17 significant digits.

void write_distribution_snapshot(const std::string& path,
                                 const DistributionField& f, double time);

struct DistributionSnapshot {
  MeshPtr mesh;
  DistributionField f;
  double time = 0.0;
};

/// Reads a file written by write_distribution_snapshot. Throws ConfigError
/// on malformed input.
DistributionSnapshot read_distribution_snapshot(const std::string& path);

/// Rows x, n, u, theta at every spatial node.
void write_moment_snapshot(const std::string& path, const MomentField& rho,
                           double time);

/// Rows x, n, u, theta for an arbitrary list of sample points.
void write_profile(const std::string& path, const std::vector<double>& x,
                   const std::vector<FluidState>& states, double time);

}  // namespace mmdg
