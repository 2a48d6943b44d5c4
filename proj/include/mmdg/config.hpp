#pragma once

#include <string>
#include <string_view>

#include "mmdg/problems.hpp"

namespace mmdg {

enum class Method { direct, mm, euler };

Method parse_method(std::string_view name);
std::string to_string(Method m);

struct RunConfig {
  Problem problem = Problem::landau;
  Method method = Method::mm;
  double nu = 0.0;
  int nx = 32, nv = 64, degree = 2;
  double x_min = 0.0, x_max = 1.0, v_min = -6.0, v_max = 6.0;
  double cfl = 0.75;
  /// Fixed step overriding the CFL rule when positive.
  double dt = 0.0;
  double t_end = 1.0;
  std::string tableau = "pdars";
  bool clean = true;
  bool extended_cells = true;
  bool inconsistent_quadrature = false;
  bool field_free = false;
  bool transport = true;
  /// Output directory; empty disables all file output.
  std::string out_dir;
  /// Snapshot every N steps (0: none).
  int snapshot_every = 0;
  /// Diagnostics record every N steps (the final state is always recorded).
  int record_every = 1;
  /// Damping-rate fit window; t_b <= t_a disables the fit.
  double fit_t_a = 0.0, fit_t_b = 0.0;
  bool serial = false;
};

/// Defaults of the given problem (domain, resolution, nu, tableau, ...).
RunConfig default_config(Problem p);

/// Sets one key. Keys match the CLI flag names with '-' replaced by '_'
/// (problem, method, nu, nx, nv, p, cfl, dt, t_end, tableau, clean, ...).
/// Booleans accept on/off, true/false, 1/0. Throws ConfigError.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Applies every "key = value" line of a file; '#' starts a comment.
void load_config_file(RunConfig& cfg, const std::string& path);

bool parse_switch(std::string_view value);

/// Cross-field checks; forces field_free for the Riemann problem.
void validate(RunConfig& cfg);

}  // namespace mmdg
