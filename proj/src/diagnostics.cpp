#include "mmdg/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "mmdg/error.hpp"
#include "mmdg/micro_macro.hpp"

namespace mmdg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr Moments kNaN3{kNaN, kNaN, kNaN};

void put(std::ostream& os, double x) {
  os << ',';
  if (!std::isnan(x)) os << x;
}

}  // namespace

void write_csv_header(std::ostream& os) {
  os << "time,M0_f,M1_f,M2_f,M0_rho,M1_rho,M2_rho,outflow0,outflow1,outflow2,"
        "E_t,E_pot,g0_max,g1_max,g2_max,g0_l1,g1_l1,g2_l1,energy_residual,min_f\n";
}

void write_csv_row(std::ostream& os, const DiagnosticsRecord& r) {
  const auto old = os.precision(17);
  os << r.time;
  for (double x : r.m_f) put(os, x);
  for (double x : r.m_rho) put(os, x);
  for (double x : r.outflow) put(os, x);
  put(os, r.energy);
  put(os, r.potential_energy);
  for (double x : r.g_max) put(os, x);
  for (double x : r.g_l1) put(os, x);
  put(os, r.energy_residual);
  put(os, r.min_f);
  os << '\n';
  os.precision(old);
}

double total_energy(const MomentField& rho, const ElectricField& field) {
  return global_totals(rho)[2] + potential_energy(rho.mesh(), field);
}

double total_energy(const DistributionField& f, const ElectricField& field,
                    Exec exec) {
  return total_energy(moments_of(f, exec), field);
}

DiagnosticsRecord record_of(const DirectSolver& s) {
  DiagnosticsRecord r;
  r.time = s.time();
  const auto rho = moments_of(s.f());
  r.m_f = global_totals(rho);
  r.m_rho = kNaN3;
  r.outflow = s.boundary_outflow();
  r.potential_energy = potential_energy(s.f().mesh(), s.field());
  r.energy = r.m_f[2] + r.potential_energy;
  r.g_max = r.g_l1 = kNaN3;
  r.energy_residual = kNaN;
  const auto d = s.f().data();
  r.min_f = *std::min_element(d.begin(), d.end());
  return r;
}

DiagnosticsRecord record_of(const MicroMacroSolver& s) {
  DiagnosticsRecord r;
  const auto& mesh = s.rho().mesh();
  r.time = s.time();
  r.m_rho = global_totals(s.rho());
  r.outflow = s.boundary_outflow();
  r.potential_energy = potential_energy(mesh, s.field());
  r.energy = r.m_rho[2] + r.potential_energy;

  const auto gm = micro_moments(s.g());
  r.g_max = r.g_l1 = Moments{};
  r.energy_residual = 0.0;
  for (int i = 0; i < mesh.nx(); ++i)
    for (int q = 0; q < mesh.np(); ++q) {
      const auto& m = gm[mesh.node(i, q)];
      const double w = mesh.x_weight(q);
      for (int k = 0; k < 3; ++k) {
        r.g_max[k] = std::max(r.g_max[k], std::abs(m[k]));
        r.g_l1[k] += w * std::abs(m[k]);
      }
      r.energy_residual += w * s.field().E[i] * m[1];
    }
  const auto f = s.assemble_f();
  r.m_f = global_totals(f);
  const auto d = f.data();
  r.min_f = *std::min_element(d.begin(), d.end());
  return r;
}

DiagnosticsRecord record_of(const EulerPoissonSolver& s) {
  DiagnosticsRecord r;
  r.time = s.time();
  r.m_rho = global_totals(s.rho());
  r.m_f = kNaN3;
  r.outflow = kNaN3;
  r.potential_energy = potential_energy(s.rho().mesh(), s.field());
  r.energy = r.m_rho[2] + r.potential_energy;
  r.g_max = r.g_l1 = kNaN3;
  r.energy_residual = kNaN;
  r.min_f = kNaN;
  return r;
}

double error_norm(const PhaseMesh& mesh, std::span<const double> x,
                  std::span<const double> x_ref) {
  if (x.size() != x_ref.size() || x.size() != mesh.spatial_nodes())
    throw ConfigError("error_norm: fields live on different spatial meshes");
  double num = 0.0, den = 0.0;
  for (int i = 0; i < mesh.nx(); ++i)
    for (int q = 0; q < mesh.np(); ++q) {
      const auto k = mesh.node(i, q);
      num += mesh.x_weight(q) * std::abs(x[k] - x_ref[k]);
      den += mesh.x_weight(q) * std::abs(x_ref[k]);
    }
  return den > 0.0 ? num / den : num;
}

FluidProfile fluid_profile(const MomentField& rho) {
  const auto& mesh = rho.mesh();
  FluidProfile p;
  p.n.resize(rho.size());
  p.u.resize(rho.size());
  p.theta.resize(rho.size());
  for (int i = 0; i < mesh.nx(); ++i)
    for (int q = 0; q < mesh.np(); ++q) {
      const auto k = mesh.node(i, q);
      const auto s = fluid_from_moments(rho[k], mesh.x_node(i, q));
      p.n[k] = s.n;
      p.u[k] = s.u;
      p.theta[k] = s.theta;
    }
  return p;
}

DampingFit fit_damping_rate(std::span<const double> t, std::span<const double> epot,
                            double t_a, double t_b) {
  std::vector<double> tm, ym;
  for (std::size_t k = 1; k + 1 < t.size(); ++k)
    if (t[k] >= t_a && t[k] <= t_b && epot[k] > epot[k - 1] && epot[k] >= epot[k + 1] &&
        epot[k] > 0.0) {
      tm.push_back(t[k]);
      ym.push_back(std::log(epot[k]));
    }
  if (tm.size() < 2) throw ConfigError("damping fit window holds fewer than two maxima");
  const double n = static_cast<double>(tm.size());
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (std::size_t k = 0; k < tm.size(); ++k) {
    st += tm[k];
    sy += ym[k];
    stt += tm[k] * tm[k];
    sty += tm[k] * ym[k];
  }
  DampingFit fit;
  fit.slope = (n * sty - st * sy) / (n * stt - st * st);
  fit.rate = -0.5 * fit.slope;
  fit.maxima = static_cast<int>(tm.size());
  return fit;
}

std::vector<double> resample(std::span<const double> t, std::span<const double> y,
                             double t0, double t1, double h) {
  std::vector<double> out;
  std::size_t k = 0;
  for (int m = 0;; ++m) {
    const double tt = t0 + m * h;
    if (tt > t1 + 1e-9 * h) break;
    while (k + 2 < t.size() && t[k + 1] < tt) ++k;
    const double a = (tt - t[k]) / (t[k + 1] - t[k]);
    out.push_back((1.0 - a) * y[k] + a * y[k + 1]);
  }
  return out;
}

int cross_correlation_lag(std::span<const double> a, std::span<const double> b,
                          int max_lag) {
  const int n = static_cast<int>(std::min(a.size(), b.size()));
  auto centered = [n](std::span<const double> x) {
    double mean = 0.0;
    for (int k = 0; k < n; ++k) mean += x[k];
    mean /= n;
    std::vector<double> c(n);
    for (int k = 0; k < n; ++k) c[k] = x[k] - mean;
    return c;
  };
  const auto ca = centered(a), cb = centered(b);
  int best = 0;
  double best_corr = -std::numeric_limits<double>::infinity();
  for (int lag = -max_lag; lag <= max_lag; ++lag) {
    double sab = 0, saa = 0, sbb = 0;
    for (int k = std::max(0, -lag); k < n && k + lag < n; ++k) {
      const double x = ca[k], y = cb[k + lag];
      sab += x * y;
      saa += x * x;
      sbb += y * y;
    }
    const double c = sab / std::sqrt(saa * sbb);
    if (c > best_corr) {
      best_corr = c;
      best = lag;
    }
  }
  return best;
}

}  // namespace mmdg
