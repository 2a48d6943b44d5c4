#include "mmdg/run.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>

#include "mmdg/error.hpp"
#include "mmdg/snapshot.hpp"

namespace mmdg {

std::vector<double> RunResult::times() const {
  std::vector<double> t;
  for (const auto& r : records) t.push_back(r.time);
  return t;
}

std::vector<double> RunResult::potential_energy() const {
  std::vector<double> e;
  for (const auto& r : records) e.push_back(r.potential_energy);
  return e;
}

MeshPtr make_mesh(const RunConfig& cfg) {
  return std::make_shared<const PhaseMesh>(build_mesh(
      cfg.x_min, cfg.x_max, cfg.nx, cfg.v_min, cfg.v_max, cfg.nv, cfg.degree));
}

double run_dt(const RunConfig& cfg, const PhaseMesh& mesh) {
  return cfg.dt > 0.0 ? cfg.dt : cfl_dt(mesh, cfg.cfl);
}

namespace {

// Uniform driver over the three solver types.
class Stepper {
 public:
  virtual ~Stepper() = default;
  virtual void step(double dt) = 0;
  virtual double time() const = 0;
  virtual DiagnosticsRecord record() const = 0;
  virtual void snapshot(const std::string& dir, int step) const = 0;
  virtual void finish(RunResult& r) const = 0;
};

std::string stem(const std::string& dir, const char* name, int step) {
  return (std::filesystem::path(dir) / (name + std::to_string(step) + ".csv")).string();
}

class DirectStepper final : public Stepper {
 public:
  explicit DirectStepper(DirectSolver s) : s_(std::move(s)) {}
  void step(double dt) override { s_.step(dt); }
  double time() const override { return s_.time(); }
  DiagnosticsRecord record() const override { return record_of(s_); }
  void snapshot(const std::string& dir, int step) const override {
    write_distribution_snapshot(stem(dir, "f_", step), s_.f(), s_.time());
    write_moment_snapshot(stem(dir, "moments_", step), moments_of(s_.f()), s_.time());
  }
  void finish(RunResult& r) const override {
    r.f = s_.f();
    r.rho = moments_of(s_.f());
    r.field = s_.field();
  }

 private:
  DirectSolver s_;
};

class MicroMacroStepper final : public Stepper {
 public:
  explicit MicroMacroStepper(MicroMacroSolver s) : s_(std::move(s)) {}
  void step(double dt) override { s_.step(dt); }
  double time() const override { return s_.time(); }
  DiagnosticsRecord record() const override { return record_of(s_); }
  void snapshot(const std::string& dir, int step) const override {
    write_distribution_snapshot(stem(dir, "f_", step), s_.assemble_f(), s_.time());
    write_distribution_snapshot(stem(dir, "g_", step), s_.g(), s_.time());
    write_moment_snapshot(stem(dir, "moments_", step), s_.rho(), s_.time());
  }
  void finish(RunResult& r) const override {
    r.f = s_.assemble_f();
    r.g = s_.g();
    r.rho = s_.rho();
    r.field = s_.field();
  }

 private:
  MicroMacroSolver s_;
};

class EulerStepper final : public Stepper {
 public:
  explicit EulerStepper(EulerPoissonSolver s) : s_(std::move(s)) {}
  void step(double dt) override { s_.step(dt); }
  double time() const override { return s_.time(); }
  DiagnosticsRecord record() const override { return record_of(s_); }
  void snapshot(const std::string& dir, int step) const override {
    write_moment_snapshot(stem(dir, "moments_", step), s_.rho(), s_.time());
  }
  void finish(RunResult& r) const override {
    r.rho = s_.rho();
    r.field = s_.field();
  }

 private:
  EulerPoissonSolver s_;
};

std::unique_ptr<Stepper> make_stepper(const RunConfig& cfg, const MeshPtr& mesh) {
  auto setup = init_problem(cfg.problem, mesh);
  SolverOptions opt;
  opt.nu = cfg.nu;
  opt.transport = cfg.transport;
  opt.field_free = cfg.field_free;
  opt.exec = cfg.serial ? Exec::serial : Exec::parallel;
  opt.clean = cfg.clean;
  opt.micro.quad.extended_cells = cfg.extended_cells;
  opt.micro.quad.inconsistent = cfg.inconsistent_quadrature;
  const bool ghost = !setup.bc.periodic();

  switch (cfg.method) {
    case Method::direct:
      return std::make_unique<DirectStepper>(DirectSolver(
          std::move(setup.f0), std::move(setup.bc), tableau(cfg.tableau), opt));
    case Method::mm: {
      MomentField rho0 = std::move(setup.rho0);
      DistributionField g0;
      split_initial_condition(setup.f0, rho0, opt.micro.quad, g0, opt.exec);
      auto bc = ghost ? ghost_bc(g0, &rho0) : periodic_bc();
      return std::make_unique<MicroMacroStepper>(MicroMacroSolver(
          std::move(rho0), std::move(g0), std::move(bc), tableau(cfg.tableau), opt));
    }
    case Method::euler: {
      auto rho0 = std::move(setup.rho0);
      auto bc = ghost ? ghost_bc(setup.f0, &rho0) : periodic_bc();
      return std::make_unique<EulerStepper>(
          EulerPoissonSolver(std::move(rho0), std::move(bc), cfg.field_free, opt.exec));
    }
  }
  return nullptr;
}

void write_summary(const std::string& dir, const RunConfig& cfg, const RunResult& r) {
  std::ofstream os(std::filesystem::path(dir) / "summary.txt");
  os.precision(17);
  os << "problem=" << to_string(cfg.problem) << "\nmethod=" << to_string(cfg.method)
     << "\nnu=" << cfg.nu << "\nnx=" << cfg.nx << "\nnv=" << cfg.nv
     << "\np=" << cfg.degree << "\ntableau=" << cfg.tableau << "\ndt=" << r.dt
     << "\nsteps=" << r.steps << "\nt_end=" << (r.records.empty() ? 0.0 : r.records.back().time);
  for (int k = 0; k < 3; ++k)
    os << "\nmax_conservation_error_" << k << '=' << r.max_conservation_error[k];
  os << "\nmax_energy_drift=" << r.max_energy_drift;
  if (r.damping) os << "\ndamping_rate=" << r.damping->rate << "\ndamping_maxima=" << r.damping->maxima;
  os << '\n';
}

void summarize(const RunConfig& cfg, RunResult& r) {
  const bool use_rho = cfg.method != Method::direct;
  const auto& first = r.records.front();
  const auto& m0 = use_rho ? first.m_rho : first.m_f;
  for (const auto& rec : r.records) {
    const auto& m = use_rho ? rec.m_rho : rec.m_f;
    for (int k = 0; k < 3; ++k) {
      const double out = std::isnan(rec.outflow[k]) ? 0.0 : rec.outflow[k];
      r.max_conservation_error[k] =
          std::max(r.max_conservation_error[k], std::abs(m[k] - m0[k] + out));
    }
    if (first.energy != 0.0)
      r.max_energy_drift = std::max(r.max_energy_drift,
                                    std::abs((rec.energy - first.energy) / first.energy));
  }
  if (cfg.fit_t_b > cfg.fit_t_a) {
    const auto t = r.times();
    const auto e = r.potential_energy();
    r.damping = fit_damping_rate(t, e, cfg.fit_t_a, cfg.fit_t_b);
  }
}

}  // namespace

RunResult run(RunConfig cfg) {
  validate(cfg);
  RunResult res;
  res.mesh = make_mesh(cfg);
  if (cfg.method == Method::euler) {
    // Velocity bounds only enter through the CFL rule.
    res.dt = cfg.dt > 0.0 ? cfg.dt
                          : cfl_dt(res.mesh->dx(), cfg.degree,
                                   std::max(std::abs(cfg.v_min), std::abs(cfg.v_max)), cfg.cfl);
  } else {
    res.dt = run_dt(cfg, *res.mesh);
  }
  auto stepper = make_stepper(cfg, res.mesh);

  const bool files = !cfg.out_dir.empty();
  std::ofstream csv;
  if (files) {
    std::filesystem::create_directories(cfg.out_dir);
    csv.open(std::filesystem::path(cfg.out_dir) / "diagnostics.csv");
    if (!csv) throw ConfigError("cannot write diagnostics into '" + cfg.out_dir + "'");
    write_csv_header(csv);
  }
  auto emit = [&](DiagnosticsRecord rec) {
    if (files) write_csv_row(csv, rec);
    res.records.push_back(rec);
  };

  emit(stepper->record());
  if (files && cfg.snapshot_every > 0) stepper->snapshot(cfg.out_dir, 0);

  const int nsteps = std::max(1, static_cast<int>(std::ceil(cfg.t_end / res.dt - 1e-9)));
  for (int k = 1; k <= nsteps; ++k) {
    try {
      const double remaining = cfg.t_end - stepper->time();
      stepper->step(k == nsteps ? remaining : res.dt);
      if (k % cfg.record_every == 0 || k == nsteps) emit(stepper->record());
      if (files && cfg.snapshot_every > 0 && (k % cfg.snapshot_every == 0 || k == nsteps))
        stepper->snapshot(cfg.out_dir, k);
    } catch (const std::exception& e) {
      if (files) csv.flush();
      throw SolverError("step " + std::to_string(k) + " (t = " +
                        std::to_string(stepper->time()) + "): " + e.what());
    }
    res.steps = k;
  }
  stepper->finish(res);
  summarize(cfg, res);
  if (files) {
    csv.flush();
    write_summary(cfg.out_dir, cfg, res);
    if (cfg.problem == Problem::riemann) {
      std::vector<double> xs;
      std::vector<FluidState> exact;
      for (int i = 0; i < res.mesh->nx(); ++i)
        for (int q = 0; q < res.mesh->np(); ++q) {
          xs.push_back(res.mesh->x_node(i, q));
          exact.push_back(exact_riemann(riemann_left(), riemann_right(), xs.back() / cfg.t_end));
        }
      write_profile((std::filesystem::path(cfg.out_dir) / "exact_riemann.csv").string(), xs,
                    exact, cfg.t_end);
    }
  }
  return res;
}

}  // namespace mmdg
