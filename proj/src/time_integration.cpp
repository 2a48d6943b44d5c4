#include "mmdg/time_integration.hpp"

#include <algorithm>
#include <cmath>

#include "mmdg/error.hpp"

namespace mmdg {

bool ButcherTableau::has_implicit_part() const {
  return std::any_of(implicit_a.begin(), implicit_a.end(),
                     [](double x) { return x != 0.0; });
}

ButcherTableau tableau(std::string_view name) {
  ButcherTableau t;
  t.name = std::string(name);
  if (name == "ars111") {
    t.stages = 2;
    t.explicit_a = {0, 0, 1, 0};
    t.explicit_w = {1, 0};
    t.explicit_c = {0, 1};
    t.implicit_a = {0, 0, 0, 1};
    t.implicit_w = {0, 1};
    t.implicit_c = {0, 1};
    t.gsa = true;
  } else if (name == "pdars") {
    t.stages = 3;
    t.explicit_a = {0, 0, 0, 1, 0, 0, 0.5, 0.5, 0};
    t.explicit_w = {0.5, 0.5, 0};
    t.explicit_c = {0, 1, 1};
    t.implicit_a = {0, 0, 0, 0, 1, 0, 0, 0.5, 0.5};
    t.implicit_w = {0, 0.5, 0.5};
    t.implicit_c = {0, 1, 1};
    t.gsa = true;
  } else if (name == "ssprk2") {
    t.stages = 2;
    t.explicit_a = {0, 0, 1, 0};
    t.explicit_w = {0.5, 0.5};
    t.explicit_c = {0, 1};
    t.implicit_a.assign(4, 0.0);
    t.implicit_w.assign(2, 0.0);
    t.implicit_c.assign(2, 0.0);
  } else if (name == "ssprk3") {
    t.stages = 3;
    t.explicit_a = {0, 0, 0, 1, 0, 0, 0.25, 0.25, 0};
    t.explicit_w = {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0};
    t.explicit_c = {0, 1, 0.5};
    t.implicit_a.assign(9, 0.0);
    t.implicit_w.assign(3, 0.0);
    t.implicit_c.assign(3, 0.0);
  } else {
    throw ConfigError("unknown tableau '" + std::string(name) + "'");
  }
  return t;
}

double cfl_dt(double dx, int degree, double vmax, double cfl) {
  if (!(cfl > 0.0)) throw ConfigError("CFL number must be positive");
  return cfl / (2.0 * degree + 1.0) * dx / vmax;
}

double cfl_dt(const PhaseMesh& mesh, double cfl) {
  const auto v = mesh.v_domain();
  return cfl_dt(mesh.dx(), mesh.degree(), std::max(std::abs(v.lo), std::abs(v.hi)),
                cfl);
}

namespace {

void check_tableau(const ButcherTableau& tab, const SolverOptions& opt) {
  if (opt.nu < 0.0) throw ConfigError("collision frequency must be >= 0");
  if (opt.nu > 0.0 && !tab.gsa)
    throw ConfigError("tableau '" + tab.name +
                      "' is not globally stiffly accurate; it cannot be used with nu > 0");
  if (opt.nu > 0.0 && !tab.has_implicit_part())
    throw ConfigError("tableau '" + tab.name + "' has no implicit part; nu must be 0");
}

// Whether stage l's explicit/implicit rate is consumed by a later stage or
// by the assembly step.
// The nodal-quadrature ablation only touches the transport form of the
// Maxwellian; its projection (split, stage bracket, assembly) stays exact.
MaxwellianQuadrature projection_quadrature(MaxwellianQuadrature q) {
  q.inconsistent = false;
  return q;
}

bool explicit_needed(const ButcherTableau& t, int l) {
  for (int m = l + 1; m < t.stages; ++m)
    if (t.at(m, l) != 0.0) return true;
  return !t.gsa && t.explicit_w[l] != 0.0;
}

bool implicit_needed(const ButcherTableau& t, int l) {
  for (int m = l + 1; m < t.stages; ++m)
    if (t.a(m, l) != 0.0) return true;
  return !t.gsa && t.implicit_w[l] != 0.0;
}

}  // namespace

// ---------------------------------------------------------------------------

DirectSolver::DirectSolver(DistributionField f0, SpatialBC bc, ButcherTableau tab,
                           SolverOptions opt)
    : mesh_(f0.mesh_ptr()),
      f_(std::move(f0)),
      bc_(std::move(bc)),
      tab_(std::move(tab)),
      opt_(opt),
      lb_(*mesh_) {
  check_tableau(tab_, opt_);
  const auto rho0 = moments_of(f_, opt_.exec);
  ne_ = calibrate_ne(rho0);
  field_ = solve_field(rho0);
}

ElectricField DirectSolver::solve_field(const MomentField& rho) const {
  if (opt_.field_free) return zero_field(*mesh_);
  return solve_poisson(rho, ne_, bc_.periodic() ? PoissonBC::periodic
                                                : PoissonBC::dirichlet);
}

void DirectSolver::step(double dt) {
  const int s = tab_.stages;
  const Exec ex = opt_.exec;
  std::vector<DistributionField> rvp(s), rlb(s);
  std::vector<Moments> net(s, Moments{});
  DistributionField stage(mesh_);
  ElectricField stage_field = field_;

  for (int l = 0; l < s; ++l) {
    DistributionField fs = f_;
    for (int m = 0; m < l; ++m) {
      if (tab_.at(l, m) != 0.0 && opt_.transport) fs.axpy(-dt * tab_.at(l, m), rvp[m]);
      if (tab_.a(l, m) != 0.0 && opt_.nu > 0.0) fs.axpy(-dt * tab_.a(l, m), rlb[m]);
    }
    const double all = tab_.a(l, l);
    stage = fs;
    if (opt_.nu > 0.0 && all != 0.0) {
      // Moments are invariant under the implicit solve, so rho(f*) is used.
      const auto rho_star = moments_of(fs, ex);
      implicit_lb_solve(lb_, stage, rho_star, all * dt * opt_.nu, ex);
    }
    const auto rho_l = moments_of(stage, ex);
    stage_field = (l == 0) ? field_ : solve_field(rho_l);

    if (opt_.transport && explicit_needed(tab_, l)) {
      rvp[l] = DistributionField(mesh_);
      vlasov_form(stage, stage_field, bc_, rvp[l], ex, &net[l]);
    }
    if (opt_.nu > 0.0 && implicit_needed(tab_, l)) {
      rlb[l] = DistributionField(mesh_);
      if (all != 0.0) {
        // nu L f^(l) recovered from the implicit relation
        rlb[l] = fs;
        rlb[l].axpy(-1.0, stage);
        rlb[l] *= 1.0 / (all * dt);
      } else {
        lb_form(lb_, stage, rho_l, rlb[l], ex);
        rlb[l] *= opt_.nu;
      }
    }
  }

  if (tab_.gsa) {
    f_ = std::move(stage);
    field_ = std::move(stage_field);
  } else {
    for (int l = 0; l < s; ++l) {
      if (tab_.explicit_w[l] != 0.0 && opt_.transport) f_.axpy(-dt * tab_.explicit_w[l], rvp[l]);
      if (tab_.implicit_w[l] != 0.0 && opt_.nu > 0.0) f_.axpy(-dt * tab_.implicit_w[l], rlb[l]);
    }
    field_ = solve_field(moments_of(f_, ex));
  }
  for (int l = 0; l < s; ++l)
    for (int c = 0; c < 3; ++c) outflow_[c] += dt * tab_.explicit_w[l] * net[l][c];
  time_ += dt;
}

// ---------------------------------------------------------------------------

void split_initial_condition(const DistributionField& f0,
                             const MaxwellianQuadrature& quad, MomentField& rho0,
                             DistributionField& g0, Exec exec) {
  rho0 = moments_of(f0, exec);
  split_initial_condition(f0, rho0, quad, g0, exec);
}

void split_initial_condition(const DistributionField& f0, const MomentField& rho0,
                             const MaxwellianQuadrature& quad, DistributionField& g0,
                             Exec exec) {
  DistributionField proj(f0.mesh_ptr());
  maxwellian_projection(rho0, projection_quadrature(quad), proj, exec);
  g0 = f0;
  g0.axpy(-1.0, proj);
  Cleaner(f0.mesh()).apply(g0, exec);
}

MicroMacroSolver::MicroMacroSolver(MomentField rho0, DistributionField g0,
                                   SpatialBC bc, ButcherTableau tab,
                                   SolverOptions opt)
    : mesh_(rho0.mesh_ptr()),
      rho_(std::move(rho0)),
      g_(std::move(g0)),
      bc_(std::move(bc)),
      tab_(std::move(tab)),
      opt_(opt),
      lb_(*mesh_),
      cleaner_(*mesh_) {
  if (mesh_->degree() < 2)
    throw ConfigError("the micro-macro method needs polynomial degree p >= 2");
  check_tableau(tab_, opt_);
  ne_ = calibrate_ne(rho_);
  field_ = solve_field(rho_);
}

ElectricField MicroMacroSolver::solve_field(const MomentField& rho) const {
  if (opt_.field_free) return zero_field(*mesh_);
  return solve_poisson(rho, ne_, bc_.periodic() ? PoissonBC::periodic
                                                : PoissonBC::dirichlet);
}

DistributionField MicroMacroSolver::assemble_f() const {
  DistributionField f(mesh_);
  maxwellian_projection(rho_, projection_quadrature(opt_.micro.quad), f, opt_.exec);
  f.axpy(1.0, g_);
  return f;
}

void MicroMacroSolver::step(double dt) {
  const int s = tab_.stages;
  const Exec ex = opt_.exec;
  const auto quad = projection_quadrature(opt_.micro.quad);
  std::vector<MomentField> rmac(s);
  std::vector<DistributionField> rkin(s), rlb(s);
  std::vector<Moments> net(s, Moments{});

  DistributionField proj_k(mesh_);
  maxwellian_projection(rho_, quad, proj_k, ex);

  MomentField rho_l(mesh_);
  DistributionField g_l(mesh_);
  ElectricField field_l = field_;

  for (int l = 0; l < s; ++l) {
    // (1) macro explicit stage
    rho_l = rho_;
    bool moved = false;
    for (int m = 0; m < l; ++m)
      if (tab_.at(l, m) != 0.0 && opt_.transport) {
        rho_l.axpy(-dt * tab_.at(l, m), rmac[m]);
        moved = true;
      }
    // (2) field from the new macro state
    field_l = (l == 0) ? field_ : solve_field(rho_l);

    // (3) micro explicit accumulation with the Maxwellian bracket
    DistributionField gs = g_;
    if (moved) {
      gs.axpy(1.0, proj_k);
      DistributionField proj_l(mesh_);
      maxwellian_projection(rho_l, quad, proj_l, ex);
      gs.axpy(-1.0, proj_l);
    }
    for (int m = 0; m < l; ++m) {
      if (tab_.at(l, m) != 0.0 && opt_.transport) gs.axpy(-dt * tab_.at(l, m), rkin[m]);
      if (tab_.a(l, m) != 0.0 && opt_.nu > 0.0) gs.axpy(-dt * tab_.a(l, m), rlb[m]);
    }
    // (4) cleaning once something has been accumulated
    if (opt_.clean && l > 0) cleaner_.apply(gs, ex);

    // (5) implicit collision step with the macro moments of this stage
    const double all = tab_.a(l, l);
    g_l = gs;
    if (opt_.nu > 0.0 && all != 0.0)
      implicit_lb_solve(lb_, g_l, rho_l, all * dt * opt_.nu, ex);

    if (opt_.transport && explicit_needed(tab_, l)) {
      rmac[l] = MomentField(mesh_);
      macro_form(rho_l, &g_l, field_l, bc_, rmac[l], ex, &net[l]);
      rkin[l] = DistributionField(mesh_);
      vlasov_form(g_l, field_l, bc_, rkin[l], ex);
      DistributionField rmic(mesh_);
      micro_maxwellian_form(rho_l, field_l, opt_.micro, bc_, rmic, ex);
      rkin[l].axpy(1.0, rmic);
    }
    if (opt_.nu > 0.0 && implicit_needed(tab_, l)) {
      rlb[l] = DistributionField(mesh_);
      if (all != 0.0) {
        rlb[l] = gs;
        rlb[l].axpy(-1.0, g_l);
        rlb[l] *= 1.0 / (all * dt);
      } else {
        lb_form(lb_, g_l, rho_l, rlb[l], ex);
        rlb[l] *= opt_.nu;
      }
    }
  }

  if (tab_.gsa) {
    rho_ = std::move(rho_l);
    g_ = std::move(g_l);
    field_ = std::move(field_l);
  } else {
    MomentField rho_new = rho_;
    DistributionField g_new = g_;
    for (int l = 0; l < s; ++l) {
      if (tab_.explicit_w[l] != 0.0 && opt_.transport) {
        rho_new.axpy(-dt * tab_.explicit_w[l], rmac[l]);
        g_new.axpy(-dt * tab_.explicit_w[l], rkin[l]);
      }
      if (tab_.implicit_w[l] != 0.0 && opt_.nu > 0.0)
        g_new.axpy(-dt * tab_.implicit_w[l], rlb[l]);
    }
    g_new.axpy(1.0, proj_k);
    DistributionField proj_new(mesh_);
    maxwellian_projection(rho_new, quad, proj_new, ex);
    g_new.axpy(-1.0, proj_new);
    if (opt_.clean) cleaner_.apply(g_new, ex);
    rho_ = std::move(rho_new);
    g_ = std::move(g_new);
    field_ = solve_field(rho_);
  }
  for (int l = 0; l < s; ++l)
    for (int c = 0; c < 3; ++c) outflow_[c] += dt * tab_.explicit_w[l] * net[l][c];
  time_ += dt;
}

}  // namespace mmdg
