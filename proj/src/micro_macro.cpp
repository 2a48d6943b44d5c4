#include "mmdg/micro_macro.hpp"

#include <algorithm>

namespace mmdg {

Moments macro_flux(const Moments& rho, double x) {
  const auto s = fluid_from_moments(rho, x);
  return {s.n * s.u, s.n * (s.u * s.u + s.theta),
          0.5 * s.n * (s.u * s.u + 3.0 * s.theta) * s.u};
}

Moments macro_numflux(const Moments& left, const Moments& right, double x) {
  const auto fl = macro_flux(left, x), fr = macro_flux(right, x);
  const auto al = abs_v_moments(fluid_from_moments(left, x));
  const auto ar = abs_v_moments(fluid_from_moments(right, x));
  Moments out;
  for (int c = 0; c < 3; ++c) out[c] = 0.5 * (fl[c] + fr[c]) - 0.5 * (ar[c] - al[c]);
  return out;
}

Moments micro_numflux_moments(const PhaseMesh& mesh,
                              std::span<const double> g_minus,
                              std::span<const double> g_plus) {
  const int np = mesh.np();
  const int z = mesh.zero_interface();
  Moments out{};
  for (int j = 0; j < mesh.nv(); ++j) {
    const auto& src = j < z ? g_plus : g_minus;
    for (int s = 0; s < np; ++s) {
      const double v = mesh.v_node(j, s);
      const double f = mesh.v_weight(s) * v * src[j * np + s];
      out[0] += f;
      out[1] += f * v;
      out[2] += f * 0.5 * v * v;
    }
  }
  return out;
}

void edge_moments(const MomentField& rho, const SpatialBC& bc, int k,
                  Moments& minus, Moments& plus) {
  const int nx = rho.mesh().nx();
  if (k == 0) minus = bc.periodic() ? rho.right_trace(nx - 1) : bc.rho_left;
  else minus = rho.right_trace(k - 1);
  if (k == nx) plus = bc.periodic() ? rho.left_trace(0) : bc.rho_right;
  else plus = rho.left_trace(k);
}

void macro_form(const MomentField& rho, const DistributionField* g,
                const ElectricField& field, const SpatialBC& bc,
                MomentField& out, Exec exec, Moments* net_flux) {
  const auto& mesh = rho.mesh();
  const auto& basis = mesh.basis();
  const int nx = mesh.nx(), np = mesh.np();
  const std::size_t n = mesh.slice_size();
  const auto w = basis.weights();

  // Edge fluxes: Euler part plus the kinetic flux of g.
  std::vector<Moments> edge(nx + 1);
  parallel_for(exec, nx + 1, [&](std::ptrdiff_t kk) {
    const int k = static_cast<int>(kk);
    Moments lm, lp;
    edge_moments(rho, bc, k, lm, lp);
    auto F = macro_numflux(lm, lp, mesh.x_edge(k));
    if (g) {
      std::vector<double> gm(n), gp(n);
      if (k == 0) {
        if (bc.periodic()) right_x_trace(*g, nx - 1, gm);
        else std::copy(bc.f_left.begin(), bc.f_left.end(), gm.begin());
      } else {
        right_x_trace(*g, k - 1, gm);
      }
      if (k == nx) {
        if (bc.periodic()) left_x_trace(*g, 0, gp);
        else std::copy(bc.f_right.begin(), bc.f_right.end(), gp.begin());
      } else {
        left_x_trace(*g, k, gp);
      }
      const auto fg = micro_numflux_moments(mesh, gm, gp);
      for (int c = 0; c < 3; ++c) F[c] += fg[c];
    }
    edge[k] = F;
  });
  if (net_flux)
    for (int c = 0; c < 3; ++c) (*net_flux)[c] = edge[nx][c] - edge[0][c];

  // Nodal volume fluxes F(rho_r) + <e v g_r>.
  std::vector<Moments> vol(mesh.spatial_nodes());
  parallel_for(exec, static_cast<std::ptrdiff_t>(vol.size()), [&](std::ptrdiff_t k) {
    const int i = static_cast<int>(k / np), r = static_cast<int>(k % np);
    auto F = macro_flux(rho[k], mesh.x_node(i, r));
    if (g) {
      const auto sl = g->slice(static_cast<std::size_t>(k));
      for (int j = 0; j < mesh.nv(); ++j)
        for (int s = 0; s < np; ++s) {
          const double v = mesh.v_node(j, s);
          const double f = mesh.v_weight(s) * v * sl[j * np + s];
          F[0] += f;
          F[1] += f * v;
          F[2] += f * 0.5 * v * v;
        }
    }
    vol[k] = F;
  });

  parallel_for(exec, static_cast<std::ptrdiff_t>(vol.size()), [&](std::ptrdiff_t k) {
    const int i = static_cast<int>(k / np), q = static_cast<int>(k % np);
    const double mass = mesh.x_weight(q);
    Moments res;
    for (int c = 0; c < 3; ++c)
      res[c] = basis.at_right(q) * edge[i + 1][c] - basis.at_left(q) * edge[i][c];
    for (int r = 0; r < np; ++r) {
      const double d = w[r] * basis.diff(r, q);
      for (int c = 0; c < 3; ++c) res[c] -= d * vol[i * np + r][c];
    }
    const double E = field.E.empty() ? 0.0 : field.E[i];
    // -(E T rho, psi) with T rho = (0, rho0, rho1)
    res[1] -= mass * E * rho[k][0];
    res[2] -= mass * E * rho[k][1];
    for (int c = 0; c < 3; ++c) out[k][c] = res[c] / mass;
  });
}

void maxwellian_projection(const MomentField& rho, const MaxwellianQuadrature& quad,
                           DistributionField& out, Exec exec) {
  const auto& mesh = rho.mesh();
  const int np = mesh.np();
  const auto w = mesh.basis().weights();
  parallel_for(exec, static_cast<std::ptrdiff_t>(mesh.spatial_nodes()),
               [&](std::ptrdiff_t k) {
                 const int i = static_cast<int>(k / np), r = static_cast<int>(k % np);
                 const auto st = fluid_from_moments(rho[k], mesh.x_node(i, r));
                 auto sl = out.slice(static_cast<std::size_t>(k));
                 double i0[16], i1[16], id[16];
                 for (int j = 0; j < mesh.nv(); ++j) {
                   maxwellian_cell_integrals(mesh, st, j, quad, {i0, 16}, {i1, 16},
                                             {id, 16});
                   for (int s = 0; s < np; ++s)
                     sl[j * np + s] = i0[s] / (0.5 * mesh.dv() * w[s]);
                 }
               });
}

void micro_maxwellian_form(const MomentField& rho, const ElectricField& field,
                           const MicroOptions& opt, const SpatialBC& bc,
                           DistributionField& out, Exec exec) {
  const auto& mesh = rho.mesh();
  const auto& basis = mesh.basis();
  const int nx = mesh.nx(), nv = mesh.nv(), np = mesh.np();
  const std::size_t n = mesh.slice_size();
  const int z = mesh.zero_interface();
  const auto w = basis.weights();
  const double dv = mesh.dv();

  // Edge fluxes int vhat E[rho(x^-/+)] l_s dv per velocity element (as
  // integrals, not yet mass-inverted).
  std::vector<double> flux(static_cast<std::size_t>(nx + 1) * n);
  parallel_for(exec, nx + 1, [&](std::ptrdiff_t kk) {
    const int k = static_cast<int>(kk);
    Moments lm, lp;
    edge_moments(rho, bc, k, lm, lp);
    const auto sm = fluid_from_moments(lm, mesh.x_edge(k));
    const auto sp = fluid_from_moments(lp, mesh.x_edge(k));
    double i0[16], i1[16], id[16];
    for (int j = 0; j < nv; ++j) {
      maxwellian_cell_integrals(mesh, j < z ? sp : sm, j, opt.quad, {i0, 16},
                                {i1, 16}, {id, 16});
      for (int s = 0; s < np; ++s) flux[k * n + j * np + s] = i1[s];
    }
  });

  // Nodal integrals int v E_r l_s dv (x-volume) and int E_r l_s' dv
  // (v-volume) for every spatial node.
  std::vector<FluidState> states(mesh.spatial_nodes());
  std::vector<double> vol(mesh.spatial_nodes() * n), dvol(mesh.spatial_nodes() * n);
  parallel_for(exec, static_cast<std::ptrdiff_t>(states.size()), [&](std::ptrdiff_t k) {
    const int i = static_cast<int>(k / np), r = static_cast<int>(k % np);
    states[k] = fluid_from_moments(rho[k], mesh.x_node(i, r));
    double i0[16], i1[16], id[16];
    for (int j = 0; j < nv; ++j) {
      maxwellian_cell_integrals(mesh, states[k], j, opt.quad, {i0, 16}, {i1, 16},
                                {id, 16});
      for (int s = 0; s < np; ++s) {
        vol[k * n + j * np + s] = i1[s];
        dvol[k * n + j * np + s] = id[s];
      }
    }
  });

  const bool skip_boundary_faces =
      opt.zero_velocity_boundary_flux || (!opt.quad.inconsistent && opt.quad.extended_cells);

  parallel_for(exec, static_cast<std::ptrdiff_t>(states.size()), [&](std::ptrdiff_t k) {
    const int i = static_cast<int>(k / np), q = static_cast<int>(k % np);
    auto res = out.slice(static_cast<std::size_t>(k));
    const double mass_x = mesh.x_weight(q);
    const double* fr = flux.data() + static_cast<std::size_t>(i + 1) * n;
    const double* fl = flux.data() + static_cast<std::size_t>(i) * n;
    for (std::size_t a = 0; a < n; ++a)
      res[a] = basis.at_right(q) * fr[a] - basis.at_left(q) * fl[a];
    for (int r = 0; r < np; ++r) {
      const double d = w[r] * basis.diff(r, q);
      const double* vr = vol.data() + static_cast<std::size_t>(i * np + r) * n;
      for (std::size_t a = 0; a < n; ++a) res[a] -= d * vr[a];
    }
    for (int j = 0; j < nv; ++j)
      for (int s = 0; s < np; ++s) res[j * np + s] /= mass_x * 0.5 * dv * w[s];

    const double E = field.E.empty() ? 0.0 : field.E[i];
    if (E == 0.0) return;
    // The Maxwellian is continuous in v, so the E-flux is E * E_q(v_face).
    for (int j = 0; j <= nv; ++j) {
      if ((j == 0 || j == nv) && skip_boundary_faces) continue;
      const double F = E * eval_maxwellian(states[k], mesh.v_edge(j));
      if (j > 0)
        for (int s = 0; s < np; ++s)
          res[(j - 1) * np + s] += F * basis.at_right(s) / (0.5 * dv * w[s]);
      if (j < nv)
        for (int s = 0; s < np; ++s)
          res[j * np + s] -= F * basis.at_left(s) / (0.5 * dv * w[s]);
    }
    const double* dk = dvol.data() + static_cast<std::size_t>(k) * n;
    for (int j = 0; j < nv; ++j)
      for (int s = 0; s < np; ++s)
        res[j * np + s] -= E * dk[j * np + s] / (0.5 * dv * w[s]);
  });
}

std::vector<Moments> micro_moments(const DistributionField& g) {
  const auto& mesh = g.mesh();
  std::vector<Moments> out(mesh.spatial_nodes());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = slice_moments(mesh, g.slice(k));
  return out;
}

std::vector<Moments> gamma_residual(const MomentField& rho,
                                    const DistributionField& g,
                                    const ElectricField& field,
                                    const MicroOptions& opt, const SpatialBC& bc,
                                    Exec exec) {
  MomentField rm(rho.mesh_ptr());
  macro_form(rho, &g, field, bc, rm, exec);
  DistributionField rv(g.mesh_ptr()), ru(g.mesh_ptr());
  vlasov_form(g, field, bc, rv, exec);
  micro_maxwellian_form(rho, field, opt, bc, ru, exec);
  rv.axpy(1.0, ru);
  const auto closure = micro_moments(rv);
  std::vector<Moments> out(closure.size());
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int c = 0; c < 3; ++c) out[k][c] = rm[k][c] - closure[k][c];
  return out;
}

}  // namespace mmdg
