#include "mmdg/vlasov.hpp"

#include <algorithm>

namespace mmdg {

SpatialBC periodic_bc() { return {}; }

void left_x_trace(const DistributionField& f, int i, std::span<double> out) {
  const auto& mesh = f.mesh();
  const auto& basis = mesh.basis();
  std::fill(out.begin(), out.end(), 0.0);
  for (int r = 0; r < mesh.np(); ++r) {
    const double l = basis.at_left(r);
    const auto sl = f.slice(i, r);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += l * sl[k];
  }
}

void right_x_trace(const DistributionField& f, int i, std::span<double> out) {
  const auto& mesh = f.mesh();
  const auto& basis = mesh.basis();
  std::fill(out.begin(), out.end(), 0.0);
  for (int r = 0; r < mesh.np(); ++r) {
    const double l = basis.at_right(r);
    const auto sl = f.slice(i, r);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += l * sl[k];
  }
}

SpatialBC ghost_bc(const DistributionField& f0, const MomentField* rho0) {
  const auto& mesh = f0.mesh();
  SpatialBC bc;
  bc.kind = SpatialBC::Kind::ghost;
  bc.f_left.resize(mesh.slice_size());
  bc.f_right.resize(mesh.slice_size());
  left_x_trace(f0, 0, bc.f_left);
  right_x_trace(f0, mesh.nx() - 1, bc.f_right);
  if (rho0) {
    bc.rho_left = rho0->left_trace(0);
    bc.rho_right = rho0->right_trace(mesh.nx() - 1);
  } else {
    bc.rho_left = slice_moments(mesh, bc.f_left);
    bc.rho_right = slice_moments(mesh, bc.f_right);
  }
  return bc;
}

void x_flux_slice(const DistributionField& f, const SpatialBC& bc, int k,
                  std::span<double> out) {
  const auto& mesh = f.mesh();
  const int nx = mesh.nx();
  const int np = mesh.np();
  const std::size_t n = mesh.slice_size();
  const int z = mesh.zero_interface();

  // Velocity elements j < z carry v < 0 and take the trace from the right,
  // the others take it from the left.
  std::vector<double> minus(n), plus(n);
  if (k == 0) {
    if (bc.periodic()) right_x_trace(f, nx - 1, minus);
    else std::copy(bc.f_left.begin(), bc.f_left.end(), minus.begin());
  } else {
    right_x_trace(f, k - 1, minus);
  }
  if (k == nx) {
    if (bc.periodic()) left_x_trace(f, 0, plus);
    else std::copy(bc.f_right.begin(), bc.f_right.end(), plus.begin());
  } else {
    left_x_trace(f, k, plus);
  }
  for (int j = 0; j < mesh.nv(); ++j) {
    const auto& src = j < z ? plus : minus;
    for (int s = 0; s < np; ++s) {
      const std::size_t a = static_cast<std::size_t>(j) * np + s;
      out[a] = mesh.v_node(j, s) * src[a];
    }
  }
}

void vlasov_form(const DistributionField& f, const ElectricField& field,
                 const SpatialBC& bc, DistributionField& out, Exec exec,
                 Moments* net_flux) {
  const auto& mesh = f.mesh();
  const auto& basis = mesh.basis();
  const int nx = mesh.nx(), nv = mesh.nv(), np = mesh.np();
  const std::size_t n = mesh.slice_size();
  const double dx = mesh.dx(), dv = mesh.dv();
  const auto w = basis.weights();

  std::vector<double> flux(static_cast<std::size_t>(nx + 1) * n);
  parallel_for(exec, nx + 1, [&](std::ptrdiff_t k) {
    x_flux_slice(f, bc, static_cast<int>(k),
                 std::span<double>(flux.data() + k * n, n));
  });
  if (net_flux) {
    const auto hi = slice_moments(mesh, std::span<const double>(flux.data() + nx * n, n));
    const auto lo = slice_moments(mesh, std::span<const double>(flux.data(), n));
    for (int c = 0; c < 3; ++c) (*net_flux)[c] = hi[c] - lo[c];
  }

  const std::ptrdiff_t nodes = static_cast<std::ptrdiff_t>(mesh.spatial_nodes());
  parallel_for(exec, nodes, [&](std::ptrdiff_t node) {
    const int i = static_cast<int>(node / np);
    const int q = static_cast<int>(node % np);
    auto res = out.slice(static_cast<std::size_t>(node));
    const double mass_x = 0.5 * dx * w[q];
    const double* fr = flux.data() + static_cast<std::size_t>(i + 1) * n;
    const double* fl = flux.data() + static_cast<std::size_t>(i) * n;

    // x-direction: surface and volume
    for (std::size_t a = 0; a < n; ++a)
      res[a] = (basis.at_right(q) * fr[a] - basis.at_left(q) * fl[a]) / mass_x;
    for (int r = 0; r < np; ++r) {
      const double c = w[r] * basis.diff(r, q) / mass_x;
      if (c == 0.0) continue;
      const auto fs = f.slice(i, r);
      for (int j = 0; j < nv; ++j)
        for (int s = 0; s < np; ++s) {
          const std::size_t a = static_cast<std::size_t>(j) * np + s;
          res[a] -= c * mesh.v_node(j, s) * fs[a];
        }
    }

    // v-direction at this spatial node; E is element-constant
    const double E = field.E.empty() ? 0.0 : field.E[i];
    if (E == 0.0) return;
    const double ep = std::max(E, 0.0), em = std::min(E, 0.0);
    const auto fq = f.slice(i, q);
    auto trace = [&](int j, bool right) {
      double t = 0.0;
      for (int s = 0; s < np; ++s)
        t += (right ? basis.at_right(s) : basis.at_left(s)) * fq[j * np + s];
      return t;
    };
    // interior faces j+1/2, j = 0..nv-2; boundary fluxes are zero
    for (int j = 0; j + 1 < nv; ++j) {
      const double F = ep * trace(j, true) + em * trace(j + 1, false);
      for (int s = 0; s < np; ++s) {
        res[j * np + s] += F * basis.at_right(s) / (0.5 * dv * w[s]);
        res[(j + 1) * np + s] -= F * basis.at_left(s) / (0.5 * dv * w[s]);
      }
    }
    for (int j = 0; j < nv; ++j)
      for (int s = 0; s < np; ++s) {
        double acc = 0.0;
        for (int sp = 0; sp < np; ++sp)
          acc += w[sp] * basis.diff(sp, s) * fq[j * np + sp];
        res[j * np + s] -= E * acc / (0.5 * dv * w[s]);
      }
  });
}

}  // namespace mmdg
