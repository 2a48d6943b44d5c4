#include "mmdg/poisson.hpp"

#include <cmath>
#include <sstream>

#include "mmdg/error.hpp"

namespace mmdg {

namespace {

// Thomas algorithm; a sub-, b main, c super-diagonal. Overwrites d.
void solve_tridiagonal(std::vector<double> a, std::vector<double> b,
                       std::vector<double> c, std::vector<double>& d) {
  const std::size_t n = d.size();
  for (std::size_t k = 1; k < n; ++k) {
    const double m = a[k] / b[k - 1];
    b[k] -= m * c[k - 1];
    d[k] -= m * d[k - 1];
  }
  d[n - 1] /= b[n - 1];
  for (std::size_t k = n - 1; k-- > 0;) d[k] = (d[k] - c[k] * d[k + 1]) / b[k];
}

}  // namespace

ElectricField zero_field(const PhaseMesh& mesh) {
  return {std::vector<double>(mesh.nx() + 1, 0.0),
          std::vector<double>(mesh.nx(), 0.0)};
}

ElectricField solve_poisson(const MomentField& rho, double ne, PoissonBC bc) {
  const auto& mesh = rho.mesh();
  const auto& basis = mesh.basis();
  const int nx = mesh.nx();
  const double dx = mesh.dx();

  // load[k] = int (n - ne) psi_k dx for every edge k = 0..nx.
  std::vector<double> load(nx + 1, 0.0);
  double scale = 0.0;
  for (int i = 0; i < nx; ++i) {
    for (int r = 0; r < mesh.np(); ++r) {
      const double w = mesh.x_weight(r);
      const double src = rho.at(i, r)[0] - ne;
      const double t = 0.5 * (1.0 + basis.nodes()[r]);  // rising hat on I_i
      load[i] += w * src * (1.0 - t);
      load[i + 1] += w * src * t;
      scale += w * std::abs(rho.at(i, r)[0]);
    }
  }

  ElectricField out = zero_field(mesh);
  auto& phi = out.phi;

  if (bc == PoissonBC::periodic) {
    load[0] += load[nx];
    double total = 0.0;
    for (int k = 0; k < nx; ++k) total += load[k];
    if (std::abs(total) > 1e-9 * std::max(scale, 1.0)) {
      std::ostringstream os;
      os << "periodic Poisson problem is incompatible: load sums to " << total;
      throw SolverError(os.str());
    }
    if (nx > 1) {
      // Fix Phi_0 = 0 and solve the remaining (nx-1) x (nx-1) system, which
      // is the Dirichlet stiffness matrix.
      const std::size_t m = nx - 1;
      std::vector<double> a(m, -1.0 / dx), b(m, 2.0 / dx), c(m, -1.0 / dx);
      std::vector<double> d(load.begin() + 1, load.begin() + nx);
      solve_tridiagonal(a, b, c, d);
      for (std::size_t k = 0; k < m; ++k) phi[k + 1] = d[k];
      double mean = 0.0;
      for (int k = 0; k < nx; ++k) mean += phi[k];
      mean /= nx;
      for (int k = 0; k < nx; ++k) phi[k] -= mean;
    }
    phi[nx] = phi[0];
  } else {
    if (nx > 1) {
      const std::size_t m = nx - 1;
      std::vector<double> a(m, -1.0 / dx), b(m, 2.0 / dx), c(m, -1.0 / dx);
      std::vector<double> d(load.begin() + 1, load.begin() + nx);
      solve_tridiagonal(a, b, c, d);
      for (std::size_t k = 0; k < m; ++k) phi[k + 1] = d[k];
    }
  }

  for (int i = 0; i < nx; ++i) out.E[i] = -(phi[i + 1] - phi[i]) / dx;
  return out;
}

double calibrate_ne(const MomentField& rho0) {
  const auto totals = global_totals(rho0);
  return totals[0] / rho0.mesh().x_domain().length();
}

double potential_energy(const PhaseMesh& mesh, const ElectricField& field) {
  double e = 0.0;
  for (double Ei : field.E) e += Ei * Ei;
  return 0.5 * mesh.dx() * e;
}

}  // namespace mmdg
