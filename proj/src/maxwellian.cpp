#include "mmdg/maxwellian.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mmdg/error.hpp"

namespace mmdg {

namespace {

void require_temperature(const FluidState& s) {
  if (!(s.theta > 0.0)) {
    std::ostringstream os;
    os << "Maxwellian with nonpositive temperature " << s.theta;
    throw DomainError(os.str());
  }
}

// n/2 * int_{za}^{zb} 2/sqrt(pi) exp(-z^2) dz, choosing erf or erfc so that
// tail intervals keep their relative accuracy.
double normalized_mass(double za, double zb) {
  if (za >= 0.0) return 0.5 * (std::erfc(za) - std::erfc(zb));
  if (zb <= 0.0) return 0.5 * (std::erfc(-zb) - std::erfc(-za));
  return 0.5 * (std::erf(zb) - std::erf(za));
}

}  // namespace

double eval_maxwellian(const FluidState& s, double v) {
  require_temperature(s);
  const double d = v - s.u;
  return s.n / std::sqrt(2.0 * std::numbers::pi * s.theta) *
         std::exp(-d * d / (2.0 * s.theta));
}

void gaussian_moments(double a, double b, const FluidState& s,
                      std::span<double> out) {
  require_temperature(s);
  if (out.empty()) return;
  const double scale = std::sqrt(2.0 * s.theta);
  const double za = std::isinf(a) ? a : (a - s.u) / scale;
  const double zb = std::isinf(b) ? b : (b - s.u) / scale;
  out[0] = s.n * normalized_mass(za, zb);

  const double ma = std::isinf(a) ? 0.0 : eval_maxwellian(s, a);
  const double mb = std::isinf(b) ? 0.0 : eval_maxwellian(s, b);
  double pa = 1.0, pb = 1.0;  // a^m, b^m
  for (std::size_t m = 0; m + 1 < out.size(); ++m) {
    const double bracket = (std::isinf(b) ? 0.0 : pb * mb) -
                           (std::isinf(a) ? 0.0 : pa * ma);
    const double lower = m > 0 ? m * out[m - 1] : 0.0;
    out[m + 1] = s.u * out[m] + s.theta * (lower - bracket);
    if (!std::isinf(a)) pa *= a;
    if (!std::isinf(b)) pb *= b;
  }
}

double gaussian_moment(int m, double a, double b, const FluidState& s) {
  if (m < 0) throw std::invalid_argument("gaussian_moment: negative order");
  std::vector<double> buf(m + 1);
  gaussian_moments(a, b, s, buf);
  return buf[m];
}

Moments abs_v_moments(const FluidState& s) {
  require_temperature(s);
  const double n = s.n, u = s.u, th = s.theta;
  const double root = std::sqrt(2.0 * std::numbers::pi * th);
  const double pre = n / root;
  const double ex = std::exp(-u * u / (2.0 * th));
  const double er = std::erf(u / std::sqrt(2.0 * th));
  return {pre * (2.0 * th * ex + u * root * er),
          pre * (2.0 * u * th * ex + (u * u + th) * root * er),
          pre * (2.0 * th * (th + 0.5 * u * u) * ex +
                 0.5 * (u * u + 3.0 * th) * u * root * er)};
}

std::vector<FluidState> maxwellian_nodal_field(const MomentField& rho) {
  const auto& mesh = rho.mesh();
  std::vector<FluidState> out(mesh.spatial_nodes());
  for (int i = 0; i < mesh.nx(); ++i)
    for (int r = 0; r < mesh.np(); ++r)
      out[mesh.node(i, r)] = fluid_from_moments(rho.at(i, r), mesh.x_node(i, r));
  return out;
}

void maxwellian_cell_integrals(const PhaseMesh& mesh, const FluidState& s,
                               int j, const MaxwellianQuadrature& quad,
                               std::span<double> i0, std::span<double> i1,
                               std::span<double> id) {
  const auto& basis = mesh.basis();
  const int np = mesh.np();

  if (quad.inconsistent) {
    for (int s_ = 0; s_ < np; ++s_) {
      i0[s_] = 0.0;
      i1[s_] = 0.0;
      id[s_] = 0.0;
    }
    for (int r = 0; r < np; ++r) {
      const double v = mesh.v_node(j, r);
      const double wm = mesh.v_weight(r) * eval_maxwellian(s, v);
      i0[r] += wm;
      i1[r] += wm * v;
      for (int s_ = 0; s_ < np; ++s_)
        id[s_] += wm * basis.diff(r, s_) * 2.0 / mesh.dv();
    }
    return;
  }

  // Work in the element coordinate xi, v = vc + h xi. The Maxwellian stays a
  // Maxwellian there: density n, mean (u - vc)/h, temperature theta/h^2.
  const double h = 0.5 * mesh.dv();
  const double vc = mesh.v_edge(j) + h;
  const FluidState local{s.n, (s.u - vc) / h, s.theta / (h * h)};
  const double a = (quad.extended_cells && j == 0) ? -kInf : -1.0;
  const double b = (quad.extended_cells && j == mesh.nv() - 1) ? kInf : 1.0;

  double J[16];
  gaussian_moments(a, b, local, std::span<double>(J, np + 1));

  for (int s_ = 0; s_ < np; ++s_) {
    const auto c = basis.monomial(s_);
    double m0 = 0.0, m1 = 0.0, md = 0.0;
    for (int m = 0; m < np; ++m) {
      m0 += c[m] * J[m];
      m1 += c[m] * J[m + 1];
      if (m > 0) md += m * c[m] * J[m - 1];
    }
    i0[s_] = m0;
    i1[s_] = vc * m0 + h * m1;
    id[s_] = md / h;
  }
}

}  // namespace mmdg
