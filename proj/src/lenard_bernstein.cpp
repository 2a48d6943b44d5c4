#include "mmdg/lenard_bernstein.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "mmdg/error.hpp"

namespace mmdg {

RecoveryStencil::RecoveryStencil(const LagrangeBasis& basis, double dv_left,
                                 double dv_right) {
  const int np = basis.size();
  const int m = 2 * np;
  const double h = 0.5 * (dv_left + dv_right);
  const GLRule rule = gl_rule(m);

  // Rows: projection conditions against l_s on the left then right element,
  // scaled by 2/dv of that element. Unknowns: coefficients of t^k with
  // t = (v - v_face)/h.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
  for (int side = 0; side < 2; ++side) {
    const double width = side == 0 ? dv_left : dv_right;
    for (int s = 0; s < np; ++s) {
      for (int g = 0; g < m; ++g) {
        const double xi = rule.nodes[g];
        const double t = side == 0 ? -width * (1.0 - xi) / (2.0 * h)
                                   : width * (1.0 + xi) / (2.0 * h);
        const double wl = rule.weights[g] * basis.eval(s, xi);
        double tk = 1.0;
        for (int k = 0; k < m; ++k) {
          A(side * np + s, k) += wl * tk;
          tk *= t;
        }
      }
    }
  }
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  if (!lu.isInvertible()) throw SolverError("recovery system is singular");
  const Eigen::MatrixXd inv = lu.inverse();

  value_.resize(m);
  deriv_.resize(m);
  for (int c = 0; c < m; ++c) {
    const double w = basis.weights()[c % np];
    value_[c] = inv(0, c) * w;
    deriv_[c] = inv(1, c) * w / h;
  }
}

RecoveredTrace RecoveryStencil::apply(std::span<const double> left,
                                      std::span<const double> right) const {
  const std::size_t np = left.size();
  RecoveredTrace out;
  for (std::size_t k = 0; k < np; ++k) {
    out.value += value_[k] * left[k] + value_[np + k] * right[k];
    out.deriv += deriv_[k] * left[k] + deriv_[np + k] * right[k];
  }
  return out;
}

RecoveredTrace recovery_interface(const LagrangeBasis& basis,
                                  std::span<const double> left,
                                  std::span<const double> right, double dv_left,
                                  double dv_right) {
  return RecoveryStencil(basis, dv_left, dv_right).apply(left, right);
}

LBOperator::LBOperator(const PhaseMesh& mesh)
    : nv_(mesh.nv()),
      np_(mesh.np()),
      dv_(mesh.dv()),
      basis_(mesh.basis()),
      stencil_(mesh.basis(), mesh.dv(), mesh.dv()) {
  v_nodes_.resize(mesh.slice_size());
  for (int j = 0; j < nv_; ++j)
    for (int s = 0; s < np_; ++s) v_nodes_[j * np_ + s] = mesh.v_node(j, s);
  for (int j = 0; j + 1 < nv_; ++j) face_v_.push_back(mesh.v_edge(j + 1));
}

// Emits every nonzero contribution add(row, col, coefficient) of L.
template <class Sink>
void LBOperator::build(double u, double theta, Sink&& add) const {
  const int np = np_;
  const auto w = basis_.weights();
  const double two_dv = 2.0 / dv_;

  for (int j = 0; j < nv_; ++j) {
    for (int s = 0; s < np; ++s) {
      const double inv_mass = 1.0 / (0.5 * dv_ * w[s]);
      const int row = j * np + s;
      for (int sp = 0; sp < np; ++sp) {
        const int col = j * np + sp;
        const double drift = -w[sp] * (u - v_nodes_[col]) * basis_.diff(sp, s);
        const double diff = -theta * two_dv * w[sp] * basis_.diff2(sp, s);
        add(row, col, (drift + diff) * inv_mass);
      }
    }
  }

  const auto val = stencil_.value();
  const auto der = stencil_.deriv();
  for (int j = 0; j + 1 < nv_; ++j) {
    const double wf = u - face_v_[j];
    const double wp = std::max(wf, 0.0), wm = std::min(wf, 0.0);
    for (int s = 0; s < np; ++s) {
      // row in the element below the face (test function at xi = +1)
      {
        const int row = j * np + s;
        const double inv_mass = 1.0 / (0.5 * dv_ * w[s]);
        const double lt = basis_.at_right(s);
        const double dlt = basis_.deriv_right(s) * two_dv;
        for (int k = 0; k < np; ++k) {
          const double cl = wp * basis_.at_right(k) * lt -
                            theta * (der[k] * lt - val[k] * dlt);
          const double cr = wm * basis_.at_left(k) * lt -
                            theta * (der[np + k] * lt - val[np + k] * dlt);
          add(row, j * np + k, cl * inv_mass);
          add(row, (j + 1) * np + k, cr * inv_mass);
        }
      }
      // row in the element above the face (test function at xi = -1)
      {
        const int row = (j + 1) * np + s;
        const double inv_mass = 1.0 / (0.5 * dv_ * w[s]);
        const double lt = basis_.at_left(s);
        const double dlt = basis_.deriv_left(s) * two_dv;
        for (int k = 0; k < np; ++k) {
          const double cl = -wp * basis_.at_right(k) * lt +
                            theta * (der[k] * lt - val[k] * dlt);
          const double cr = -wm * basis_.at_left(k) * lt +
                            theta * (der[np + k] * lt - val[np + k] * dlt);
          add(row, j * np + k, cl * inv_mass);
          add(row, (j + 1) * np + k, cr * inv_mass);
        }
      }
    }
  }
}

void LBOperator::assemble(double u, double theta, BandedMatrix& L) const {
  const int n = size();
  if (L.size() != n || L.lower() != bandwidth() || L.upper() != bandwidth())
    L.resize(n, bandwidth(), bandwidth());
  else
    L.set_zero();
  build(u, theta, [&](int r, int c, double a) { L(r, c) += a; });
}

void LBOperator::apply(double u, double theta, std::span<const double> f,
                       std::span<double> out) const {
  std::fill(out.begin(), out.end(), 0.0);
  build(u, theta, [&](int r, int c, double a) { out[r] += a * f[c]; });
}

void lb_form(const LBOperator& op, const DistributionField& f,
             const MomentField& rho, DistributionField& out, Exec exec) {
  const auto& mesh = f.mesh();
  parallel_for(exec, static_cast<std::ptrdiff_t>(mesh.spatial_nodes()),
               [&](std::ptrdiff_t k) {
                 const auto node = static_cast<std::size_t>(k);
                 const auto s = fluid_from_moments(
                     rho[node], mesh.x_node(static_cast<int>(k / mesh.np()),
                                            static_cast<int>(k % mesh.np())));
                 op.apply(s.u, s.theta, f.slice(node), out.slice(node));
               });
}

void implicit_lb_solve(const LBOperator& op, DistributionField& f,
                       const MomentField& rho, double lambda, Exec exec) {
  if (lambda == 0.0) return;
  if (lambda < 0.0) throw SolverError("implicit LB solve needs lambda >= 0");
  const auto& mesh = f.mesh();
  parallel_for(exec, static_cast<std::ptrdiff_t>(mesh.spatial_nodes()),
               [&](std::ptrdiff_t k) {
                 const auto node = static_cast<std::size_t>(k);
                 const auto s = fluid_from_moments(
                     rho[node], mesh.x_node(static_cast<int>(k / mesh.np()),
                                            static_cast<int>(k % mesh.np())));
                 BandedMatrix A;
                 op.assemble(s.u, s.theta, A);
                 A.scale(lambda);
                 A.add_identity(1.0);
                 A.factor();
                 auto x = f.slice(node);
                 const std::vector<double> b(x.begin(), x.end());
                 A.solve(x);
                 // one refinement sweep; the moment invariance of the solve
                 // is only as good as its residual
                 std::vector<double> r(b.size());
                 op.apply(s.u, s.theta, x, r);
                 for (std::size_t m = 0; m < r.size(); ++m)
                   r[m] = b[m] - x[m] - lambda * r[m];
                 A.solve(r);
                 for (std::size_t m = 0; m < r.size(); ++m) x[m] += r[m];
               });
}

}  // namespace mmdg
