#include "mmdg/cleaning.hpp"

#include <Eigen/Dense>

#include "mmdg/error.hpp"

namespace mmdg {

Cleaner::Cleaner(const PhaseMesh& mesh) {
  Eigen::Matrix3d G = Eigen::Matrix3d::Zero();
  for (int j = 0; j < mesh.nv(); ++j)
    for (int s = 0; s < mesh.np(); ++s) {
      v_.push_back(mesh.v_node(j, s));
      weight_.push_back(mesh.v_weight(s));
      const auto e = e_vec(v_.back());
      const Eigen::Vector3d ev(e[0], e[1], e[2]);
      G += weight_.back() * ev * ev.transpose();
    }
  const Eigen::FullPivLU<Eigen::Matrix3d> lu(G);
  if (!lu.isInvertible()) throw SolverError("cleaning Gram matrix is singular");
  const Eigen::Matrix3d inv = lu.inverse();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      gram_[a * 3 + b] = G(a, b);
      inverse_[a * 3 + b] = inv(a, b);
    }
}

void Cleaner::apply(std::span<double> slice) const {
  Moments m{};
  for (std::size_t a = 0; a < v_.size(); ++a) {
    const double wf = weight_[a] * slice[a];
    m[0] += wf;
    m[1] += wf * v_[a];
    m[2] += wf * 0.5 * v_[a] * v_[a];
  }
  double lam[3];
  for (int a = 0; a < 3; ++a)
    lam[a] = inverse_[a * 3] * m[0] + inverse_[a * 3 + 1] * m[1] +
             inverse_[a * 3 + 2] * m[2];
  for (std::size_t a = 0; a < v_.size(); ++a)
    slice[a] -= lam[0] + lam[1] * v_[a] + lam[2] * 0.5 * v_[a] * v_[a];
}

void Cleaner::apply(DistributionField& g, Exec exec) const {
  parallel_for(exec, static_cast<std::ptrdiff_t>(g.mesh().spatial_nodes()),
               [&](std::ptrdiff_t k) { apply(g.slice(static_cast<std::size_t>(k))); });
}

}  // namespace mmdg
