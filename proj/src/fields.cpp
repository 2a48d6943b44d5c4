#include "mmdg/fields.hpp"

#include <cmath>
#include <sstream>

#include "mmdg/error.hpp"

namespace mmdg {

FluidState fluid_from_moments(const Moments& rho, double x) {
  const double n = rho[0];
  if (!(n > 0.0) || !std::isfinite(n)) {
    std::ostringstream os;
    os << "nonpositive density n = " << n << " at x = " << x;
    throw DomainError(os.str(), x);
  }
  const double u = rho[1] / n;
  const double theta = 2.0 * rho[2] / n - u * u;
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    std::ostringstream os;
    os << "nonpositive temperature theta = " << theta << " at x = " << x;
    throw DomainError(os.str(), x);
  }
  return {n, u, theta};
}

Moments moments_from_fluid(const FluidState& s) {
  return {s.n, s.n * s.u, 0.5 * s.n * (s.u * s.u + s.theta)};
}

DistributionField::DistributionField(MeshPtr mesh, double value)
    : mesh_(std::move(mesh)), values_(mesh_->size(), value) {}

DistributionField& DistributionField::axpy(double a, const DistributionField& x) {
  const auto xs = x.data();
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += a * xs[k];
  return *this;
}

DistributionField& DistributionField::operator*=(double a) {
  for (auto& v : values_) v *= a;
  return *this;
}

void DistributionField::fill(double value) {
  std::fill(values_.begin(), values_.end(), value);
}

bool DistributionField::all_finite() const {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

MomentField::MomentField(MeshPtr mesh)
    : mesh_(std::move(mesh)), values_(mesh_->spatial_nodes(), Moments{}) {}

Moments MomentField::trace(int i, double xi) const {
  const auto& basis = mesh_->basis();
  Moments out{};
  for (int r = 0; r < mesh_->np(); ++r) {
    const double l = basis.eval(r, xi);
    const auto& m = at(i, r);
    for (int c = 0; c < 3; ++c) out[c] += l * m[c];
  }
  return out;
}

Moments MomentField::left_trace(int i) const {
  const auto& basis = mesh_->basis();
  Moments out{};
  for (int r = 0; r < mesh_->np(); ++r)
    for (int c = 0; c < 3; ++c) out[c] += basis.at_left(r) * at(i, r)[c];
  return out;
}

Moments MomentField::right_trace(int i) const {
  const auto& basis = mesh_->basis();
  Moments out{};
  for (int r = 0; r < mesh_->np(); ++r)
    for (int c = 0; c < 3; ++c) out[c] += basis.at_right(r) * at(i, r)[c];
  return out;
}

MomentField& MomentField::axpy(double a, const MomentField& x) {
  for (std::size_t k = 0; k < values_.size(); ++k)
    for (int c = 0; c < 3; ++c) values_[k][c] += a * x.values_[k][c];
  return *this;
}

Moments slice_moments(const PhaseMesh& mesh, std::span<const double> slice) {
  Moments out{};
  const int np = mesh.np();
  for (int j = 0; j < mesh.nv(); ++j) {
    for (int s = 0; s < np; ++s) {
      const double v = mesh.v_node(j, s);
      const double wf = mesh.v_weight(s) * slice[j * np + s];
      out[0] += wf;
      out[1] += wf * v;
      out[2] += wf * 0.5 * v * v;
    }
  }
  return out;
}

MomentField moments_of(const DistributionField& f, Exec exec) {
  MomentField rho(f.mesh_ptr());
  const auto& mesh = f.mesh();
  parallel_for(exec, static_cast<std::ptrdiff_t>(mesh.spatial_nodes()),
               [&](std::ptrdiff_t k) {
                 rho[k] = slice_moments(mesh, f.slice(static_cast<std::size_t>(k)));
               });
  return rho;
}

Moments global_totals(const MomentField& rho) {
  const auto& mesh = rho.mesh();
  Moments out{};
  for (int i = 0; i < mesh.nx(); ++i)
    for (int r = 0; r < mesh.np(); ++r)
      for (int c = 0; c < 3; ++c) out[c] += mesh.x_weight(r) * rho.at(i, r)[c];
  return out;
}

Moments global_totals(const DistributionField& f) {
  return global_totals(moments_of(f));
}

DistributionField sample_nodal(const MeshPtr& mesh,
                               const std::function<double(double, double)>& fn) {
  DistributionField f(mesh);
  for (int i = 0; i < mesh->nx(); ++i)
    for (int r = 0; r < mesh->np(); ++r)
      for (int j = 0; j < mesh->nv(); ++j)
        for (int s = 0; s < mesh->np(); ++s)
          f(i, r, j, s) = fn(mesh->x_node(i, r), mesh->v_node(j, s));
  return f;
}

MomentField sample_moments(const MeshPtr& mesh,
                           const std::function<Moments(double)>& fn) {
  MomentField rho(mesh);
  for (int i = 0; i < mesh->nx(); ++i)
    for (int r = 0; r < mesh->np(); ++r) rho.at(i, r) = fn(mesh->x_node(i, r));
  return rho;
}

}  // namespace mmdg
