#pragma once

#include <array>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "mmdg/mesh.hpp"
#include "mmdg/parallel.hpp"

namespace mmdg {

/// Number, momentum and energy densities (rho0, rho1, rho2) = <e f>,
/// e = (1, v, v^2/2).
using Moments = std::array<double, 3>;

/// Fluid variables; rho = (n, n u, n (u^2 + theta) / 2).
struct FluidState {
  double n = 0.0;
  double u = 0.0;
  double theta = 0.0;
};

/// Inverse of the fluid bijection. Throws DomainError (tagged with x) when
/// the density or temperature is not positive; no clipping is applied.
FluidState fluid_from_moments(const Moments& rho, double x = 0.0);
Moments moments_from_fluid(const FluidState& s);

/// e(v) = (1, v, v^2/2).
inline Moments e_vec(double v) { return {1.0, v, 0.5 * v * v}; }

using MeshPtr = std::shared_ptr<const PhaseMesh>;

/// Nodal phase-space DG function (houses f_h or g_h).
class DistributionField {
 public:
  DistributionField() = default;
  explicit DistributionField(MeshPtr mesh, double value = 0.0);

  const PhaseMesh& mesh() const noexcept { return *mesh_; }
  const MeshPtr& mesh_ptr() const noexcept { return mesh_; }

  std::span<double> data() noexcept { return values_; }
  std::span<const double> data() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  double& operator()(int i, int r, int j, int s) noexcept {
    return values_[mesh_->index(i, r, j, s)];
  }
  double operator()(int i, int r, int j, int s) const noexcept {
    return values_[mesh_->index(i, r, j, s)];
  }

  /// Contiguous velocity slice at spatial node (i, r).
  std::span<double> slice(int i, int r) noexcept {
    return {values_.data() + mesh_->node(i, r) * mesh_->slice_size(),
            mesh_->slice_size()};
  }
  std::span<const double> slice(int i, int r) const noexcept {
    return {values_.data() + mesh_->node(i, r) * mesh_->slice_size(),
            mesh_->slice_size()};
  }
  std::span<const double> slice(std::size_t node) const noexcept {
    return {values_.data() + node * mesh_->slice_size(), mesh_->slice_size()};
  }
  std::span<double> slice(std::size_t node) noexcept {
    return {values_.data() + node * mesh_->slice_size(), mesh_->slice_size()};
  }

  /// this += a * x
  DistributionField& axpy(double a, const DistributionField& x);
  DistributionField& operator*=(double a);
  void fill(double value);

  bool all_finite() const;

 private:
  MeshPtr mesh_;
  std::vector<double> values_;
};

/// Nodal macro moments per spatial node (i, r) (houses rho_{f,h}).
class MomentField {
 public:
  MomentField() = default;
  explicit MomentField(MeshPtr mesh);

  const PhaseMesh& mesh() const noexcept { return *mesh_; }
  const MeshPtr& mesh_ptr() const noexcept { return mesh_; }

  Moments& at(int i, int r) noexcept { return values_[mesh_->node(i, r)]; }
  const Moments& at(int i, int r) const noexcept {
    return values_[mesh_->node(i, r)];
  }
  Moments& operator[](std::size_t node) noexcept { return values_[node]; }
  const Moments& operator[](std::size_t node) const noexcept {
    return values_[node];
  }
  std::size_t size() const noexcept { return values_.size(); }

  /// Interpolated value rho_h(xi) on element i, xi in [-1, 1].
  Moments trace(int i, double xi) const;
  Moments left_trace(int i) const;   // xi = -1
  Moments right_trace(int i) const;  // xi = +1

  MomentField& axpy(double a, const MomentField& x);

 private:
  MeshPtr mesh_;
  std::vector<Moments> values_;
};

/// Per-node velocity moments of one slice, exact for p >= 2.
Moments slice_moments(const PhaseMesh& mesh, std::span<const double> slice);

/// (rho)_r^i = sum_j int_{I_j} e f_r^{ij} dv at every spatial node.
MomentField moments_of(const DistributionField& f, Exec exec = Exec::parallel);

/// M = sum_i sum_r dx w_r / 2 * rho_r^i.
Moments global_totals(const MomentField& rho);
Moments global_totals(const DistributionField& f);

/// Samples fn(x, v) at every phase-space node.
DistributionField sample_nodal(const MeshPtr& mesh,
                               const std::function<double(double, double)>& fn);
MomentField sample_moments(const MeshPtr& mesh,
                           const std::function<Moments(double)>& fn);

}  // namespace mmdg
