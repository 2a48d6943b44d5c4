#pragma once

#include <cstddef>

#include "mmdg/quadrature.hpp"

namespace mmdg {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const noexcept { return hi - lo; }
};

/// Uniform tensor-product phase-space mesh I_ij = I_i^x x I_j^v with the
/// (p+1)-point Gauss-Legendre node set of each element.
///
/// Invariant: v = 0 lies on a velocity-element interface, so the upwind
/// splittings (v +- |v|)/2 are polynomial inside every velocity element.
///
/// Degrees of freedom are stored as (i, r, j, s): spatial element, spatial
/// node, velocity element, velocity node, velocity fastest. A fixed spatial
/// node (i, r) therefore owns one contiguous velocity slice of length
/// nv * (p+1).
class PhaseMesh {
 public:
  PhaseMesh(Interval x, int nx, Interval v, int nv, int degree);

  int nx() const noexcept { return nx_; }
  int nv() const noexcept { return nv_; }
  int degree() const noexcept { return basis_.degree(); }
  /// Nodes per element and direction, p + 1.
  int np() const noexcept { return basis_.size(); }

  Interval x_domain() const noexcept { return x_; }
  Interval v_domain() const noexcept { return v_; }
  double dx() const noexcept { return dx_; }
  double dv() const noexcept { return dv_; }

  double x_edge(int i) const noexcept { return x_.lo + i * dx_; }
  double v_edge(int j) const noexcept { return v_.lo + j * dv_; }
  double x_node(int i, int r) const noexcept {
    return x_edge(i) + 0.5 * dx_ * (1.0 + basis_.nodes()[r]);
  }
  double v_node(int j, int s) const noexcept {
    return v_edge(j) + 0.5 * dv_ * (1.0 + basis_.nodes()[s]);
  }
  /// Index of the velocity interface at v = 0.
  int zero_interface() const noexcept { return zero_interface_; }

  const LagrangeBasis& basis() const noexcept { return basis_; }

  /// Number of spatial nodes, nx * (p+1).
  std::size_t spatial_nodes() const noexcept {
    return static_cast<std::size_t>(nx_) * np();
  }
  /// Length of one velocity slice, nv * (p+1).
  std::size_t slice_size() const noexcept {
    return static_cast<std::size_t>(nv_) * np();
  }
  std::size_t size() const noexcept { return spatial_nodes() * slice_size(); }

  std::size_t node(int i, int r) const noexcept {
    return static_cast<std::size_t>(i) * np() + r;
  }
  std::size_t index(int i, int r, int j, int s) const noexcept {
    return node(i, r) * slice_size() + static_cast<std::size_t>(j) * np() + s;
  }

  /// Physical quadrature weight of spatial node (i, r): dx * w_r / 2.
  double x_weight(int r) const noexcept {
    return 0.5 * dx_ * basis_.weights()[r];
  }
  double v_weight(int s) const noexcept {
    return 0.5 * dv_ * basis_.weights()[s];
  }

 private:
  Interval x_, v_;
  int nx_, nv_;
  double dx_, dv_;
  int zero_interface_;
  LagrangeBasis basis_;
};

/// Builds a validated uniform mesh; throws ConfigError when bounds or counts
/// are invalid or v = 0 is not an interface.
PhaseMesh build_mesh(double x_min, double x_max, int nx, double v_min,
                     double v_max, int nv, int degree);

}  // namespace mmdg
