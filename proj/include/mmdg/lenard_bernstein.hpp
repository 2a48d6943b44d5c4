#pragma once

#include <span>
#include <vector>

#include "mmdg/banded.hpp"
#include "mmdg/fields.hpp"

namespace mmdg {

/// Value and v-derivative of the recovery polynomial at an interface.
struct RecoveredTrace {
  double value = 0.0;
  double deriv = 0.0;
};

/// Recovery of the degree-(2p+1) polynomial that shares the L2 projections
/// onto P^p of two neighbouring velocity elements. Both results are fixed
/// linear stencils over the 2(p+1) nodal values (left element first).
class RecoveryStencil {
 public:
  RecoveryStencil(const LagrangeBasis& basis, double dv_left, double dv_right);

  std::span<const double> value() const noexcept { return value_; }
  std::span<const double> deriv() const noexcept { return deriv_; }

  RecoveredTrace apply(std::span<const double> left,
                       std::span<const double> right) const;

 private:
  std::vector<double> value_, deriv_;
};

/// Convenience wrapper: recovered value and derivative at the shared face.
RecoveredTrace recovery_interface(const LagrangeBasis& basis,
                                  std::span<const double> left,
                                  std::span<const double> right, double dv_left,
                                  double dv_right);

/// Mass-inverted Lenard-Bernstein operator on one velocity slice:
///   (L f)_{js} = B^lb(f; u, theta; l_s) / (dv w_s / 2),
/// so that the collision term of the semi-discrete system is -nu L f.
/// Drift faces are upwinded with w = u - v; diffusion faces use the
/// recovery stencils. All terms vanish on the two velocity boundary faces.
class LBOperator {
 public:
  explicit LBOperator(const PhaseMesh& mesh);

  /// Band half-width 2(p+1)-1.
  int bandwidth() const noexcept { return 2 * np_ - 1; }
  int size() const noexcept { return nv_ * np_; }

  /// Writes L[u, theta] into a (size x size) band matrix.
  void assemble(double u, double theta, BandedMatrix& L) const;
  /// out = L[u, theta] f for one slice.
  void apply(double u, double theta, std::span<const double> f,
             std::span<double> out) const;

 private:
  template <class Sink>
  void build(double u, double theta, Sink&& add) const;

  int nv_, np_;
  double dv_;
  std::vector<double> v_nodes_;  // slice-ordered velocity nodes
  std::vector<double> face_v_;   // interior faces v_{j+1/2}, j = 0..nv-2
  LagrangeBasis basis_;
  RecoveryStencil stencil_;
};

/// Residual of the LB form for every spatial node, with (u, theta) taken
/// from the nodal moments rho.
void lb_form(const LBOperator& op, const DistributionField& f,
             const MomentField& rho, DistributionField& out,
             Exec exec = Exec::parallel);

/// Solves (I + lambda L[rho]) f_new = f_star at every spatial node, in place.
void implicit_lb_solve(const LBOperator& op, DistributionField& f,
                       const MomentField& rho, double lambda,
                       Exec exec = Exec::parallel);

}  // namespace mmdg
