#pragma once

#include <array>
#include <span>
#include <vector>

#include "mmdg/fields.hpp"

namespace mmdg {

/// Minimal L2 correction enforcing <e g> = 0 on one velocity slice.
///
/// Since e = (1, v, v^2/2) lies in the DG velocity space for p >= 2, the
/// constrained minimizer is g - sum_k lambda_k e_k with G lambda = <e g> and
/// G = <e e^T>. G depends only on the mesh and is inverted once.
class Cleaner {
 public:
  explicit Cleaner(const PhaseMesh& mesh);

  void apply(std::span<double> slice) const;
  /// Every spatial node of g.
  void apply(DistributionField& g, Exec exec = Exec::parallel) const;

  const std::array<double, 9>& gram() const noexcept { return gram_; }

 private:
  std::vector<double> v_, weight_;  // slice-ordered nodes and GL weights
  std::array<double, 9> gram_{}, inverse_{};
};

}  // namespace mmdg
