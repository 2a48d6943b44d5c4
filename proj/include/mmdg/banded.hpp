#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mmdg {

/// Square band matrix with kl sub- and ku super-diagonals, LU-factorized in
/// place with partial pivoting (row interchanges widen the upper band to
/// kl + ku, so that much extra storage is kept).
class BandedMatrix {
 public:
  BandedMatrix() = default;
  BandedMatrix(int n, int kl, int ku);

  void resize(int n, int kl, int ku);
  void set_zero();

  int size() const noexcept { return n_; }
  int lower() const noexcept { return kl_; }
  int upper() const noexcept { return ku_; }

  /// Entry (i, j); requires -kl <= j - i <= ku before factorization.
  double& operator()(int i, int j) noexcept { return ab_[idx(i, j)]; }
  double operator()(int i, int j) const noexcept { return ab_[idx(i, j)]; }
  bool in_band(int i, int j) const noexcept {
    return j - i <= ku_ && i - j <= kl_;
  }

  /// y = A x (only valid before factor()).
  void multiply(std::span<const double> x, std::span<double> y) const;

  /// Adds s to every diagonal entry.
  void add_identity(double s);
  void scale(double s);

  /// LU with partial pivoting. Throws SolverError on an exactly zero pivot.
  void factor();
  /// Solves A x = b in place using the factorization.
  void solve(std::span<double> b) const;

 private:
  std::size_t idx(int i, int j) const noexcept {
    // column-major band storage, row offset kl for the fill-in
    return static_cast<std::size_t>(j) * ld_ + (kl_ + ku_ + i - j);
  }

  int n_ = 0, kl_ = 0, ku_ = 0, ld_ = 0;
  std::vector<double> ab_;
  std::vector<int> piv_;
  bool factored_ = false;
};

}  // namespace mmdg
