#include "mmdg/banded.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mmdg/error.hpp"

namespace mmdg {

BandedMatrix::BandedMatrix(int n, int kl, int ku) { resize(n, kl, ku); }

void BandedMatrix::resize(int n, int kl, int ku) {
  n_ = n;
  kl_ = kl;
  ku_ = ku;
  ld_ = 2 * kl + ku + 1;
  ab_.assign(static_cast<std::size_t>(ld_) * n, 0.0);
  piv_.assign(n, 0);
  factored_ = false;
}

void BandedMatrix::set_zero() {
  std::fill(ab_.begin(), ab_.end(), 0.0);
  factored_ = false;
}

void BandedMatrix::multiply(std::span<const double> x,
                            std::span<double> y) const {
  for (int i = 0; i < n_; ++i) {
    double acc = 0.0;
    const int j0 = std::max(0, i - kl_), j1 = std::min(n_ - 1, i + ku_);
    for (int j = j0; j <= j1; ++j) acc += (*this)(i, j) * x[j];
    y[i] = acc;
  }
}

void BandedMatrix::add_identity(double s) {
  for (int i = 0; i < n_; ++i) (*this)(i, i) += s;
}

void BandedMatrix::scale(double s) {
  for (auto& a : ab_) a *= s;
}

// Unblocked band LU in the style of LAPACK dgbtf2.
void BandedMatrix::factor() {
  const int ku_fill = kl_ + ku_;
  for (int k = 0; k < n_; ++k) {
    const int last = std::min(n_ - 1, k + kl_);
    int p = k;
    double big = std::abs((*this)(k, k));
    for (int i = k + 1; i <= last; ++i) {
      const double a = std::abs((*this)(i, k));
      if (a > big) {
        big = a;
        p = i;
      }
    }
    piv_[k] = p;
    if (big == 0.0) {
      throw SolverError("banded LU: zero pivot in column " + std::to_string(k));
    }
    const int jlast = std::min(n_ - 1, k + ku_fill);
    if (p != k) {
      for (int j = k; j <= jlast; ++j) std::swap((*this)(k, j), (*this)(p, j));
    }
    const double inv = 1.0 / (*this)(k, k);
    for (int i = k + 1; i <= last; ++i) {
      const double l = (*this)(i, k) * inv;
      (*this)(i, k) = l;
      if (l == 0.0) continue;
      for (int j = k + 1; j <= jlast; ++j) (*this)(i, j) -= l * (*this)(k, j);
    }
  }
  factored_ = true;
}

void BandedMatrix::solve(std::span<double> b) const {
  const int ku_fill = kl_ + ku_;
  for (int k = 0; k < n_; ++k) {
    if (piv_[k] != k) std::swap(b[k], b[piv_[k]]);
    const int last = std::min(n_ - 1, k + kl_);
    for (int i = k + 1; i <= last; ++i) b[i] -= (*this)(i, k) * b[k];
  }
  for (int k = n_ - 1; k >= 0; --k) {
    double acc = b[k];
    const int jlast = std::min(n_ - 1, k + ku_fill);
    for (int j = k + 1; j <= jlast; ++j) acc -= (*this)(k, j) * b[j];
    b[k] = acc / (*this)(k, k);
  }
}

}  // namespace mmdg
