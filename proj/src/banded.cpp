#include "mvt/banded.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mvt/errors.hpp"

namespace mvt {

BandedLU::BandedLU(std::size_t n, std::size_t kl, std::size_t ku)
    : n_(n), kl_(kl), ku_(ku), width_(2 * kl + ku + 1), band_(n * (2 * kl + ku + 1), 0.0), pivot_(n, 0) {}

void BandedLU::factor(double min_pivot) {
  if (factored_) throw std::logic_error("BandedLU already factored");
  const std::size_t reach = kl_ + ku_;  // upper band of U after pivoting
  for (std::size_t k = 0; k < n_; ++k) {
    const std::size_t last_row = std::min(n_ - 1, k + kl_);
    const std::size_t last_col = std::min(n_ - 1, k + reach);
    std::size_t p = k;
    double best = std::abs(at(k, k));
    for (std::size_t i = k + 1; i <= last_row; ++i)
      if (std::abs(at(i, k)) > best) {
        best = std::abs(at(i, k));
        p = i;
      }
    if (!(best >= min_pivot)) {
      std::ostringstream msg;
      msg << "pivot " << best << " below " << min_pivot << " at row " << k << " of " << n_;
      throw SingularError(msg.str());
    }
    pivot_[k] = p;
    if (p != k)
      for (std::size_t j = k; j <= last_col; ++j) std::swap(at(k, j), at(p, j));
    const double inv = 1.0 / at(k, k);
    for (std::size_t i = k + 1; i <= last_row; ++i) {
      const double l = at(i, k) * inv;
      at(i, k) = l;
      if (l == 0.0) continue;
      for (std::size_t j = k + 1; j <= last_col; ++j) at(i, j) -= l * at(k, j);
    }
  }
  factored_ = true;
}

void BandedLU::solve(std::span<double> b) const {
  if (!factored_) throw std::logic_error("BandedLU::solve before factor");
  if (b.size() != n_) throw DimensionError("BandedLU::solve: right-hand side has wrong size");
  for (std::size_t k = 0; k < n_; ++k) {
    if (pivot_[k] != k) std::swap(b[k], b[pivot_[k]]);
    const std::size_t last_row = std::min(n_ - 1, k + kl_);
    for (std::size_t i = k + 1; i <= last_row; ++i) b[i] -= at(i, k) * b[k];
  }
  const std::size_t reach = kl_ + ku_;
  for (std::size_t k = n_; k-- > 0;) {
    const std::size_t last_col = std::min(n_ - 1, k + reach);
    double s = b[k];
    for (std::size_t j = k + 1; j <= last_col; ++j) s -= at(k, j) * b[j];
    b[k] = s / at(k, k);
  }
}

}  // namespace mvt
