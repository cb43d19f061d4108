#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mvt {

/// Square band matrix with kl sub- and ku super-diagonals, factored in place
/// by Gaussian elimination with partial pivoting (the factor's upper band
/// grows to kl + ku).
class BandedLU {
 public:
  BandedLU(std::size_t n, std::size_t kl, std::size_t ku);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] std::size_t lower_bandwidth() const noexcept { return kl_; }
  [[nodiscard]] std::size_t upper_bandwidth() const noexcept { return ku_; }

  /// Entry (i, j) with i - kl <= j <= i + ku; writes only before factor().
  double& at(std::size_t i, std::size_t j) { return band_[i * width_ + (j + kl_ - i)]; }
  double at(std::size_t i, std::size_t j) const { return band_[i * width_ + (j + kl_ - i)]; }
  [[nodiscard]] bool in_band(std::size_t i, std::size_t j) const noexcept {
    return j + kl_ >= i && j <= i + ku_;
  }

  /// Throws SingularError when a pivot falls below min_pivot in magnitude.
  void factor(double min_pivot = 1e-12);
  /// Solves A x = b in place; requires factor().
  void solve(std::span<double> b) const;
  [[nodiscard]] bool factored() const noexcept { return factored_; }

 private:
  std::size_t n_, kl_, ku_, width_;
  std::vector<double> band_;
  std::vector<std::size_t> pivot_;
  bool factored_ = false;
};

}  // namespace mvt
