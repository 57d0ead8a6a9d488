#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hartreewave {

/// Uniform periodic grid on [-L/2, L/2)^dim with the same extent and sample
/// count per axis. Sample j along an axis sits at x_j = -L/2 + j*L/N; the
/// discrete frequency of signed index k is xi_k = 2*pi*k/L with
/// k in {-N/2, ..., N/2-1}.
class Grid {
 public:
  Grid(int dim, int points, double length)
      : dim_(dim), points_(points), length_(length) {
    if (dim < 1 || dim > 3)
      throw std::invalid_argument("grid dimension must be 1, 2 or 3");
    if (points < 8 || (points & (points - 1)) != 0)
      throw std::invalid_argument("grid points per axis must be a power of two >= 8");
    if (!(length > 0.0))
      throw std::invalid_argument("grid length must be positive");
  }

  int dim() const { return dim_; }
  int points() const { return points_; }
  double length() const { return length_; }
  double spacing() const { return length_ / points_; }

  std::size_t size() const {
    std::size_t s = 1;
    for (int d = 0; d < dim_; ++d) s *= static_cast<std::size_t>(points_);
    return s;
  }

  /// Cell volume h^dim of the Riemann sum.
  double cell_volume() const { return std::pow(spacing(), dim_); }

  /// Signed mode index for storage index j in [0, N).
  int signed_index(int j) const { return j < points_ / 2 ? j : j - points_; }

  /// Physical coordinate of sample j along one axis.
  double coordinate(int j) const { return -0.5 * length_ + j * spacing(); }

  /// Angular frequency of signed index k.
  double frequency(int k) const {
    return 2.0 * std::numbers::pi * k / length_;
  }

  /// Decomposes a flat row-major storage index into per-axis indices
  /// (axis 0 slowest, last axis contiguous).
  std::array<int, 3> unflatten(std::size_t flat) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int d = dim_ - 1; d >= 0; --d) {
      idx[d] = static_cast<int>(flat % points_);
      flat /= points_;
    }
    return idx;
  }

  /// Per-axis frequencies of the mode at flat spectral index `flat`.
  std::array<double, 3> mode_frequencies(std::size_t flat) const {
    auto idx = unflatten(flat);
    std::array<double, 3> xi{0.0, 0.0, 0.0};
    for (int d = 0; d < dim_; ++d) xi[d] = frequency(signed_index(idx[d]));
    return xi;
  }

  /// Euclidean frequency magnitude of the mode at flat spectral index.
  double mode_radius(std::size_t flat) const {
    auto xi = mode_frequencies(flat);
    double s = 0.0;
    for (int d = 0; d < dim_; ++d) s += xi[d] * xi[d];
    return std::sqrt(s);
  }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_ && a.length_ == b.length_;
  }

 private:
  int dim_;
  int points_;
  double length_;
};

}  // namespace hartreewave
