#pragma once

#include <vector>

#include "core/errors.hpp"

namespace grunwald {

/// Chebyshev angle grid of order n: the angles
///     theta_k = (2k - 1) pi / (2n),  k = 1..n,
/// whose cosines are the roots of the degree-n Chebyshev polynomial of the
/// first kind, plus the half-node shift  h = pi / (2n)  used by the shifted
/// interpolation means.  Cosines and sines of the angles are precomputed.
class ChebyshevGrid {
 public:
  explicit ChebyshevGrid(int order);

  int order() const { return n_; }
  double shift() const { return shift_; }

  /// k in [1, n].
  double angle(int k) const { return theta_[check(k)]; }
  double cos_angle(int k) const { return cos_[check(k)]; }
  double sin_angle(int k) const { return sin_[check(k)]; }

  const std::vector<double>& angles() const { return theta_; }
  const std::vector<double>& cosines() const { return cos_; }
  const std::vector<double>& sines() const { return sin_; }

  static constexpr int kMaxOrder = 4096;

 private:
  int check(int k) const {
    if (k < 1 || k > n_) {
      throw InvalidArgumentError("ChebyshevGrid: node index out of range");
    }
    return k - 1;
  }

  int n_;
  double shift_;
  std::vector<double> theta_, cos_, sin_;
};

/// Evaluation strategy for the fundamental Lagrange factor at the Chebyshev
/// nodes.  The rational-trigonometric form
///     P_k(theta) = (-1)^{k+1} cos(n theta) sin(theta_k) / (n (cos theta - cos theta_k))
/// is O(1) but ill-conditioned near the node; the O(n) product form
///     prod_{j != k} (cos theta - cos theta_j) / (cos theta_k - cos theta_j)
/// is stable everywhere and serves as the fallback inside a guard band.
enum class PkEvalMode {
  kRationalTrig,
  kProductForm,
};

/// P_k(theta): the k-th fundamental interpolation polynomial in the variable
/// cos(theta); P_k(theta_j) = delta_{kj}.  Even and 2*pi-periodic in theta.
/// kRationalTrig switches to the product form when |cos theta - cos theta_k|
/// falls below an internal guard (1e-3).
double fundamental_poly(const ChebyshevGrid& grid, int k, double theta,
                        PkEvalMode mode = PkEvalMode::kRationalTrig);

/// The symmetric pair  P_k(theta - h) + P_k(theta + h)  with h = grid.shift().
double shifted_pair(const ChebyshevGrid& grid, int k, double theta);

/// Fill out[k-1] = P_k(theta) for k = 1..n in one pass (shared cos/cos(n t)).
void fundamental_row(const ChebyshevGrid& grid, double theta, double* out);

/// Fill out[k-1] = P_k(theta - h) + P_k(theta + h) for k = 1..n.
void shifted_pair_row(const ChebyshevGrid& grid, double theta, double* out);

}  // namespace grunwald
