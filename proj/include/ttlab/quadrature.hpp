#pragma once

#include <functional>
#include <span>

#include "ttlab/symbol.hpp"

namespace ttlab {

struct QuadratureConfig {
  long initial_nodes = 256;
  long max_nodes = 1L << 20;
  /// Accept when doubling the node count changes the result by less than
  /// tol * max(1, |result|) in every entry.
  Real tol = 1e-13;
};

/// M-th roots of unity with equal weights 1/M.
class QuadratureGrid {
 public:
  explicit QuadratureGrid(long nodes);
  long size() const { return nodes_; }
  Real weight() const { return 1.0 / static_cast<Real>(nodes_); }
  Complex node(long j) const { return unit(kTwoPi * static_cast<Real>(j) / static_cast<Real>(nodes_)); }
  ArrayXc nodes() const;

 private:
  long nodes_;
};

/// Samples a family of functions on a batch of circle points: (points x functions).
using BlockSampler = std::function<MatrixXc(const ArrayXc& points)>;

/// Block sampler for a list of symbols.
BlockSampler sampler_of(std::vector<BoundarySymbol> symbols);

/// Adaptive trapezoid integral of a matrix-valued integrand.
///
/// `partial_sum(points)` must return the sum of the integrand over the given
/// points. Node sets are nested, so each doubling only samples the new odd
/// nodes. Throws QuadratureError if the cap is reached without convergence.
MatrixXc integrate_adaptive(const std::function<MatrixXc(const ArrayXc&)>& partial_sum,
                            const QuadratureConfig& cfg, long* nodes_used = nullptr);

/// Scalar integral of f over the circle against normalized Lebesgue measure.
Complex integrate(const std::function<ArrayXc(const ArrayXc&)>& f, const QuadratureConfig& cfg,
                  long* nodes_used = nullptr);

/// Matrix of L2 inner products: (j, k) = integral of right_k * conj(left_j) dm.
MatrixXc gram(const BlockSampler& left, const BlockSampler& right, const QuadratureConfig& cfg);

/// (f, g) = integral of f conj(g) dm.
Complex inner_product(const BoundarySymbol& f, const BoundarySymbol& g,
                      const QuadratureConfig& cfg = {});

/// c_k = integral of f conj(xi)^k dm, with an aliasing guard on the accepted grid.
Complex fourier_coefficient(const BoundarySymbol& f, int k, const QuadratureConfig& cfg = {});

/// Fourier coefficients lo..hi collected into a trigonometric polynomial.
TrigPoly fourier_coefficients(const BoundarySymbol& f, int lo, int hi, const QuadratureConfig& cfg = {});

/// Sup of |f| on the circle: grid maximum on `nodes` points refined by golden
/// section around the largest samples.
Real sup_norm(const BoundarySymbol& f, long nodes = 1L << 14);
Real sup_norm(const std::function<ArrayXc(const ArrayXc&)>& f, long nodes = 1L << 14);

}  // namespace ttlab
