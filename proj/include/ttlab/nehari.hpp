#pragma once

#include <cstdint>
#include <vector>

#include "ttlab/truncated_ops.hpp"

namespace ttlab {

/// Orthonormal basis of K_inner intersected with zH^2, the finite-dimensional
/// predual of L-infinity modulo F_inner = conj(inner H^2) + H^2.
class DualBasis {
 public:
  explicit DualBasis(BlaschkeProduct inner, QuadratureConfig quadrature = {});

  int dim() const { return static_cast<int>(subspace_.coords.cols()); }
  const ModelSpaceBasis& model_basis() const { return basis_; }
  /// d x (d-1) coordinates in the Takenaka-Malmquist basis of K_inner.
  const MatrixXc& coords() const { return subspace_.coords; }
  MatrixXc sample(const ArrayXc& points) const { return subspace_.sample(basis_, points); }
  /// sum_i c_i g_i as a symbol.
  BoundarySymbol realize(const VectorXc& coeffs) const { return basis_.combination(subspace_.coords * coeffs); }

 private:
  ModelSpaceBasis basis_;
  OriginVanishingSubspace subspace_;
};

struct DualConfig {
  /// Quadrature nodes for the L1 norm inside the iteration.
  long l1_nodes = 1L << 12;
  /// Finer grid for the reported L1 norm of the final optimizer.
  long certify_nodes = 1L << 15;
  int max_iterations = 300;
  /// Number of deterministic random starts added to the two structured ones.
  int random_starts = 8;
  std::uint64_t seed = 20240601;
};

/// Distance report; hankel_norm and ratio are filled by nehari_gap only.
struct DistanceReport {
  BlaschkeProduct inner{std::vector<Complex>{0.0}};
  /// |integral of phi h| / ||h||_1 for the best h found, with ||h||_1 on the
  /// certify grid: a lower bound on dist(phi, F_inner) up to quadrature.
  Real dual_value = 0;
  /// Coordinates of the optimizer h* in the dual basis, normalized to ||h*||_1 = 1.
  VectorXc optimizer;
  int starts = 0;
  int iterations = 0;
  Real hankel_norm = 0;
  Real ratio = 0;
};

/// sup{|integral of phi h dm| : h in K_inner and zH^2, ||h||_1 <= 1}.
///
/// Solved as the convex problem min ||h_c||_1 subject to integral phi h_c = 1 by
/// iteratively reweighted least squares; every iterate is feasible, so each
/// value is a certified lower bound. Zero when the dual space is trivial
/// (degree < 2) or annihilates phi.
DistanceReport dual_distance(const BoundarySymbol& phi, const BlaschkeProduct& inner, const DualConfig& cfg = {},
                             const QuadratureConfig& quadrature = {});

struct PrimalCertificate {
  /// phi is approximated by analytic + conj(inner * conj_part) with both
  /// parts polynomials of degree <= band.
  TrigPoly analytic;
  TrigPoly conj_part;
  /// Refined sup of |phi - f| on the circle: an upper bound on dist(phi, F_inner).
  Real sup_error = 0;
  long grid_nodes = 0;
  int band = 0;
};

/// Complex Chebyshev approximation of phi from {z^k} and {conj(inner z^k)},
/// k = 0..band, by Lawson's iteration on a uniform grid.
PrimalCertificate primal_certificate(const BoundarySymbol& phi, const BlaschkeProduct& inner, int band = 16,
                                     long grid_nodes = 1L << 11, int iterations = 300);

/// ||Gamma_phi|| on K_theta against dual_distance(phi, theta^2), with the
/// lower bound ||Gamma|| <= dist enforced.
///
/// Throws CheckFailure when ||Gamma|| exceeds the dual value by more than slack.
DistanceReport nehari_gap(const BoundarySymbol& phi, const BlaschkeProduct& theta, const DualConfig& cfg = {},
                          const QuadratureConfig& quadrature = {}, Real slack = 1e-6);

/// Running maximum of ||Gamma||-to-distance ratios for one theta.
class EmpiricalConstant {
 public:
  void add(const DistanceReport& r);
  Real value() const { return max_; }
  int samples() const { return samples_; }

 private:
  Real max_ = 0;
  int samples_ = 0;
};

struct ConvolutionRow {
  Real r = 0;
  /// sup |phi - (f1(r.) + conj(inner f2(r.)))|.
  Real smoothed_error = 0;
  /// sup |inner - inner(r.)|.
  Real inner_dilation_error = 0;
};

struct ConvolutionTable {
  PrimalCertificate certificate;
  Real dual_value = 0;
  std::vector<ConvolutionRow> rows;
};

/// Poisson smoothing of the primal certificate f = f1 + conj(inner f2):
/// f_r = f1(r.) + conj(inner f2(r.)).
ConvolutionTable convolution_example(const BoundarySymbol& phi, const BlaschkeProduct& inner,
                                     const std::vector<Real>& radii, int band = 16);

}  // namespace ttlab
