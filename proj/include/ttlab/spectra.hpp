#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ttlab/truncated_ops.hpp"

namespace ttlab {

struct SpectralReport {
  /// Empty for non-square input. Sorted by (real, imag).
  std::vector<Complex> eigenvalues;
  /// Descending.
  std::vector<Real> singular_values;
  /// p -> (sum s_k^p)^{1/p}.
  std::map<Real, Real> schatten;
  /// 2-norm condition number of the eigenvector matrix; large values flag
  /// Jordan-like clustering where eigenvalue accuracy degrades.
  Real eigenvector_condition = 0;
};

/// Dense eigen- and singular value decomposition.
///
/// Throws CheckFailure with the matrix in the message if the eigensolver does
/// not converge.
SpectralReport spectral_report(const MatrixXc& m, std::span<const Real> p_list = {});

struct Cluster {
  Complex center;  // mean of the members
  int count = 0;
  Real radius = 0;  // max member distance from the center
};

/// Single-linkage clusters at scale delta, ordered by (real, imag) of the center.
std::vector<Cluster> single_linkage_clusters(std::span<const Complex> points, Real delta);

/// n -> lambda_n for n = 1, 2, ...
using ZeroGenerator = std::function<Complex(int)>;

/// lambda_n = 1 - 2^{-n}.
Complex dyadic_radial_zero(int n);

struct ClusterReport {
  int family_size = 0;
  std::vector<Complex> eigenvalues;
  std::vector<Cluster> clusters;
  /// Max over target points of the distance to the nearest eigenvalue.
  Real eigenvalue_distance = 0;
  /// Max over target points of the distance to the nearest cluster center.
  Real cluster_distance = 0;
  /// Node count reached when quadrature gave up; 0 on success.
  long quadrature_nodes = 0;
  bool failed = false;
  std::string failure;
};

struct EssentialSpectrumReport {
  Real delta = 0;
  /// Zero-accumulation points on the circle and phi at those points.
  std::vector<Complex> accumulation_points;
  std::vector<Complex> target;
  std::vector<ClusterReport> rows;
};

/// Spectra of A_phi on K_{theta_N} for the truncations theta_N with zeros
/// lambda_1..lambda_N, clustered at scale delta and compared with phi at the
/// accumulation points of the full zero list up to max(N_list).
///
/// Quadrature failures are recorded per N and the sweep continues.
EssentialSpectrumReport essential_spectrum_experiment(const ZeroGenerator& zeros, const BoundarySymbol& phi,
                                                      std::span<const int> family_sizes, Real delta = 0.05,
                                                      const QuadratureConfig& quadrature = {});

enum class ZetaMode {
  fixed,           // zeta2 as given
  track_analytic,  // zeta2 = phi2(lambda_n) at each step
};

struct DecayRow {
  int n = 0;
  Complex lambda;
  Complex zeta;
  Real ratio = 0;
  Real bound_continuous = 0;
  Real bound_analytic = 0;
};

/// Test-vector ratios at lambda_n, n in `steps`, on the fixed space K_{theta_N}
/// with N = max(steps).
std::vector<DecayRow> test_vector_decay_experiment(const ZeroGenerator& zeros, const BoundarySymbol& phi1,
                                                   const BoundarySymbol& phi2, Complex zeta1, Complex zeta2,
                                                   std::span<const int> steps, ZetaMode mode = ZetaMode::fixed,
                                                   const QuadratureConfig& quadrature = {});

}  // namespace ttlab
