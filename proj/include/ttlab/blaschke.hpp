#pragma once

#include <span>
#include <vector>

#include "ttlab/types.hpp"

namespace ttlab {

/// Normalized Blaschke factor (|l|/l)(l - z)/(1 - conj(l) z); equal to z when l = 0.
Complex blaschke_factor(Complex lambda, Complex z);

/// Finite Blaschke product gamma * prod_i b_{lambda_i}(z).
///
/// Zeros are stored in caller order; multiplicity is expressed by repetition.
class BlaschkeProduct {
 public:
  explicit BlaschkeProduct(std::vector<Complex> zeros, Complex gamma = 1.0);

  /// z^n.
  static BlaschkeProduct power(int n);

  const std::vector<Complex>& zeros() const { return zeros_; }
  Complex gamma() const { return gamma_; }
  int degree() const { return static_cast<int>(zeros_.size()); }

  Complex operator()(Complex z) const;
  ArrayXc operator()(const ArrayXc& z) const;

  /// Zeros repeated twice, constant gamma^2.
  BlaschkeProduct square() const;
  /// Product of the first k factors with unit constant.
  BlaschkeProduct leading(int k) const;

  /// |theta'(xi)| = sum_i (1 - |l_i|^2)/|1 - conj(l_i) xi|^2 for xi on the circle.
  Real derivative_modulus(Complex xi) const;
  /// Continuous branch of arg theta(e^{it}); strictly increasing, gains 2 pi d per turn.
  Real boundary_phase(Real t) const;

 private:
  std::vector<Complex> zeros_;
  Complex gamma_;
};

/// Accumulation points on the circle of a zero sequence.
///
/// Zeros with |l| > 1 - eps are projected radially to the circle and grouped by
/// single linkage at chord distance `link`; each group is represented by the
/// projection of its deepest (largest modulus) zero.
std::vector<Complex> boundary_spectrum_closure(std::span<const Complex> zeros, Real eps = 0.05,
                                               Real link = 0.1);
/// Same, over the union of zeros of a nested truncation family.
std::vector<Complex> boundary_spectrum_closure(std::span<const BlaschkeProduct> family,
                                               Real eps = 0.05, Real link = 0.1);

enum class Connectivity { connected, disconnected, inconclusive };

struct ComponentReport {
  Connectivity verdict = Connectivity::inconclusive;
  int components = 0;       // at the coarse resolution
  int components_fine = 0;  // at twice the coarse resolution
  int radial_cells = 0;
  int angular_cells = 0;
};

/// Raster estimate of the connectivity of {z in D : |theta(z)| < eps}.
///
/// Flood fill on a polar grid at (radial, angular) and at twice that
/// resolution. The two counts must agree and every component must occupy more
/// than a handful of coarse cells, otherwise the verdict is inconclusive.
ComponentReport one_component_diagnostic(const BlaschkeProduct& theta, Real eps,
                                         int radial_cells = 200, int angular_cells = 400);

}  // namespace ttlab
