#pragma once

#include "ttlab/quadrature.hpp"

namespace ttlab {

/// Takenaka-Malmquist orthonormal basis of K_theta = H^2 minus theta H^2.
///
/// e_k(z) = sqrt(1 - |l_k|^2)/(1 - conj(l_k) z) * prod_{j<k} b_{l_j}(z), in the
/// stored zero order. The constructor checks the Gram matrix by quadrature and
/// throws CheckFailure if it deviates from the identity by more than
/// `gram_tol`.
class ModelSpaceBasis {
 public:
  explicit ModelSpaceBasis(BlaschkeProduct theta, QuadratureConfig quadrature = {},
                           Real gram_tol = 1e-10);

  const BlaschkeProduct& theta() const { return theta_; }
  const QuadratureConfig& quadrature() const { return quadrature_; }
  int dim() const { return theta_.degree(); }
  /// Max-entry deviation of the quadrature Gram matrix from the identity.
  Real gram_deviation() const { return gram_deviation_; }

  /// Basis elements as symbols.
  const std::vector<BoundarySymbol>& elements() const { return elements_; }
  /// e_k(z) for k = 0..d-1, any z in the closed disk.
  VectorXc values_at(Complex z) const;
  /// (points x d) samples; the fast path used by all matrix assemblies.
  MatrixXc sample(const ArrayXc& points) const;
  BlockSampler sampler() const;

  /// sum_k c_k e_k as a symbol.
  BoundarySymbol combination(const VectorXc& coeffs) const;

 private:
  BlaschkeProduct theta_;
  QuadratureConfig quadrature_;
  std::vector<BoundarySymbol> elements_;
  Real gram_deviation_ = 0;
};

/// Coefficients ((f, e_k))_k of the orthogonal projection of f onto K_theta.
VectorXc project_onto_model_space(const BoundarySymbol& f, const ModelSpaceBasis& basis);

/// Orthonormal basis of the subspace of K_theta vanishing at the origin
/// (K_theta intersected with zH^2), dimension d - 1.
struct OriginVanishingSubspace {
  /// d x (d-1) coordinates in the Takenaka-Malmquist basis, orthonormal columns.
  MatrixXc coords;
  MatrixXc sample(const ModelSpaceBasis& basis, const ArrayXc& points) const {
    return basis.sample(points) * coords;
  }
};
OriginVanishingSubspace origin_vanishing_subspace(const ModelSpaceBasis& basis);

enum class KernelKind { reproducing, conjugate };

/// k_l = (1 - conj(theta(l)) theta)/(1 - conj(l) z), or the conjugate kernel
/// (theta - theta(l))/(z - l).
struct KernelVector {
  Complex lambda;
  KernelKind kind;
  BoundarySymbol symbol;
  /// Closed form (1 - |theta(l)|^2)/(1 - |l|^2), shared by both kinds.
  Real norm_squared;
};

KernelVector kernel_vector(const BlaschkeProduct& theta, Complex lambda, KernelKind kind);

}  // namespace ttlab
