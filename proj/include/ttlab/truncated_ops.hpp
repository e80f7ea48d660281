#pragma once

#include <string>

#include "ttlab/model_space.hpp"

namespace ttlab {

/// Hilbert spaces an operator matrix can act between, each with a fixed orthonormal basis:
///   model               K_theta, Takenaka-Malmquist basis e_j
///   conj_shifted_model  conj(z K_theta), basis conj(z e_j)
///   clark_alpha         L2(sigma_alpha), normalized atom indicators
///   clark_minus_alpha   L2(sigma_{-alpha}), normalized atom indicators
enum class Space { model, conj_shifted_model, clark_alpha, clark_minus_alpha };

std::string to_string(Space s);

/// Dense matrix of an operator between two tagged spaces.
struct OperatorMatrix {
  MatrixXc entries;
  Space domain = Space::model;
  Space codomain = Space::model;
  std::string provenance;

  Real norm() const;
  OperatorMatrix adjoint() const;
};

/// Composition lhs * rhs; throws std::invalid_argument when rhs.codomain != lhs.domain.
OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);

/// A_phi on K_theta: entries integral of phi e_k conj(e_j) dm.
OperatorMatrix toeplitz_matrix(const BoundarySymbol& phi, const ModelSpaceBasis& basis);

/// Gamma_phi : K_theta -> conj(z K_theta): entries integral of phi e_k z e_j dm.
OperatorMatrix hankel_matrix(const BoundarySymbol& phi, const ModelSpaceBasis& basis);

/// Multiplication by conj(theta), a unitary map K_theta -> conj(z K_theta).
OperatorMatrix conj_theta_multiplier(const ModelSpaceBasis& basis);

/// Max-entry deviation between Gamma_phi and conj(theta) A_{theta phi}.
Real verify_hankel_toeplitz_link(const BoundarySymbol& phi, const ModelSpaceBasis& basis);

/// h -> (h, k_l) conj-kernel_l, assembled from the reproducing property
/// (e_k, k_l) = e_k(l) and the projected conjugate kernel.
OperatorMatrix rank_one_operator(Complex lambda, const ModelSpaceBasis& basis);

/// theta/(z - l), the Toeplitz symbol of the rank-one operator at l.
BoundarySymbol rank_one_symbol(const BlaschkeProduct& theta, Complex lambda);

/// Orthonormal basis of conj(K_{theta^2} intersected with zH^2), dimension 2d - 1.
class StandardSymbolSpace {
 public:
  StandardSymbolSpace(const BlaschkeProduct& theta, const QuadratureConfig& quadrature = {});

  int dim() const { return static_cast<int>(coords_.cols()); }
  const ModelSpaceBasis& square_basis() const { return square_basis_; }
  /// (points x dim) samples of the conjugated basis functions.
  MatrixXc sample(const ArrayXc& points) const;
  BlockSampler sampler() const;
  /// sum c_i w_i as a symbol.
  BoundarySymbol realize(const VectorXc& coeffs) const;

 private:
  ModelSpaceBasis square_basis_;
  MatrixXc coords_;
};

struct StandardSymbol {
  /// Coordinates in the orthonormal basis of conj(K_{theta^2} intersected with zH^2).
  VectorXc coefficients;
  BoundarySymbol symbol;
};

/// Orthogonal projection of phi onto conj(K_{theta^2} intersected with zH^2).
StandardSymbol standard_symbol(const BoundarySymbol& phi, const StandardSymbolSpace& space);
StandardSymbol standard_symbol(const BoundarySymbol& phi, const BlaschkeProduct& theta,
                               const QuadratureConfig& quadrature = {});

struct ZeroSymbolResult {
  Real hankel_norm = 0;
  bool is_zero = false;
};

/// ||Gamma_phi|| and whether it is below tol.
ZeroSymbolResult zero_symbol_test(const BoundarySymbol& phi, const ModelSpaceBasis& basis,
                                  Real tol = 1e-10);

/// Test-vector ratio ||(A_phi - zeta I) kt_l|| / ||kt_l|| for phi = phi1 + phi2,
/// zeta = zeta1 + zeta2, with the two diagnostic bounds
///   bound_continuous = 8 integral |phi1 - zeta1|^2 P_l dm
///   bound_analytic   = 8 |theta(l)|^2 ||phi2||_inf^2 + |phi2(l) - zeta2|^2
/// which dominate the squared ratios of the continuous and analytic parts.
struct TestVectorEstimate {
  Real ratio = 0;
  Real bound_continuous = 0;
  Real bound_analytic = 0;
  Real kernel_norm = 0;
};

TestVectorEstimate test_vector_ratio(const ModelSpaceBasis& basis, const BoundarySymbol& phi1,
                                     const BoundarySymbol& phi2, Complex lambda, Complex zeta1,
                                     Complex zeta2);

}  // namespace ttlab
