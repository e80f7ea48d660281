#include "ttlab/truncated_ops.hpp"

#include <cmath>

#include "ttlab/linalg.hpp"

namespace ttlab {

std::string to_string(Space s) {
  switch (s) {
    case Space::model:
      return "K_theta";
    case Space::conj_shifted_model:
      return "conj(zK_theta)";
    case Space::clark_alpha:
      return "L2(sigma_alpha)";
    case Space::clark_minus_alpha:
      return "L2(sigma_-alpha)";
  }
  return "?";
}

Real OperatorMatrix::norm() const { return operator_norm(entries); }

OperatorMatrix OperatorMatrix::adjoint() const {
  return {entries.adjoint(), codomain, domain, provenance + "^*"};
}

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  if (rhs.codomain != lhs.domain)
    throw std::invalid_argument("cannot compose: " + to_string(rhs.codomain) + " != " + to_string(lhs.domain));
  return {lhs.entries * rhs.entries, rhs.domain, lhs.codomain, lhs.provenance + " . " + rhs.provenance};
}

namespace {

// Samples of z e_j; the conj(z K_theta) basis is their conjugate, so pairing
// f against conj(z e_j) is the plain integral of f z e_j.
BlockSampler shifted_conj_codomain(const ModelSpaceBasis& basis) {
  auto inner = basis.sampler();
  return [inner](const ArrayXc& pts) -> MatrixXc {
    // gram() conjugates the left sampler, so feed conj(z e_j).
    MatrixXc s = inner(pts);
    s.array().colwise() *= pts;
    return s.conjugate();
  };
}

BlockSampler multiplied(const BoundarySymbol& phi, const ModelSpaceBasis& basis) {
  auto inner = basis.sampler();
  return [inner, phi](const ArrayXc& pts) -> MatrixXc {
    MatrixXc s = inner(pts);
    s.array().colwise() *= phi(pts);
    return s;
  };
}

}  // namespace

OperatorMatrix toeplitz_matrix(const BoundarySymbol& phi, const ModelSpaceBasis& basis) {
  return {gram(basis.sampler(), multiplied(phi, basis), basis.quadrature()), Space::model, Space::model,
          "toeplitz/quadrature"};
}

OperatorMatrix hankel_matrix(const BoundarySymbol& phi, const ModelSpaceBasis& basis) {
  return {gram(shifted_conj_codomain(basis), multiplied(phi, basis), basis.quadrature()), Space::model,
          Space::conj_shifted_model, "hankel/quadrature"};
}

OperatorMatrix conj_theta_multiplier(const ModelSpaceBasis& basis) {
  const BoundarySymbol theta_bar = conj(BoundarySymbol::blaschke(basis.theta()));
  return {gram(shifted_conj_codomain(basis), multiplied(theta_bar, basis), basis.quadrature()),
          Space::model, Space::conj_shifted_model, "conj-theta/quadrature"};
}

Real verify_hankel_toeplitz_link(const BoundarySymbol& phi, const ModelSpaceBasis& basis) {
  const OperatorMatrix hankel = hankel_matrix(phi, basis);
  const OperatorMatrix toeplitz = toeplitz_matrix(BoundarySymbol::blaschke(basis.theta()) * phi, basis);
  const OperatorMatrix linked = conj_theta_multiplier(basis) * toeplitz;
  return max_abs_deviation(hankel.entries, linked.entries);
}

BoundarySymbol rank_one_symbol(const BlaschkeProduct& theta, Complex lambda) {
  return BoundarySymbol::blaschke(theta) *
         BoundarySymbol::rational(TrigPoly::constant(1.0), TrigPoly::monomial(1) - TrigPoly::constant(lambda));
}

OperatorMatrix rank_one_operator(Complex lambda, const ModelSpaceBasis& basis) {
  if (!(std::abs(lambda) < 1.0)) throw std::invalid_argument("rank-one point must lie in the open disk");
  // (e_k, k_l) = e_k(l) by the reproducing property.
  const VectorXc pairing = basis.values_at(lambda);
  const KernelVector kt = kernel_vector(basis.theta(), lambda, KernelKind::conjugate);
  const VectorXc image = project_onto_model_space(kt.symbol, basis);
  return {image * pairing.transpose(), Space::model, Space::model, "rank-one/outer-product"};
}

StandardSymbolSpace::StandardSymbolSpace(const BlaschkeProduct& theta, const QuadratureConfig& quadrature)
    : square_basis_(theta.square(), quadrature), coords_(origin_vanishing_subspace(square_basis_).coords) {}

MatrixXc StandardSymbolSpace::sample(const ArrayXc& points) const {
  return (square_basis_.sample(points) * coords_).conjugate();
}

BlockSampler StandardSymbolSpace::sampler() const {
  return [basis_sampler = square_basis_.sampler(), coords = coords_](const ArrayXc& pts) -> MatrixXc {
    return (basis_sampler(pts) * coords).conjugate();
  };
}

BoundarySymbol StandardSymbolSpace::realize(const VectorXc& coeffs) const {
  // sum_i c_i conj(g_i) = conj(sum_i conj(c_i) g_i), g_i = sum_k Q_ki e_k.
  return conj(square_basis_.combination(coords_ * coeffs.conjugate()));
}

StandardSymbol standard_symbol(const BoundarySymbol& phi, const StandardSymbolSpace& space) {
  VectorXc c = gram(space.sampler(), sampler_of({phi}), space.square_basis().quadrature()).col(0);
  BoundarySymbol s = space.realize(c);
  return {std::move(c), std::move(s)};
}

StandardSymbol standard_symbol(const BoundarySymbol& phi, const BlaschkeProduct& theta,
                               const QuadratureConfig& quadrature) {
  return standard_symbol(phi, StandardSymbolSpace(theta, quadrature));
}

ZeroSymbolResult zero_symbol_test(const BoundarySymbol& phi, const ModelSpaceBasis& basis, Real tol) {
  const Real n = hankel_matrix(phi, basis).norm();
  return {n, n < tol};
}

TestVectorEstimate test_vector_ratio(const ModelSpaceBasis& basis, const BoundarySymbol& phi1,
                                     const BoundarySymbol& phi2, Complex lambda, Complex zeta1, Complex zeta2) {
  if (!(std::abs(lambda) < 1.0)) throw std::invalid_argument("test point must lie in the open disk");
  const BlaschkeProduct& theta = basis.theta();
  const KernelVector kt = kernel_vector(theta, lambda, KernelKind::conjugate);
  const VectorXc x = project_onto_model_space(kt.symbol, basis);
  const MatrixXc a = toeplitz_matrix(phi1 + phi2, basis).entries;
  const Complex zeta = zeta1 + zeta2;
  TestVectorEstimate est;
  est.kernel_norm = x.norm();
  est.ratio = (a * x - zeta * x).norm() / est.kernel_norm;

  const Real weight = 1.0 - std::norm(lambda);
  est.bound_continuous =
      8.0 * integrate(
                [&](const ArrayXc& pts) -> ArrayXc {
                  return (phi1(pts) - zeta1).abs2().cast<Complex>() * weight / (pts - lambda).abs2().cast<Complex>();
                },
                basis.quadrature())
                .real();
  const Real sup2 = std::pow(sup_norm(phi2), 2);
  est.bound_analytic = 8.0 * std::norm(theta(lambda)) * sup2 + std::norm(phi2.analytic_eval(lambda) - zeta2);
  return est;
}

}  // namespace ttlab
