#include "ttlab/model_space.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/QR>

namespace ttlab {

ModelSpaceBasis::ModelSpaceBasis(BlaschkeProduct theta, QuadratureConfig quadrature, Real gram_tol)
    : theta_(std::move(theta)), quadrature_(quadrature) {
  if (theta_.degree() < 1) throw std::invalid_argument("model space needs a Blaschke product of degree >= 1");
  const auto& zeros = theta_.zeros();
  for (int k = 0; k < dim(); ++k) {
    const Complex l = zeros[static_cast<std::size_t>(k)];
    BoundarySymbol kernel = BoundarySymbol::rational(TrigPoly::constant(std::sqrt(1.0 - std::norm(l))),
                                                     TrigPoly::constant(1.0) - TrigPoly::monomial(1, std::conj(l)));
    elements_.push_back(k == 0 ? kernel : kernel * BoundarySymbol::blaschke(theta_.leading(k)));
  }
  const MatrixXc g = gram(sampler(), sampler(), quadrature_);
  gram_deviation_ = (g - MatrixXc::Identity(dim(), dim())).cwiseAbs().maxCoeff();
  if (gram_deviation_ > gram_tol) {
    std::ostringstream msg;
    msg << "Takenaka-Malmquist Gram matrix deviates from identity by " << gram_deviation_
        << " (quadrature cap " << quadrature_.max_nodes << " nodes)";
    throw CheckFailure(msg.str(), gram_deviation_);
  }
}

VectorXc ModelSpaceBasis::values_at(Complex z) const {
  VectorXc v(dim());
  Complex prefix = 1.0;
  const auto& zeros = theta_.zeros();
  for (int k = 0; k < dim(); ++k) {
    const Complex l = zeros[static_cast<std::size_t>(k)];
    v[k] = std::sqrt(1.0 - std::norm(l)) / (1.0 - std::conj(l) * z) * prefix;
    prefix *= blaschke_factor(l, z);
  }
  return v;
}

namespace {

MatrixXc sample_takenaka_malmquist(const std::vector<Complex>& zeros, const ArrayXc& points) {
  const auto d = static_cast<Eigen::Index>(zeros.size());
  MatrixXc out(points.size(), d);
  ArrayXc prefix = ArrayXc::Ones(points.size());
  for (Eigen::Index k = 0; k < d; ++k) {
    const Complex l = zeros[static_cast<std::size_t>(k)];
    const ArrayXc denom = 1.0 - std::conj(l) * points;
    out.col(k) = (std::sqrt(1.0 - std::norm(l)) * prefix / denom).matrix();
    if (l == Complex{}) {
      prefix *= points;
    } else {
      prefix *= (std::abs(l) / l) * (l - points) / denom;
    }
  }
  return out;
}

}  // namespace

MatrixXc ModelSpaceBasis::sample(const ArrayXc& points) const {
  return sample_takenaka_malmquist(theta_.zeros(), points);
}

BlockSampler ModelSpaceBasis::sampler() const {
  return [zeros = theta_.zeros()](const ArrayXc& pts) { return sample_takenaka_malmquist(zeros, pts); };
}

BoundarySymbol ModelSpaceBasis::combination(const VectorXc& coeffs) const {
  return linear_combination(elements_, coeffs);
}

VectorXc project_onto_model_space(const BoundarySymbol& f, const ModelSpaceBasis& basis) {
  return gram(basis.sampler(), sampler_of({f}), basis.quadrature()).col(0);
}

OriginVanishingSubspace origin_vanishing_subspace(const ModelSpaceBasis& basis) {
  // f = sum c_k e_k vanishes at 0 iff c is orthogonal to conj(e(0)), the
  // coordinate vector of the reproducing kernel at the origin.
  const VectorXc k0 = basis.values_at(0.0).conjugate();
  Eigen::HouseholderQR<MatrixXc> qr(k0);
  const MatrixXc q = qr.householderQ() * MatrixXc::Identity(basis.dim(), basis.dim());
  return {q.rightCols(basis.dim() - 1)};
}

KernelVector kernel_vector(const BlaschkeProduct& theta, Complex lambda, KernelKind kind) {
  if (!(std::abs(lambda) < 1.0)) throw std::invalid_argument("kernel point must lie in the open disk");
  const Complex t = theta(lambda);
  const Real norm2 = (1.0 - std::norm(t)) / (1.0 - std::norm(lambda));
  const BoundarySymbol th = BoundarySymbol::blaschke(theta);
  BoundarySymbol sym;
  if (kind == KernelKind::reproducing) {
    sym = (BoundarySymbol(1.0) - BoundarySymbol(std::conj(t)) * th) *
          BoundarySymbol::rational(TrigPoly::constant(1.0),
                                   TrigPoly::constant(1.0) - TrigPoly::monomial(1, std::conj(lambda)));
  } else {
    sym = (th - BoundarySymbol(t)) *
          BoundarySymbol::rational(TrigPoly::constant(1.0), TrigPoly::monomial(1) - TrigPoly::constant(lambda));
  }
  return {lambda, kind, std::move(sym), norm2};
}

}  // namespace ttlab
