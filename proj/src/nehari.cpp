#include "ttlab/nehari.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "ttlab/linalg.hpp"

namespace ttlab {

DualBasis::DualBasis(BlaschkeProduct inner, QuadratureConfig quadrature)
    : basis_(std::move(inner), quadrature), subspace_(origin_vanishing_subspace(basis_)) {}

namespace {

ArrayXc grid_nodes(long m) { return QuadratureGrid(m).nodes(); }

Real mean_abs(const MatrixXc& samples, const VectorXc& c) {
  return (samples * c).cwiseAbs().mean();
}

// a_i = integral of phi g_i dm over the dual basis.
VectorXc pairing_vector(const BoundarySymbol& phi, const DualBasis& dual, const QuadratureConfig& quadrature) {
  BlockSampler right = [dual, phi](const ArrayXc& pts) -> MatrixXc {
    MatrixXc s = dual.sample(pts);
    s.array().colwise() *= phi(pts);
    return s;
  };
  BlockSampler one = [](const ArrayXc& pts) -> MatrixXc { return MatrixXc::Ones(pts.size(), 1); };
  return gram(one, right, quadrature).row(0).transpose();
}

struct IrlsResult {
  VectorXc coeffs;  // feasible: a^T c = 1
  Real l1 = std::numeric_limits<Real>::infinity();
  int iterations = 0;
};

// min ||S c||_1 / M subject to a^T c = 1, started from c0 (rescaled to feasibility).
IrlsResult irls(const MatrixXc& samples, const VectorXc& a, VectorXc c, int max_iterations) {
  IrlsResult best;
  const Complex scale = a.transpose() * c;
  if (std::abs(scale) < 1e-300) return best;
  c /= scale;
  const auto m = static_cast<Real>(samples.rows());
  Real l1 = mean_abs(samples, c);
  best = {c, l1, 0};
  Real eta = 1e-2 * l1;
  int stalled = 0;
  for (int it = 1; it <= max_iterations; ++it) {
    const Eigen::ArrayXd w = (samples * c).cwiseAbs().array().max(eta).inverse();
    const MatrixXc g = samples.adjoint() * (w.cast<Complex>().matrix().asDiagonal() * samples) / m;
    const VectorXc x = g.ldlt().solve(a.conjugate());
    const Complex denom = a.transpose() * x;
    if (!std::isfinite(std::abs(denom)) || std::abs(denom) < 1e-300) break;
    c = x / denom;
    const Real next = mean_abs(samples, c);
    if (next < best.l1) best = {c, next, it};
    stalled = (std::abs(l1 - next) <= 1e-13 * next) ? stalled + 1 : 0;
    l1 = next;
    eta = std::max(0.5 * eta, 1e-12 * l1);
    if (stalled >= 5) break;
  }
  return best;
}

DistanceReport dual_distance_with_seeds(const BoundarySymbol& phi, const BlaschkeProduct& inner, const DualConfig& cfg,
                                        const QuadratureConfig& quadrature, const std::vector<VectorXc>& seeds) {
  DistanceReport rep;
  rep.inner = inner;
  rep.hankel_norm = std::numeric_limits<Real>::quiet_NaN();
  rep.ratio = std::numeric_limits<Real>::quiet_NaN();
  if (inner.degree() < 2) return rep;

  const DualBasis dual(inner, quadrature);
  const VectorXc a = pairing_vector(phi, dual, quadrature);
  rep.optimizer = VectorXc::Zero(dual.dim());
  if (a.norm() < 1e-14) return rep;

  const MatrixXc samples = dual.sample(grid_nodes(cfg.l1_nodes));
  std::vector<VectorXc> starts{a.conjugate()};  // L2-optimal start
  for (const auto& s : seeds) starts.push_back(s);
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<Real> normal(0.0, 1.0);
  for (int i = 0; i < cfg.random_starts; ++i) {
    VectorXc c(dual.dim());
    for (Eigen::Index k = 0; k < c.size(); ++k) c[k] = Complex(normal(rng), normal(rng));
    starts.push_back(c);
  }

  IrlsResult best;
  for (const auto& s : starts) {
    const IrlsResult r = irls(samples, a, s, cfg.max_iterations);
    ++rep.starts;
    rep.iterations += r.iterations;
    if (r.l1 < best.l1) best = r;
  }
  if (!std::isfinite(best.l1)) return rep;

  const Real certified_l1 = mean_abs(dual.sample(grid_nodes(cfg.certify_nodes)), best.coeffs);
  rep.dual_value = 1.0 / certified_l1;
  rep.optimizer = best.coeffs / certified_l1;
  return rep;
}

}  // namespace

DistanceReport dual_distance(const BoundarySymbol& phi, const BlaschkeProduct& inner, const DualConfig& cfg,
                             const QuadratureConfig& quadrature) {
  return dual_distance_with_seeds(phi, inner, cfg, quadrature, {});
}

PrimalCertificate primal_certificate(const BoundarySymbol& phi, const BlaschkeProduct& inner, int band,
                                     long grid_nodes_count, int iterations) {
  if (band < 0) throw std::invalid_argument("band must be nonnegative");
  const ArrayXc xi = grid_nodes(grid_nodes_count);
  const auto m = xi.size();
  const int n = band + 1;
  MatrixXc basis(m, 2 * n);
  const ArrayXc inner_bar = inner(xi).conjugate();
  ArrayXc power = ArrayXc::Ones(m);
  for (int k = 0; k < n; ++k) {
    basis.col(k) = power.matrix();
    basis.col(n + k) = (inner_bar * power.conjugate()).matrix();
    power *= xi;
  }
  const VectorXc target = phi(xi).matrix();

  Eigen::ArrayXd w = Eigen::ArrayXd::Constant(m, 1.0 / static_cast<Real>(m));
  VectorXc best_c = VectorXc::Zero(2 * n);
  Real best_sup = target.cwiseAbs().maxCoeff();
  for (int it = 0; it < iterations; ++it) {
    // Both halves of the basis are orthonormal families, so the weighted
    // normal equations stay well conditioned.
    const MatrixXc weighted = w.cast<Complex>().matrix().asDiagonal() * basis;
    const MatrixXc normal = weighted.adjoint() * basis;
    const VectorXc c = normal.ldlt().solve(weighted.adjoint() * target);
    const Eigen::ArrayXd err = (target - basis * c).cwiseAbs().array();
    const Real sup = err.maxCoeff();
    if (sup < best_sup) {
      best_sup = sup;
      best_c = c;
    }
    w *= err;
    const Real total = w.sum();
    if (!(total > 0)) break;
    w /= total;
  }

  PrimalCertificate cert;
  cert.band = band;
  cert.grid_nodes = grid_nodes_count;
  std::map<int, Complex> f1;
  std::map<int, Complex> f2;
  for (int k = 0; k < n; ++k) {
    f1[k] = best_c[k];
    f2[k] = std::conj(best_c[n + k]);
  }
  cert.analytic = TrigPoly(std::move(f1));
  cert.conj_part = TrigPoly(std::move(f2));
  const TrigPoly p1 = cert.analytic;
  const TrigPoly p2 = cert.conj_part;
  cert.sup_error = sup_norm(
      [&](const ArrayXc& pts) -> ArrayXc { return phi(pts) - p1(pts) - (inner(pts) * p2(pts)).conjugate(); },
      grid_nodes_count * 4);
  return cert;
}

DistanceReport nehari_gap(const BoundarySymbol& phi, const BlaschkeProduct& theta, const DualConfig& cfg,
                          const QuadratureConfig& quadrature, Real slack) {
  const ModelSpaceBasis basis(theta, quadrature);
  const MatrixXc g = hankel_matrix(phi, basis).entries;
  Eigen::JacobiSVD<MatrixXc> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Real norm = svd.singularValues()[0];

  // h = z f g with f, g the top singular pair reaches |integral phi h| = ||Gamma||
  // at ||h||_1 <= 1, so seeding with it makes the lower bound hold by construction.
  std::vector<VectorXc> seeds;
  const BlaschkeProduct inner = theta.square();
  if (norm > 0 && inner.degree() >= 2) {
    const VectorXc v = svd.matrixV().col(0);
    const VectorXc u = svd.matrixU().col(0).conjugate();
    const DualBasis dual(inner, quadrature);
    BlockSampler h = [basis, v, u](const ArrayXc& pts) -> MatrixXc {
      const MatrixXc e = basis.sample(pts);
      return ((e * v).array() * (e * u).array() * pts).matrix();
    };
    BlockSampler left = [dual](const ArrayXc& pts) -> MatrixXc { return dual.sample(pts); };
    seeds.push_back(gram(left, h, quadrature).col(0));
  }

  DistanceReport rep = dual_distance_with_seeds(phi, inner, cfg, quadrature, seeds);
  rep.hankel_norm = norm;
  rep.ratio = norm > 1e-14 ? rep.dual_value / norm : std::numeric_limits<Real>::quiet_NaN();
  if (norm > rep.dual_value + slack) {
    std::ostringstream msg;
    msg << "Hankel norm " << norm << " exceeds the dual distance estimate " << rep.dual_value << " by more than "
        << slack;
    throw CheckFailure(msg.str(), norm - rep.dual_value);
  }
  return rep;
}

void EmpiricalConstant::add(const DistanceReport& r) {
  if (!std::isfinite(r.ratio)) return;
  max_ = std::max(max_, r.ratio);
  ++samples_;
}

ConvolutionTable convolution_example(const BoundarySymbol& phi, const BlaschkeProduct& inner,
                                     const std::vector<Real>& radii, int band) {
  ConvolutionTable table;
  table.certificate = primal_certificate(phi, inner, band);
  table.dual_value = dual_distance(phi, inner).dual_value;
  const TrigPoly& f1 = table.certificate.analytic;
  const TrigPoly& f2 = table.certificate.conj_part;
  for (Real r : radii) {
    if (!(r > 0 && r < 1)) throw std::invalid_argument("dilation radius must lie in (0, 1)");
    ConvolutionRow row;
    row.r = r;
    row.smoothed_error = sup_norm([&](const ArrayXc& pts) -> ArrayXc {
      const ArrayXc inside = r * pts;
      return phi(pts) - f1(inside) - (inner(pts) * f2(inside)).conjugate();
    });
    row.inner_dilation_error = sup_norm([&](const ArrayXc& pts) -> ArrayXc { return inner(pts) - inner(ArrayXc(r * pts)); });
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace ttlab
