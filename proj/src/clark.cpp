#include "ttlab/clark.hpp"

#include <cmath>
#include <sstream>

#include "ttlab/linalg.hpp"

namespace ttlab {

Real ClarkMeasure::total_mass() const {
  Real s = 0;
  for (const auto& a : atoms) s += a.weight;
  return s;
}

Real ClarkMeasure::poisson_integral(Complex z) const {
  Real s = 0;
  const Real r = 1.0 - std::norm(z);
  for (const auto& a : atoms) s += a.weight * r / std::norm(1.0 - std::conj(a.xi) * z);
  return s;
}

ClarkMeasure clark_measure(const BlaschkeProduct& theta, Complex alpha) {
  if (std::abs(std::abs(alpha) - 1.0) > 1e-12) throw std::invalid_argument("Clark parameter must be unimodular");
  ClarkMeasure sigma{alpha, {}};
  const int d = theta.degree();
  const Real start = theta.boundary_phase(0.0);
  const Real target0 = std::arg(alpha);
  // Smallest target arg(alpha) + 2 pi m that is >= the phase at t = 0.
  const Real m0 = std::ceil((start - target0) / kTwoPi);
  for (int i = 0; i < d; ++i) {
    const Real target = target0 + kTwoPi * (m0 + i);
    Real lo = 0.0;
    Real hi = kTwoPi;
    for (int it = 0; it < 200 && hi - lo > 0; ++it) {
      const Real mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      if (theta.boundary_phase(mid) < target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const Real t = 0.5 * (lo + hi);
    const Complex xi = unit(t);
    const Real miss = std::abs(theta(xi) - alpha);
    if (miss > 1e-10) {
      std::ostringstream msg;
      msg << "Clark atom bisection failed: bracket [" << lo << ", " << hi << "], target phase " << target
          << ", |theta(xi) - alpha| = " << miss;
      throw CheckFailure(msg.str(), miss);
    }
    sigma.atoms.push_back({xi, 1.0 / theta.derivative_modulus(xi)});
  }
  return sigma;
}

Real poisson_identity_error(const ClarkMeasure& sigma, const BlaschkeProduct& theta,
                            std::span<const Complex> points) {
  Real worst = 0;
  for (Complex z : points) {
    const Complex t = theta(z);
    const Real lhs = ((sigma.alpha + t) / (sigma.alpha - t)).real();
    worst = std::max(worst, std::abs(lhs - sigma.poisson_integral(z)));
  }
  return worst;
}

ClarkMeasure nu_alpha(const BlaschkeProduct& theta, Complex alpha) {
  const ClarkMeasure plus = clark_measure(theta, alpha);
  const ClarkMeasure minus = clark_measure(theta, -alpha);
  ClarkMeasure nu{alpha * alpha, {}};
  for (const auto* m : {&plus, &minus})
    for (const auto& a : m->atoms) nu.atoms.push_back({a.xi, 0.5 * a.weight});
  std::sort(nu.atoms.begin(), nu.atoms.end(),
            [](const ClarkAtom& a, const ClarkAtom& b) { return angle_of(a.xi) < angle_of(b.xi); });
  for (std::size_t i = 0; i + 1 < nu.atoms.size(); ++i) {
    const Real gap = std::abs(nu.atoms[i].xi - nu.atoms[i + 1].xi);
    if (gap < 1e-12) throw CheckFailure("sigma_alpha and sigma_-alpha share an atom", gap);
  }
  return nu;
}

Real measure_deviation(const ClarkMeasure& a, const ClarkMeasure& b) {
  if (a.atoms.size() != b.atoms.size()) return std::numeric_limits<Real>::infinity();
  Real worst = 0;
  for (const auto& x : a.atoms) {
    const ClarkAtom* best = nullptr;
    for (const auto& y : b.atoms)
      if (!best || std::abs(y.xi - x.xi) < std::abs(best->xi - x.xi)) best = &y;
    worst = std::max({worst, std::abs(best->xi - x.xi), std::abs(best->weight - x.weight)});
  }
  return worst;
}

namespace {

MatrixXc trace_matrix(const ModelSpaceBasis& basis, const ClarkMeasure& sigma) {
  const auto n = static_cast<Eigen::Index>(sigma.atoms.size());
  MatrixXc v(n, basis.dim());
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto& a = sigma.atoms[static_cast<std::size_t>(j)];
    v.row(j) = std::sqrt(a.weight) * basis.values_at(a.xi).transpose();
  }
  return v;
}

void require_unitary(const MatrixXc& v, Real tol, const char* what) {
  const Real dev = max_abs_deviation(v.adjoint() * v, MatrixXc::Identity(v.cols(), v.cols()));
  if (dev > tol) {
    std::ostringstream msg;
    msg << what << " is not unitary: ||V^*V - I|| = " << dev;
    throw CheckFailure(msg.str(), dev);
  }
}

}  // namespace

OperatorMatrix clark_unitary(const ModelSpaceBasis& basis, const ClarkMeasure& sigma, Real tol) {
  MatrixXc v = trace_matrix(basis, sigma);
  require_unitary(v, tol, "Clark trace map");
  return {std::move(v), Space::model, Space::clark_alpha, "clark/trace"};
}

OperatorMatrix conj_shift_clark_unitary(const ModelSpaceBasis& basis, const ClarkMeasure& sigma_minus, Real tol) {
  MatrixXc w = trace_matrix(basis, sigma_minus);
  for (Eigen::Index j = 0; j < w.rows(); ++j) w.row(j) *= sigma_minus.atoms[static_cast<std::size_t>(j)].xi;
  w = -w.conjugate();
  require_unitary(w, tol, "shifted conjugate Clark map");
  return {std::move(w), Space::conj_shifted_model, Space::clark_minus_alpha, "clark/conj-shift-trace"};
}

Complex clark_reconstruct(const ClarkMeasure& sigma, const BlaschkeProduct& theta,
                          std::span<const Complex> atom_values, Complex z) {
  const Complex factor = 1.0 - std::conj(sigma.alpha) * theta(z);
  Complex s{};
  for (std::size_t j = 0; j < sigma.atoms.size(); ++j) {
    const auto& a = sigma.atoms[j];
    s += atom_values[j] * a.weight / (1.0 - std::conj(a.xi) * z);
  }
  return s * factor;
}

namespace {

MatrixXc direct_hilbert_kernel(const ClarkMeasure& plus, const ClarkMeasure& minus) {
  MatrixXc h(static_cast<Eigen::Index>(minus.atoms.size()), static_cast<Eigen::Index>(plus.atoms.size()));
  for (Eigen::Index j = 0; j < h.rows(); ++j) {
    const auto& zeta = minus.atoms[static_cast<std::size_t>(j)];
    for (Eigen::Index k = 0; k < h.cols(); ++k) {
      const auto& xi = plus.atoms[static_cast<std::size_t>(k)];
      h(j, k) = 2.0 * std::sqrt(xi.weight * zeta.weight) / (1.0 - std::conj(xi.xi) * zeta.xi);
    }
  }
  return h;
}

}  // namespace

HilbertTransform hilbert_transform(const ModelSpaceBasis& basis, Complex alpha, Real tol) {
  const ClarkMeasure plus = clark_measure(basis.theta(), alpha);
  const ClarkMeasure minus = clark_measure(basis.theta(), -alpha);
  const MatrixXc v_plus = trace_matrix(basis, plus);
  const MatrixXc v_minus = trace_matrix(basis, minus);
  HilbertTransform h;
  h.direct = {direct_hilbert_kernel(plus, minus), Space::clark_alpha, Space::clark_minus_alpha,
              "hilbert/direct-kernel"};
  // V_alpha is unitary, so its inverse is the adjoint.
  h.composed = {v_minus * v_plus.adjoint(), Space::clark_alpha, Space::clark_minus_alpha, "hilbert/composition"};
  h.route_deviation = max_abs_deviation(h.direct.entries, h.composed.entries);
  h.unitarity_deviation = max_abs_deviation(h.direct.entries.adjoint() * h.direct.entries,
                                            MatrixXc::Identity(h.direct.entries.cols(), h.direct.entries.cols()));
  if (h.route_deviation > tol) {
    std::ostringstream msg;
    msg << "Hilbert transform routes disagree by " << h.route_deviation << "\ndirect:\n"
        << h.direct.entries << "\ncomposed:\n"
        << h.composed.entries;
    throw CheckFailure(msg.str(), h.route_deviation);
  }
  return h;
}

OperatorMatrix commutator_matrix(const BoundarySymbol& phi, const ClarkMeasure& sigma_alpha,
                                 const ClarkMeasure& sigma_minus) {
  MatrixXc c(static_cast<Eigen::Index>(sigma_minus.atoms.size()), static_cast<Eigen::Index>(sigma_alpha.atoms.size()));
  for (Eigen::Index j = 0; j < c.rows(); ++j) {
    const auto& zeta = sigma_minus.atoms[static_cast<std::size_t>(j)];
    const Complex phi_zeta = phi(zeta.xi);
    for (Eigen::Index k = 0; k < c.cols(); ++k) {
      const auto& xi = sigma_alpha.atoms[static_cast<std::size_t>(k)];
      c(j, k) = std::sqrt(xi.weight * zeta.weight) * (phi(xi.xi) - phi_zeta) / (1.0 - std::conj(xi.xi) * zeta.xi);
    }
  }
  return {std::move(c), Space::clark_alpha, Space::clark_minus_alpha, "commutator/atomic-kernel"};
}

Real commutator_route_deviation(const BoundarySymbol& phi, const ClarkMeasure& sigma_alpha,
                                const ClarkMeasure& sigma_minus) {
  const MatrixXc h = direct_hilbert_kernel(sigma_alpha, sigma_minus);
  VectorXc phi_plus(static_cast<Eigen::Index>(sigma_alpha.atoms.size()));
  VectorXc phi_minus(static_cast<Eigen::Index>(sigma_minus.atoms.size()));
  for (Eigen::Index k = 0; k < phi_plus.size(); ++k) phi_plus[k] = phi(sigma_alpha.atoms[static_cast<std::size_t>(k)].xi);
  for (Eigen::Index j = 0; j < phi_minus.size(); ++j) phi_minus[j] = phi(sigma_minus.atoms[static_cast<std::size_t>(j)].xi);
  const MatrixXc via_commutator = 0.5 * (h * phi_plus.asDiagonal() - phi_minus.asDiagonal() * h);
  return max_abs_deviation(commutator_matrix(phi, sigma_alpha, sigma_minus).entries, via_commutator);
}

EquivalenceReport verify_equivalence(const BoundarySymbol& phi, const ModelSpaceBasis& basis, Complex alpha) {
  const ClarkMeasure plus = clark_measure(basis.theta(), alpha);
  const ClarkMeasure minus = clark_measure(basis.theta(), -alpha);
  const OperatorMatrix v = clark_unitary(basis, plus);
  const OperatorMatrix w = conj_shift_clark_unitary(basis, minus);
  const OperatorMatrix c = commutator_matrix(phi, plus, minus);
  EquivalenceReport rep;
  rep.hankel = hankel_matrix(phi, basis);
  rep.transported = w.adjoint() * c * v;
  rep.matrix_deviation = max_abs_deviation(rep.hankel.entries, rep.transported.entries);
  const auto s1 = singular_values(rep.hankel.entries);
  const auto s2 = singular_values(rep.transported.entries);
  for (std::size_t i = 0; i < s1.size(); ++i)
    rep.singular_value_deviation = std::max(rep.singular_value_deviation, std::abs(s1[i] - s2[i]));
  return rep;
}

}  // namespace ttlab
