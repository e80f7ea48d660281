#pragma once

#include <span>
#include <vector>

#include "ttlab/truncated_ops.hpp"

namespace ttlab {

struct ClarkAtom {
  Complex xi;
  Real weight;
};

/// Atomic Clark measure sigma_alpha of a finite Blaschke product: one atom at
/// each solution of theta(xi) = alpha on the circle, sorted by angle in [0, 2 pi).
struct ClarkMeasure {
  Complex alpha;
  std::vector<ClarkAtom> atoms;

  Real total_mass() const;
  /// sum_j w_j (1 - |z|^2)/|1 - conj(xi_j) z|^2.
  Real poisson_integral(Complex z) const;
};

/// Atoms by monotone phase bisection, weights 1/|theta'(xi)|.
///
/// Throws CheckFailure if an atom misses theta(xi) = alpha by more than 1e-10.
ClarkMeasure clark_measure(const BlaschkeProduct& theta, Complex alpha);

/// Max over `points` of |Re((alpha + theta)/(alpha - theta)) - poisson_integral|.
Real poisson_identity_error(const ClarkMeasure& sigma, const BlaschkeProduct& theta,
                            std::span<const Complex> points);

/// (sigma_alpha + sigma_{-alpha})/2, merged and sorted by angle.
///
/// Throws CheckFailure if the two measures share an atom.
ClarkMeasure nu_alpha(const BlaschkeProduct& theta, Complex alpha);

/// Max deviation between two atomic measures matched atom by atom in angle order.
Real measure_deviation(const ClarkMeasure& a, const ClarkMeasure& b);

/// V_alpha : K_theta -> L2(sigma), entries sqrt(w_j) e_k(xi_j).
///
/// Throws CheckFailure if V^* V deviates from the identity by more than tol.
OperatorMatrix clark_unitary(const ModelSpaceBasis& basis, const ClarkMeasure& sigma, Real tol = 1e-10);

/// Intertwiner conj(z K_theta) -> L2(sigma_{-alpha}) on the basis conj(z e_i):
/// entries -sqrt(w_j) conj(zeta_j e_i(zeta_j)).
///
/// The overall sign is the phase convention under which
/// Gamma_phi = W^{-1} C_phi V_alpha holds with C_phi's kernel oriented as
/// (phi(xi) - phi(zeta))/(1 - conj(xi) zeta).
OperatorMatrix conj_shift_clark_unitary(const ModelSpaceBasis& basis, const ClarkMeasure& sigma_minus,
                                        Real tol = 1e-10);

/// F(z) reconstructed from boundary values on the atoms:
/// sum_j f(xi_j) w_j (1 - conj(alpha) theta(z))/(1 - conj(xi_j) z).
Complex clark_reconstruct(const ClarkMeasure& sigma, const BlaschkeProduct& theta,
                          std::span<const Complex> atom_values, Complex z);

struct HilbertTransform {
  /// Direct kernel 2 sqrt(w_k w'_j)/(1 - conj(xi_k) zeta_j).
  OperatorMatrix direct;
  /// V_{-alpha} V_alpha^{-1}.
  OperatorMatrix composed;
  Real route_deviation = 0;
  /// ||H^* H - I|| for the direct route.
  Real unitarity_deviation = 0;
};

/// Both routes of H_alpha : L2(sigma_alpha) -> L2(sigma_{-alpha}).
///
/// Throws CheckFailure if the routes disagree by more than tol; unitarity is
/// reported, not enforced.
HilbertTransform hilbert_transform(const ModelSpaceBasis& basis, Complex alpha, Real tol = 1e-10);

/// C_phi : L2(sigma_alpha) -> L2(sigma_{-alpha}),
/// entries sqrt(w_k w'_j) (phi(xi_k) - phi(zeta_j))/(1 - conj(xi_k) zeta_j).
OperatorMatrix commutator_matrix(const BoundarySymbol& phi, const ClarkMeasure& sigma_alpha,
                                 const ClarkMeasure& sigma_minus);

/// Max deviation of C_phi from (H M_phi - M_phi H)/2 built on the direct H kernel.
Real commutator_route_deviation(const BoundarySymbol& phi, const ClarkMeasure& sigma_alpha,
                                const ClarkMeasure& sigma_minus);

struct EquivalenceReport {
  OperatorMatrix hankel;       // boundary quadrature route
  OperatorMatrix transported;  // W^{-1} C_phi V_alpha, atomic route
  Real matrix_deviation = 0;
  Real singular_value_deviation = 0;
};

/// Hankel operator by quadrature against the atomic commutator transported to K_theta.
/// Meaningful for phi with conj(phi) in K_{theta^2}.
EquivalenceReport verify_equivalence(const BoundarySymbol& phi, const ModelSpaceBasis& basis, Complex alpha);

}  // namespace ttlab
