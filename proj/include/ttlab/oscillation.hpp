#pragma once

#include <span>
#include <vector>

#include "ttlab/clark.hpp"

namespace ttlab {

/// Half-open counterclockwise arc [start, end) of the circle, angles in radians.
struct Arc {
  Real start = 0;
  Real end = kTwoPi;

  Real length() const { return end - start; }
  bool contains(Real angle) const;
};

/// Uniform atoms at the M-th roots of unity with weights 1/M; the Clark
/// measure of z^M at alpha = 1, used as the discretized Lebesgue measure.
ClarkMeasure lebesgue_grid(long nodes);

/// Values of a symbol at the atoms of a measure.
std::vector<Complex> atom_values(const BoundarySymbol& f, const ClarkMeasure& nu);

enum class MomentRule {
  /// integral over the arc of (f - P) conj(xi)^k dnu = 0, k = 0..r.
  projection,
  /// integral over the arc of P conj(xi)^k dnu = 0, k = 0..r, with P alone.
  verbatim,
};

struct OscillationValue {
  Real value = 0;
  /// Degree actually used after falling back from a singular moment system.
  int degree = 0;
  /// nu(arc).
  Real mass = 0;
};

/// (1/nu(arc)) integral over the arc of |f - P| dnu, with P a polynomial in xi
/// of degree <= r fixed by the moment rule. If the moment system is singular
/// the largest solvable degree below r is used. Zero when nu(arc) = 0, when
/// the fit interpolates, and when the projection residual is below 1e-13 max |f|.
OscillationValue oscillation(std::span<const Complex> values, const ClarkMeasure& nu, const Arc& arc, int degree,
                             MomentRule rule = MomentRule::projection);

/// M_eps for each eps in the grid: the largest mean oscillation (degree 0)
/// over arcs with 0 < nu(arc) <= eps. For atomic nu the arcs reduce to the
/// contiguous cyclic runs of atoms, all of which are enumerated.
std::vector<Real> vmo_modulus(std::span<const Complex> values, const ClarkMeasure& nu, std::span<const Real> eps_grid);

struct DyadicArcFamily {
  Real anchor = 0;
  /// Components of the circle minus the marked points (the whole circle, cut
  /// at the anchor, when there are none).
  std::vector<Arc> components;
  /// generations[k] holds the 2^k halvings of every component.
  std::vector<std::vector<Arc>> generations;
};

/// Generations 0..K of dyadic subarcs. `marked` lists artificial accumulation
/// points (angles); for finite atomic measures there are none.
DyadicArcFamily dyadic_family(int generations, Real anchor = 0, std::vector<Real> marked = {});

/// ceil(log2 d) + 4.
int default_generations(int degree);

struct BesovValue {
  Real norm = 0;
  int degree = 0;  // r_p = floor(1/p)
  /// (sum over generation k of osc^p)^{1/p}, per generation.
  std::vector<Real> per_generation;
  /// The last entry of per_generation; small values indicate convergence.
  Real last_generation = 0;
};

/// (sum over the family of osc(f, nu, arc, r_p)^p)^{1/p}.
BesovValue besov_norm(std::span<const Complex> values, const ClarkMeasure& nu, Real p, const DyadicArcFamily& family,
                      MomentRule rule = MomentRule::projection);

struct ProbeRow {
  std::size_t index = 0;
  Real schatten = 0;
  Real besov = 0;
  /// schatten / besov; NaN when besov vanishes.
  Real ratio = 0;
};

struct ConjectureProbe {
  Real p = 0;
  Complex alpha;
  int generations = 0;
  std::vector<ProbeRow> rows;
  /// Over rows with a finite ratio; NaN when there are none.
  Real ratio_min = 0;
  Real ratio_max = 0;
  Real ratio_median = 0;
};

/// Exploratory pairing of ||Gamma_phi||_{S^p} on K_theta with the B_p(nu_alpha)
/// norm of the standard symbol of phi, for each symbol in the corpus.
ConjectureProbe conjecture_probe(const BlaschkeProduct& theta, Complex alpha, Real p,
                                 const std::vector<BoundarySymbol>& corpus, const QuadratureConfig& quadrature = {});

}  // namespace ttlab
