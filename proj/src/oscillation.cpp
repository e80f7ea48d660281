#include "ttlab/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "ttlab/linalg.hpp"

namespace ttlab {

namespace {

// Points this close to an endpoint are snapped to it, so atoms sitting on a
// dyadic endpoint land in the arc that starts there.
constexpr Real kEndpointSnap = 1e-12;

// Fit residuals below this fraction of max |f| on the arc are roundoff.
constexpr Real kRoundoffFloor = 1e-13;

}  // namespace

bool Arc::contains(Real angle) const {
  Real u = std::fmod(angle - start, kTwoPi);
  if (u < 0) u += kTwoPi;
  if (u > kTwoPi - kEndpointSnap) u = 0;
  return u < length() - kEndpointSnap;
}

ClarkMeasure lebesgue_grid(long nodes) {
  if (nodes < 1) throw std::invalid_argument("Lebesgue grid needs at least one node");
  ClarkMeasure nu{1.0, {}};
  for (long j = 0; j < nodes; ++j)
    nu.atoms.push_back({unit(kTwoPi * static_cast<Real>(j) / static_cast<Real>(nodes)), 1.0 / static_cast<Real>(nodes)});
  return nu;
}

std::vector<Complex> atom_values(const BoundarySymbol& f, const ClarkMeasure& nu) {
  std::vector<Complex> out;
  out.reserve(nu.atoms.size());
  for (const auto& a : nu.atoms) out.push_back(f(a.xi));
  return out;
}

OscillationValue oscillation(std::span<const Complex> values, const ClarkMeasure& nu, const Arc& arc, int degree,
                             MomentRule rule) {
  if (degree < 0) throw std::invalid_argument("oscillation degree must be nonnegative");
  if (values.size() != nu.atoms.size()) throw std::invalid_argument("one value per atom required");
  std::vector<std::size_t> inside;
  OscillationValue out;
  for (std::size_t j = 0; j < nu.atoms.size(); ++j)
    if (arc.contains(angle_of(nu.atoms[j].xi))) {
      inside.push_back(j);
      out.mass += nu.atoms[j].weight;
    }
  out.degree = degree;
  if (out.mass == 0) return out;

  const auto n = static_cast<Eigen::Index>(inside.size());
  VectorXc fit = VectorXc::Zero(n);
  int r = std::min<int>(degree, static_cast<int>(n) - 1);
  if (rule == MomentRule::projection) {
    // The moment conditions are the normal equations of weighted least squares
    // in the monomials 1, xi, ..., xi^r.
    VectorXc rhs(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& a = nu.atoms[inside[static_cast<std::size_t>(j)]];
      rhs[j] = std::sqrt(a.weight) * values[inside[static_cast<std::size_t>(j)]];
    }
    for (; r >= 0; --r) {
      MatrixXc v(n, r + 1);
      for (Eigen::Index j = 0; j < n; ++j) {
        const auto& a = nu.atoms[inside[static_cast<std::size_t>(j)]];
        Complex pw = std::sqrt(a.weight);
        for (int m = 0; m <= r; ++m, pw *= a.xi) v(j, m) = pw;
      }
      const Eigen::JacobiSVD<MatrixXc> svd(v);
      const auto& s = svd.singularValues();
      if (s[s.size() - 1] <= 1e-10 * s[0]) continue;
      // Householder QR keeps the lower-degree columns in the range to working
      // precision however ill-conditioned the monomials are on a short arc.
      const Eigen::HouseholderQR<MatrixXc> qr(v);
      const MatrixXc q = qr.householderQ() * MatrixXc::Identity(n, r + 1);
      fit = q * (q.adjoint() * rhs);
      for (Eigen::Index j = 0; j < n; ++j) fit[j] /= std::sqrt(nu.atoms[inside[static_cast<std::size_t>(j)]].weight);
      break;
    }
  }
  // The verbatim rule is a homogeneous system, so its nonsingular solution is P = 0.
  out.degree = std::max(r, 0);

  // An interpolating fit leaves no oscillation; returning exact zeros keeps
  // roundoff from being amplified by the p-th power when p < 1.
  if (rule == MomentRule::projection && n <= r + 1) return out;

  Real s = 0;
  Real scale = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const std::size_t i = inside[static_cast<std::size_t>(j)];
    s += nu.atoms[i].weight * std::abs(values[i] - fit[j]);
    scale = std::max(scale, std::abs(values[i]));
  }
  out.value = s / out.mass;
  if (rule == MomentRule::projection && out.value <= kRoundoffFloor * scale) out.value = 0;
  return out;
}

std::vector<Real> vmo_modulus(std::span<const Complex> values, const ClarkMeasure& nu, std::span<const Real> eps_grid) {
  if (values.size() != nu.atoms.size()) throw std::invalid_argument("one value per atom required");
  const std::size_t n = nu.atoms.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return angle_of(nu.atoms[a].xi) < angle_of(nu.atoms[b].xi); });

  // (mass, mean oscillation) of every contiguous cyclic run of atoms.
  std::vector<std::pair<Real, Real>> runs;
  auto add_run = [&](std::size_t first, std::size_t len) {
    Real mass = 0;
    Complex sum{};
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t j = order[(first + i) % n];
      mass += nu.atoms[j].weight;
      sum += nu.atoms[j].weight * values[j];
    }
    const Complex mean = sum / mass;
    Real dev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t j = order[(first + i) % n];
      dev += nu.atoms[j].weight * std::abs(values[j] - mean);
    }
    runs.emplace_back(mass, dev / mass);
  };
  for (std::size_t first = 0; first < n; ++first)
    for (std::size_t len = 1; len < n; ++len) add_run(first, len);
  if (n > 0) add_run(0, n);

  std::vector<Real> out;
  for (Real eps : eps_grid) {
    Real best = 0;
    for (const auto& [mass, osc] : runs)
      if (mass <= eps * (1 + 1e-12)) best = std::max(best, osc);
    out.push_back(best);
  }
  return out;
}

DyadicArcFamily dyadic_family(int generations, Real anchor, std::vector<Real> marked) {
  if (generations < 0) throw std::invalid_argument("generation count must be nonnegative");
  DyadicArcFamily fam;
  fam.anchor = anchor;
  if (marked.empty()) {
    fam.components.push_back({anchor, anchor + kTwoPi});
  } else {
    for (Real& m : marked) m = angle_of(unit(m));
    std::sort(marked.begin(), marked.end());
    marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
    for (std::size_t i = 0; i < marked.size(); ++i) {
      const Real next = i + 1 < marked.size() ? marked[i + 1] : marked.front() + kTwoPi;
      fam.components.push_back({marked[i], next});
    }
  }
  for (int k = 0; k <= generations; ++k) {
    const long pieces = 1L << k;
    std::vector<Arc> gen;
    for (const Arc& c : fam.components) {
      const Real step = c.length() / static_cast<Real>(pieces);
      for (long i = 0; i < pieces; ++i)
        gen.push_back({c.start + step * static_cast<Real>(i),
                       i + 1 == pieces ? c.end : c.start + step * static_cast<Real>(i + 1)});
    }
    fam.generations.push_back(std::move(gen));
  }
  return fam;
}

int default_generations(int degree) {
  return static_cast<int>(std::ceil(std::log2(std::max(degree, 1)))) + 4;
}

BesovValue besov_norm(std::span<const Complex> values, const ClarkMeasure& nu, Real p, const DyadicArcFamily& family,
                      MomentRule rule) {
  if (!(p > 0) || std::isinf(p)) throw std::invalid_argument("Besov exponent must be in (0, inf)");
  BesovValue out;
  out.degree = static_cast<int>(std::floor(1.0 / p));
  Real total = 0;
  for (const auto& gen : family.generations) {
    Real s = 0;
    for (const Arc& arc : gen) s += std::pow(oscillation(values, nu, arc, out.degree, rule).value, p);
    total += s;
    out.per_generation.push_back(std::pow(s, 1.0 / p));
  }
  out.norm = std::pow(total, 1.0 / p);
  out.last_generation = out.per_generation.empty() ? 0.0 : out.per_generation.back();
  return out;
}

ConjectureProbe conjecture_probe(const BlaschkeProduct& theta, Complex alpha, Real p,
                                 const std::vector<BoundarySymbol>& corpus, const QuadratureConfig& quadrature) {
  const ModelSpaceBasis basis(theta, quadrature);
  const StandardSymbolSpace space(theta, quadrature);
  const ClarkMeasure nu = nu_alpha(theta, alpha);
  ConjectureProbe probe;
  probe.p = p;
  probe.alpha = alpha;
  probe.generations = default_generations(theta.degree());
  const DyadicArcFamily family = dyadic_family(probe.generations);
  std::vector<Real> ratios;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ProbeRow row;
    row.index = i;
    row.schatten = schatten_norm(hankel_matrix(corpus[i], basis).entries, p);
    const StandardSymbol s = standard_symbol(corpus[i], space);
    row.besov = besov_norm(atom_values(s.symbol, nu), nu, p, family).norm;
    row.ratio = row.besov > 1e-14 ? row.schatten / row.besov : std::numeric_limits<Real>::quiet_NaN();
    if (std::isfinite(row.ratio)) ratios.push_back(row.ratio);
    probe.rows.push_back(row);
  }
  const Real nan = std::numeric_limits<Real>::quiet_NaN();
  probe.ratio_min = probe.ratio_max = probe.ratio_median = nan;
  if (!ratios.empty()) {
    std::sort(ratios.begin(), ratios.end());
    probe.ratio_min = ratios.front();
    probe.ratio_max = ratios.back();
    const std::size_t m = ratios.size() / 2;
    probe.ratio_median = ratios.size() % 2 ? ratios[m] : 0.5 * (ratios[m - 1] + ratios[m]);
  }
  return probe;
}

}  // namespace ttlab
