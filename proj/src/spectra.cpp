#include "ttlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "ttlab/linalg.hpp"

namespace ttlab {

namespace {

bool by_real_then_imag(Complex a, Complex b) {
  return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

Real farthest_nearest(std::span<const Complex> from, std::span<const Complex> to) {
  if (from.empty()) return 0;
  if (to.empty()) return std::numeric_limits<Real>::infinity();
  Real worst = 0;
  for (Complex a : from) {
    Real best = std::numeric_limits<Real>::infinity();
    for (Complex b : to) best = std::min(best, std::abs(a - b));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

SpectralReport spectral_report(const MatrixXc& m, std::span<const Real> p_list) {
  SpectralReport rep;
  rep.singular_values = singular_values(m);
  for (Real p : p_list) rep.schatten[p] = schatten_norm(rep.singular_values, p);
  if (m.rows() != m.cols() || m.size() == 0) return rep;

  Eigen::ComplexEigenSolver<MatrixXc> es(m, true);
  if (es.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigensolver did not converge on\n" << m;
    throw CheckFailure(msg.str(), std::numeric_limits<Real>::infinity());
  }
  const auto& ev = es.eigenvalues();
  rep.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(), by_real_then_imag);
  const auto s = singular_values(es.eigenvectors());
  rep.eigenvector_condition = s.back() > 0 ? s.front() / s.back() : std::numeric_limits<Real>::infinity();
  return rep;
}

std::vector<Cluster> single_linkage_clusters(std::span<const Complex> points, Real delta) {
  const std::size_t n = points.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(points[i] - points[j]) <= delta) parent[find(i)] = find(j);

  std::map<std::size_t, std::vector<Complex>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(points[i]);
  std::vector<Cluster> out;
  for (const auto& [root, members] : groups) {
    Cluster c;
    c.count = static_cast<int>(members.size());
    for (Complex p : members) c.center += p;
    c.center /= static_cast<Real>(members.size());
    for (Complex p : members) c.radius = std::max(c.radius, std::abs(p - c.center));
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) { return by_real_then_imag(a.center, b.center); });
  return out;
}

Complex dyadic_radial_zero(int n) { return 1.0 - std::ldexp(1.0, -n); }

EssentialSpectrumReport essential_spectrum_experiment(const ZeroGenerator& zeros, const BoundarySymbol& phi,
                                                      std::span<const int> family_sizes, Real delta,
                                                      const QuadratureConfig& quadrature) {
  EssentialSpectrumReport rep;
  rep.delta = delta;
  const int n_max = family_sizes.empty() ? 0 : *std::max_element(family_sizes.begin(), family_sizes.end());
  std::vector<Complex> all;
  for (int n = 1; n <= n_max; ++n) all.push_back(zeros(n));
  rep.accumulation_points = boundary_spectrum_closure(all);
  for (Complex xi : rep.accumulation_points) rep.target.push_back(phi(xi));

  for (int big_n : family_sizes) {
    ClusterReport row;
    row.family_size = big_n;
    try {
      const ModelSpaceBasis basis(BlaschkeProduct(std::vector<Complex>(all.begin(), all.begin() + big_n)), quadrature);
      const SpectralReport s = spectral_report(toeplitz_matrix(phi, basis).entries);
      row.eigenvalues = s.eigenvalues;
      row.clusters = single_linkage_clusters(row.eigenvalues, delta);
      row.eigenvalue_distance = farthest_nearest(rep.target, row.eigenvalues);
      std::vector<Complex> centers;
      for (const auto& c : row.clusters) centers.push_back(c.center);
      row.cluster_distance = farthest_nearest(rep.target, centers);
    } catch (const QuadratureError& e) {
      row.failed = true;
      row.failure = e.what();
      row.quadrature_nodes = e.nodes_reached();
    } catch (const CheckFailure& e) {
      row.failed = true;
      row.failure = e.what();
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::vector<DecayRow> test_vector_decay_experiment(const ZeroGenerator& zeros, const BoundarySymbol& phi1,
                                                   const BoundarySymbol& phi2, Complex zeta1, Complex zeta2,
                                                   std::span<const int> steps, ZetaMode mode,
                                                   const QuadratureConfig& quadrature) {
  std::vector<DecayRow> rows;
  if (steps.empty()) return rows;
  const int n_max = *std::max_element(steps.begin(), steps.end());
  std::vector<Complex> list;
  for (int n = 1; n <= n_max; ++n) list.push_back(zeros(n));
  const ModelSpaceBasis basis(BlaschkeProduct(list), quadrature);
  for (int n : steps) {
    DecayRow row;
    row.n = n;
    row.lambda = list[static_cast<std::size_t>(n - 1)];
    const Complex z2 = mode == ZetaMode::track_analytic ? phi2.analytic_eval(row.lambda) : zeta2;
    row.zeta = zeta1 + z2;
    const TestVectorEstimate e = test_vector_ratio(basis, phi1, phi2, row.lambda, zeta1, z2);
    row.ratio = e.ratio;
    row.bound_continuous = e.bound_continuous;
    row.bound_analytic = e.bound_analytic;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ttlab
