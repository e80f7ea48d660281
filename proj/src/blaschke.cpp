#include "ttlab/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace ttlab {

Complex blaschke_factor(Complex lambda, Complex z) {
  if (lambda == Complex{}) return z;
  const Real r = std::abs(lambda);
  return (r / lambda) * (lambda - z) / (1.0 - std::conj(lambda) * z);
}

BlaschkeProduct::BlaschkeProduct(std::vector<Complex> zeros, Complex gamma)
    : zeros_(std::move(zeros)), gamma_(gamma) {
  for (Complex l : zeros_) {
    if (!(std::abs(l) < 1.0)) throw std::invalid_argument("Blaschke zero outside the open disk");
  }
  if (std::abs(std::abs(gamma_) - 1.0) > 1e-12)
    throw std::invalid_argument("Blaschke constant must be unimodular");
}

BlaschkeProduct BlaschkeProduct::power(int n) {
  return BlaschkeProduct(std::vector<Complex>(static_cast<std::size_t>(n), Complex{}));
}

Complex BlaschkeProduct::operator()(Complex z) const {
  Complex v = gamma_;
  for (Complex l : zeros_) v *= blaschke_factor(l, z);
  return v;
}

ArrayXc BlaschkeProduct::operator()(const ArrayXc& z) const {
  ArrayXc v = ArrayXc::Constant(z.size(), gamma_);
  for (Complex l : zeros_) {
    if (l == Complex{}) {
      v *= z;
    } else {
      const Complex c = std::abs(l) / l;
      v *= c * (l - z) / (1.0 - std::conj(l) * z);
    }
  }
  return v;
}

BlaschkeProduct BlaschkeProduct::square() const {
  std::vector<Complex> z = zeros_;
  z.insert(z.end(), zeros_.begin(), zeros_.end());
  return BlaschkeProduct(std::move(z), gamma_ * gamma_);
}

BlaschkeProduct BlaschkeProduct::leading(int k) const {
  return BlaschkeProduct(std::vector<Complex>(zeros_.begin(), zeros_.begin() + k));
}

Real BlaschkeProduct::derivative_modulus(Complex xi) const {
  Real s = 0;
  for (Complex l : zeros_) s += (1.0 - std::norm(l)) / std::norm(1.0 - std::conj(l) * xi);
  return s;
}

Real BlaschkeProduct::boundary_phase(Real t) const {
  // For l != 0: b_l(e^{it}) = -(|l|/l) e^{it} conj(w)/w with w = 1 - conj(l) e^{it},
  // and Re w > 0, so arg w is the principal value and varies continuously.
  Real phase = std::arg(gamma_);
  const Complex xi = unit(t);
  for (Complex l : zeros_) {
    phase += t;
    if (l == Complex{}) continue;
    const Complex w = 1.0 - std::conj(l) * xi;
    phase += std::numbers::pi - std::arg(l) - 2.0 * std::arg(w);
  }
  return phase;
}

namespace {

// Union-find over indices for single-linkage grouping.
struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

std::vector<Complex> boundary_spectrum_closure(std::span<const Complex> zeros, Real eps,
                                               Real link) {
  std::vector<Complex> deep;
  for (Complex l : zeros)
    if (std::abs(l) > 1.0 - eps) deep.push_back(l);
  DisjointSets sets(deep.size());
  for (std::size_t i = 0; i < deep.size(); ++i)
    for (std::size_t j = i + 1; j < deep.size(); ++j)
      if (std::abs(deep[i] / std::abs(deep[i]) - deep[j] / std::abs(deep[j])) <= link)
        sets.join(i, j);
  std::vector<Complex> out;
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < deep.size(); ++i) {
    const std::size_t r = sets.find(i);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      out.push_back(deep[i]);
    } else {
      Complex& best = out[static_cast<std::size_t>(it - roots.begin())];
      if (std::abs(deep[i]) > std::abs(best)) best = deep[i];
    }
  }
  for (Complex& c : out) c /= std::abs(c);
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) { return angle_of(a) < angle_of(b); });
  return out;
}

std::vector<Complex> boundary_spectrum_closure(std::span<const BlaschkeProduct> family, Real eps,
                                               Real link) {
  std::vector<Complex> zeros;
  for (const auto& theta : family)
    for (Complex l : theta.zeros())
      if (std::find(zeros.begin(), zeros.end(), l) == zeros.end()) zeros.push_back(l);
  return boundary_spectrum_closure(zeros, eps, link);
}

namespace {

// Components of the sublevel set on a polar raster; sizes receives cell counts.
int count_components(const BlaschkeProduct& theta, Real eps, int nr, int nt,
                     std::vector<int>& sizes) {
  std::vector<char> in(static_cast<std::size_t>(nr * nt), 0);
  for (int i = 0; i < nr; ++i) {
    const Real r = (i + 0.5) / nr;
    for (int j = 0; j < nt; ++j) {
      const Complex z = std::polar(r, kTwoPi * (j + 0.5) / nt);
      in[static_cast<std::size_t>(i * nt + j)] = std::abs(theta(z)) < eps;
    }
  }
  std::vector<int> label(in.size(), -1);
  int count = 0;
  sizes.clear();
  for (std::size_t start = 0; start < in.size(); ++start) {
    if (!in[start] || label[start] >= 0) continue;
    int size = 0;
    std::queue<std::size_t> q;
    q.push(start);
    label[start] = count;
    while (!q.empty()) {
      const std::size_t c = q.front();
      q.pop();
      ++size;
      const int i = static_cast<int>(c) / nt;
      const int j = static_cast<int>(c) % nt;
      std::vector<std::size_t> nbrs;
      nbrs.push_back(static_cast<std::size_t>(i * nt + (j + 1) % nt));
      nbrs.push_back(static_cast<std::size_t>(i * nt + (j + nt - 1) % nt));
      if (i + 1 < nr) nbrs.push_back(static_cast<std::size_t>((i + 1) * nt + j));
      if (i > 0) nbrs.push_back(static_cast<std::size_t>((i - 1) * nt + j));
      if (i == 0) {
        // Innermost wedges all meet at the origin.
        for (int k = 0; k < nt; ++k) nbrs.push_back(static_cast<std::size_t>(k));
      }
      for (std::size_t n : nbrs) {
        if (in[n] && label[n] < 0) {
          label[n] = count;
          q.push(n);
        }
      }
    }
    sizes.push_back(size);
    ++count;
  }
  return count;
}

}  // namespace

ComponentReport one_component_diagnostic(const BlaschkeProduct& theta, Real eps,
                                         int radial_cells, int angular_cells) {
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0, 1)");
  ComponentReport rep;
  rep.radial_cells = radial_cells;
  rep.angular_cells = angular_cells;
  std::vector<int> coarse_sizes;
  std::vector<int> fine_sizes;
  rep.components = count_components(theta, eps, radial_cells, angular_cells, coarse_sizes);
  rep.components_fine =
      count_components(theta, eps, 2 * radial_cells, 2 * angular_cells, fine_sizes);
  const bool resolved =
      std::all_of(coarse_sizes.begin(), coarse_sizes.end(), [](int s) { return s >= 4; });
  if (rep.components != rep.components_fine || !resolved || rep.components == 0) {
    rep.verdict = Connectivity::inconclusive;
  } else {
    rep.verdict = rep.components == 1 ? Connectivity::connected : Connectivity::disconnected;
  }
  return rep;
}

}  // namespace ttlab
