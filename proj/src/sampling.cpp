#include "ttlab/sampling.hpp"

#include <cmath>

namespace ttlab {

Real Sampler::uniform(Real lo, Real hi) { return std::uniform_real_distribution<Real>(lo, hi)(rng_); }

int Sampler::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Complex Sampler::normal_complex() {
  std::normal_distribution<Real> n(0.0, 1.0);
  const Real re = n(rng_);
  return {re, n(rng_)};
}

Complex Sampler::in_disk(Real radius) {
  const Real r = radius * std::sqrt(uniform(0.0, 1.0));
  return std::polar(r, uniform(0.0, kTwoPi));
}

Complex Sampler::unimodular() { return unit(uniform(0.0, kTwoPi)); }

BlaschkeProduct Sampler::blaschke(int degree, Real max_radius) {
  std::vector<Complex> zeros;
  for (int i = 0; i < degree; ++i) zeros.push_back(in_disk(max_radius));
  return BlaschkeProduct(std::move(zeros), unimodular());
}

TrigPoly Sampler::trig_poly(int lo, int hi) {
  std::map<int, Complex> c;
  for (int k = lo; k <= hi; ++k) c[k] = normal_complex() / (1.0 + std::abs(k));
  return TrigPoly(std::move(c));
}

VectorXc Sampler::normal_vector(int n) {
  VectorXc v(n);
  for (int i = 0; i < n; ++i) v[i] = normal_complex();
  return v;
}

}  // namespace ttlab
