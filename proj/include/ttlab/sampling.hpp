#pragma once

#include <cstdint>
#include <random>

#include "ttlab/model_space.hpp"

namespace ttlab {

/// Seeded generator for sweep corpora; every draw goes through one engine so
/// a corpus is a pure function of the seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Real uniform(Real lo, Real hi);
  int uniform_int(int lo, int hi);
  Complex normal_complex();
  /// Uniform in the disk of the given radius.
  Complex in_disk(Real radius);
  Complex unimodular();
  BlaschkeProduct blaschke(int degree, Real max_radius);
  /// Coefficients lo..hi, standard complex normal scaled by 1/(1 + |k|).
  TrigPoly trig_poly(int lo, int hi);
  VectorXc normal_vector(int n);

 private:
  std::mt19937_64 rng_;
};

}  // namespace ttlab
