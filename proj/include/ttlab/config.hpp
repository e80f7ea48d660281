#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttlab/serialize.hpp"

namespace ttlab {

/// Invalid or unreadable configuration; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  std::uint64_t seed = 20240601;
  /// Size of the operator sweep corpus (link, spectral mapping, standard symbols).
  int instances = 100;
  int max_degree = 8;
  Real max_radius = 0.9;
  /// Trig-polynomial symbols use indices in [-band, band].
  int band = 16;
  /// Size of the Clark, equivalence, rank-one, zero-symbol and Nehari corpora.
  int clark_instances = 50;
  int clark_max_degree = 10;
  int alphas_per_instance = 4;
  int points_per_instance = 100;
};

struct EssentialConfig {
  std::vector<int> family_sizes{2, 4, 6, 8, 10, 12, 13, 14};
  Real delta = 0.05;
  /// Quadrature tolerance for this experiment; zeros at 1 - 2^{-N} put the
  /// roundoff floor of the basis integrals near 1e-12 once N exceeds 12.
  Real quadrature_tol = 1e-11;
};

struct DecayConfig {
  std::vector<int> steps{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
};

struct NehariConfig {
  int theta_count = 5;
  int symbols_per_theta = 10;
  int max_degree = 4;
  DualConfig dual;
  std::vector<Real> radii{0.5, 0.9, 0.99, 0.999};
  int band = 16;
};

struct BesovConfig {
  std::vector<Real> eps_grid{0.05, 0.1, 0.2, 0.3, 0.5, 0.75, 1.0};
  std::vector<Real> p_list{0.5, 1.0, 2.0};
  /// Negative means ceil(log2 d) + 4.
  int generations = -1;
  Real anchor = 0;
  bool verbatim_moments = false;
};

struct ConjectureConfig {
  std::vector<int> degrees{2, 3};
  std::vector<Real> p_list{0.5, 1.0, 2.0};
  Real alpha_angle = 0;
  int corpus = 20;
};

struct RunConfig {
  QuadratureConfig quadrature;
  SweepConfig sweep;
  EssentialConfig essential;
  DecayConfig decay;
  NehariConfig nehari;
  BesovConfig besov;
  ConjectureConfig conjecture;
  std::string output_dir = "ttlab_out";
};

/// Environment variable that overrides output_dir.
inline constexpr const char* kOutputDirEnv = "TTLAB_OUTPUT_DIR";

/// Keys absent from `j` keep their defaults; unknown keys are rejected.
RunConfig config_from_json(const Json& j);
RunConfig load_config(const std::string& path);
Json to_json(const RunConfig& cfg);

/// Throws ConfigError unless every tolerance and count is positive and
/// every list is usable.
void validate(const RunConfig& cfg);

/// Applies the output directory override from the environment, if set.
void apply_environment(RunConfig& cfg);

}  // namespace ttlab
