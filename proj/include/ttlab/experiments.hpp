#pragma once

#include <string>
#include <vector>

#include "ttlab/config.hpp"

namespace ttlab {

/// Experiment names accepted by run_experiment.
const std::vector<std::string>& experiment_names();

/// Runs a named experiment and writes its JSON and CSV files under
/// cfg.output_dir. Returns the JSON report, which records the seed and the
/// files written. Per-instance failures are logged in the report and the run
/// continues. Throws ConfigError for unknown names.
///
///   essential   eigenvalue clusters of A_{conj z} along zeros 1 - 2^{-n}
///   lemma1      test-vector ratios at those zeros with phi1 = conj z, zeta = 1
///   nehari      Hankel norm against dual distance, plus the convolution table
///   besov       oscillation profiles, M_eps curves and B_p norms
///   conjecture  Schatten norms paired with B_p(nu_alpha) norms, theta = z^d
Json run_experiment(const std::string& name, const RunConfig& cfg);

}  // namespace ttlab
