// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ttlab/experiments.hpp"
#include "ttlab/nehari.hpp"
#include "ttlab/oscillation.hpp"
#include "ttlab/sampling.hpp"
#include "ttlab/serialize.hpp"
#include "ttlab/spectra.hpp"
#include "ttlab/verify.hpp"

using namespace ttlab;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) passed = false;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [violated]");
  }
};

std::string fmt(Real x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void suites(Outcome& o, const RunConfig& cfg, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    const SuiteResult s = run_suite(name, cfg);
    o.require(s.passed(), std::string(name) + " max " + fmt(s.max_deviation) + " < " + fmt(s.tolerance) + " over " +
                              std::to_string(s.instances) + " (" + std::to_string(s.failed_instances) + " failed)");
  }
}

Outcome essential_and_decay(const RunConfig& cfg) {
  Outcome o;
  QuadratureConfig q = cfg.quadrature;
  q.tol = cfg.essential.quadrature_tol;
  const EssentialSpectrumReport rep = essential_spectrum_experiment(dyadic_radial_zero, BoundarySymbol::zbar(),
                                                                    cfg.essential.family_sizes, 0.05, q);
  Real previous = INFINITY;
  bool decreasing = true;
  bool small = true;
  std::string trail;
  for (const auto& row : rep.rows) {
    if (row.failed) {
      o.require(false, "N=" + std::to_string(row.family_size) + " failed");
      continue;
    }
    decreasing = decreasing && row.eigenvalue_distance < previous;
    previous = row.eigenvalue_distance;
    if (row.family_size >= 12) small = small && row.eigenvalue_distance < 0.05;
    trail += (trail.empty() ? "" : ",") + fmt(row.eigenvalue_distance);
  }
  o.require(small, "distance < 0.05 for N >= 12");
  o.require(decreasing, "distance decreasing [" + trail + "]");

  const std::vector<DecayRow> rows = test_vector_decay_experiment(
      dyadic_radial_zero, BoundarySymbol::zbar(), 0.0, 1.0, 0.0, std::vector<int>{12}, ZetaMode::fixed, cfg.quadrature);
  o.require(rows.size() == 1 && rows[0].ratio < 0.05, "test-vector ratio at n=12 " + fmt(rows.at(0).ratio) + " < 0.05");
  return o;
}

Outcome nehari(const RunConfig& cfg) {
  Outcome o;
  const SuiteResult s = run_suite("nehari_lower_bound", cfg);
  o.require(s.passed() && s.instances == 50, "norm <= dual + 1e-6 on " + std::to_string(s.instances) +
                                                 " instances, worst excess " + fmt(s.max_deviation));
  std::string constants;
  for (const auto& c : s.extra["empirical_constants"])
    constants += (constants.empty() ? "" : ",") + (c["empirical_constant"].is_null() ? std::string("nan")
                                                                                     : fmt(c["empirical_constant"]));
  o.require(true, "c_theta [" + constants + "]");

  const DistanceReport unit = nehari_gap(BoundarySymbol::zbar(), BlaschkeProduct::power(1), cfg.nehari.dual,
                                         cfg.quadrature);
  o.require(std::abs(unit.hankel_norm - 1) < 1e-8 && std::abs(unit.dual_value - 1) < 1e-8 &&
                std::abs(unit.ratio - 1) < 1e-8,
            "theta=z, phi=conj z gives (" + fmt(unit.hankel_norm) + "," + fmt(unit.dual_value) + "," +
                fmt(unit.ratio) + ")");
  return o;
}

std::vector<Complex> affine(const std::vector<Complex>& f, Complex scale, Complex shift) {
  std::vector<Complex> g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[i] = scale * f[i] + shift;
  return g;
}

Outcome oscillation_properties(const RunConfig& cfg) {
  Outcome o;
  Sampler s(cfg.sweep.seed);
  Real osc_err = 0, modulus_err = 0, besov_err = 0, constant_max = 0;
  const std::vector<Real> eps{0.05, 0.1, 0.25, 0.5, 1.0};
  for (int trial = 0; trial < 20; ++trial) {
    const BlaschkeProduct theta = s.blaschke(2 + trial % 7, cfg.sweep.max_radius);
    const ClarkMeasure nu = nu_alpha(theta, s.unimodular());
    std::vector<Complex> f;
    for (std::size_t i = 0; i < nu.atoms.size(); ++i) f.push_back(s.normal_complex());
    const Complex t = s.normal_complex() + 0.5;
    const Complex c = s.normal_complex() * 3.0;
    const std::vector<Complex> tf = affine(f, t, 0), fc = affine(f, 1, c), constant(f.size(), c);
    const Real start = s.uniform(0, kTwoPi);
    const Arc arc{start, start + s.uniform(0.1, kTwoPi)};
    const DyadicArcFamily family = dyadic_family(default_generations(theta.degree()), s.uniform(0, kTwoPi));

    for (int r = 0; r <= 2; ++r) {
      const Real base = oscillation(f, nu, arc, r).value;
      osc_err = std::max({osc_err, std::abs(oscillation(tf, nu, arc, r).value - std::abs(t) * base),
                          std::abs(oscillation(fc, nu, arc, r).value - base)});
      constant_max = std::max(constant_max, oscillation(constant, nu, arc, r).value);
    }
    const std::vector<Real> m = vmo_modulus(f, nu, eps), mt = vmo_modulus(tf, nu, eps),
                            mc = vmo_modulus(fc, nu, eps), m0 = vmo_modulus(constant, nu, eps);
    for (std::size_t e = 0; e < eps.size(); ++e) {
      modulus_err = std::max({modulus_err, std::abs(mt[e] - std::abs(t) * m[e]), std::abs(mc[e] - m[e])});
      constant_max = std::max(constant_max, m0[e]);
    }
    for (Real p : {0.5, 1.0, 2.0}) {
      const Real base = besov_norm(f, nu, p, family).norm;
      besov_err = std::max({besov_err, std::abs(besov_norm(tf, nu, p, family).norm - std::abs(t) * base),
                            std::abs(besov_norm(fc, nu, p, family).norm - base)});
      constant_max = std::max(constant_max, besov_norm(constant, nu, p, family).norm);
    }
  }
  o.require(osc_err < 1e-10, "osc homogeneity/shift " + fmt(osc_err));
  o.require(modulus_err < 1e-10, "M_eps homogeneity/shift " + fmt(modulus_err));
  o.require(besov_err < 1e-10, "B_p homogeneity/shift " + fmt(besov_err));
  o.require(constant_max < 1e-10, "constants annihilated " + fmt(constant_max));

  RunConfig probe = cfg;
  probe.conjecture.degrees = {2, 3};
  probe.conjecture.p_list = {0.5, 1.0, 2.0};
  probe.output_dir = cfg.output_dir + "/conjecture";
  const Json report = run_experiment("conjecture", probe);
  o.require(report["probes"].size() == 6, "conjecture table emitted with " +
                                              std::to_string(report["probes"].size()) + " (theta, p) blocks");
  return o;
}

Outcome determinism(const RunConfig& cfg) {
  Outcome o;
  const std::string first = dump(to_json(run_verify(cfg), cfg));
  const std::string second = dump(to_json(run_verify(cfg), cfg));
  o.require(!first.empty() && first == second, "verify reports byte-identical (" + std::to_string(first.size()) +
                                                   " bytes)");
  return o;
}

}  // namespace

int main() {
  RunConfig cfg;
  cfg.output_dir = "acceptance_out";

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"clark consistency",
       [&] {
         Outcome o;
         suites(o, cfg, {"clark_poisson", "clark_unitarity", "clark_reconstruction"});
         return o;
       }},
      {"cross-route equivalence",
       [&] {
         Outcome o;
         suites(o, cfg, {"unitary_equivalence"});
         return o;
       }},
      {"hankel-toeplitz link",
       [&] {
         Outcome o;
         suites(o, cfg, {"hankel_toeplitz_link"});
         return o;
       }},
      {"spectral mapping",
       [&] {
         Outcome o;
         suites(o, cfg, {"spectral_mapping"});
         return o;
       }},
      {"rank-one identity",
       [&] {
         Outcome o;
         suites(o, cfg, {"rank_one"});
         return o;
       }},
      {"zero and standard symbols",
       [&] {
         Outcome o;
         suites(o, cfg, {"zero_symbol", "standard_symbol"});
         return o;
       }},
      {"essential spectrum and test-vector decay", [&] { return essential_and_decay(cfg); }},
      {"nehari lower bound", [&] { return nehari(cfg); }},
      {"hilbert kernel unitarity",
       [&] {
         Outcome o;
         suites(o, cfg, {"hilbert_kernel_unitarity"});
         return o;
       }},
      {"oscillation properties", [&] { return oscillation_properties(cfg); }},
      {"determinism", [&] { return determinism(cfg); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s (%.1fs): %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
    failures += o.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
