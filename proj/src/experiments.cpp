#include "ttlab/experiments.hpp"

#include <filesystem>
#include <fstream>

#include "ttlab/sampling.hpp"

namespace ttlab {

namespace {

// Output files of one experiment run.
class OutputSet {
 public:
  explicit OutputSet(const std::string& dir) : dir_(dir) { std::filesystem::create_directories(dir_); }

  void json(const std::string& name, const Json& j) {
    std::ofstream out(dir_ / name);
    if (!out) throw std::runtime_error("cannot write " + (dir_ / name).string());
    out << dump(j);
    files_.push_back(name);
  }

  void csv(const std::string& name, const CsvTable& t) {
    t.write((dir_ / name).string());
    files_.push_back(name);
  }

  Json files() const { return files_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::string> files_;
};

Json header(const std::string& name, const RunConfig& cfg) {
  return Json{{"report", name}, {"seed", cfg.sweep.seed}};
}

Json essential(const RunConfig& cfg) {
  QuadratureConfig q = cfg.quadrature;
  q.tol = cfg.essential.quadrature_tol;
  const EssentialSpectrumReport rep = essential_spectrum_experiment(dyadic_radial_zero, BoundarySymbol::zbar(),
                                                                    cfg.essential.family_sizes, cfg.essential.delta, q);
  OutputSet out(cfg.output_dir);
  CsvTable eig({"N", "index", "re", "im"});
  CsvTable dist({"N", "eigenvalue_distance", "cluster_distance", "clusters"});
  for (const auto& row : rep.rows) {
    if (row.failed) continue;
    for (std::size_t i = 0; i < row.eigenvalues.size(); ++i)
      eig.row({std::to_string(row.family_size), std::to_string(i), format_real(row.eigenvalues[i].real()),
               format_real(row.eigenvalues[i].imag())});
    dist.row({std::to_string(row.family_size), format_real(row.eigenvalue_distance), format_real(row.cluster_distance),
              std::to_string(row.clusters.size())});
  }
  out.csv("essential_eigenvalues.csv", eig);
  out.csv("essential_distance.csv", dist);

  Json j = header("essential", cfg);
  j["zeros"] = "1 - 2^-n";
  j["symbol"] = to_json(TrigPoly::monomial(-1));
  j["quadrature_tol"] = q.tol;
  j["result"] = to_json(rep);
  out.json("essential.json", j);
  j["files"] = out.files();
  return j;
}

Json decay(const RunConfig& cfg) {
  OutputSet out(cfg.output_dir);
  Json j = header("lemma1", cfg);
  j["zeros"] = "1 - 2^-n";
  j["phi1"] = to_json(TrigPoly::monomial(-1));
  j["phi2"] = to_json(TrigPoly());
  j["zeta"] = to_json(Complex(1.0));
  CsvTable table({"n", "lambda", "ratio", "bound_continuous", "bound_analytic"});
  Json rows = Json::array();
  try {
    for (const DecayRow& r : test_vector_decay_experiment(dyadic_radial_zero, BoundarySymbol::zbar(), 0.0, 1.0, 0.0,
                                                          cfg.decay.steps, ZetaMode::fixed, cfg.quadrature)) {
      rows.push_back(to_json(r));
      table.row({std::to_string(r.n), format_real(r.lambda.real()), format_real(r.ratio),
                 format_real(r.bound_continuous), format_real(r.bound_analytic)});
    }
  } catch (const std::exception& e) {
    j["failure"] = e.what();
  }
  j["rows"] = rows;
  out.csv("test_vector_decay.csv", table);
  out.json("test_vector_decay.json", j);
  j["files"] = out.files();
  return j;
}

Json nehari(const RunConfig& cfg) {
  OutputSet out(cfg.output_dir);
  Sampler s(cfg.sweep.seed);
  CsvTable sweep({"theta", "symbol", "hankel_norm", "dual_value", "ratio"});
  Json thetas = Json::array();
  Json failures = Json::array();
  for (int t = 0; t < cfg.nehari.theta_count; ++t) {
    const BlaschkeProduct theta = s.blaschke(1 + t % cfg.nehari.max_degree, cfg.sweep.max_radius);
    EmpiricalConstant c_theta;
    Json reports = Json::array();
    for (int i = 0; i < cfg.nehari.symbols_per_theta; ++i) {
      const int n = s.uniform_int(1, std::max(1, cfg.sweep.band / 2));
      const TrigPoly phi = s.trig_poly(-n, n);
      try {
        const DistanceReport r = nehari_gap(phi, theta, cfg.nehari.dual, cfg.quadrature);
        c_theta.add(r);
        Json rj = to_json(r);
        rj["symbol"] = to_json(phi);
        reports.push_back(rj);
        sweep.row({std::to_string(t), std::to_string(i), format_real(r.hankel_norm), format_real(r.dual_value),
                   format_real(r.ratio)});
      } catch (const std::exception& e) {
        failures.push_back(Json{{"theta", t}, {"symbol", i}, {"error", e.what()}});
      }
    }
    thetas.push_back(Json{{"theta", to_json(theta)},
                          {"empirical_constant", real_json(c_theta.value())},
                          {"samples", c_theta.samples()},
                          {"reports", reports}});
  }
  out.csv("nehari_sweep.csv", sweep);

  const ConvolutionTable conv =
      convolution_example(BoundarySymbol::zbar(), BlaschkeProduct::power(2), cfg.nehari.radii, cfg.nehari.band);
  CsvTable conv_csv({"r", "smoothed_error", "inner_dilation_error"});
  for (const auto& r : conv.rows)
    conv_csv.row({format_real(r.r), format_real(r.smoothed_error), format_real(r.inner_dilation_error)});
  out.csv("convolution.csv", conv_csv);

  Json j = header("nehari", cfg);
  j["sweep"] = thetas;
  j["failures"] = failures;
  j["convolution"] = Json{{"symbol", to_json(TrigPoly::monomial(-1))},
                          {"inner", to_json(BlaschkeProduct::power(2))},
                          {"table", to_json(conv)}};
  out.json("nehari.json", j);
  j["files"] = out.files();
  return j;
}

Json besov(const RunConfig& cfg) {
  OutputSet out(cfg.output_dir);
  Sampler s(cfg.sweep.seed);
  const std::vector<BlaschkeProduct> thetas{BlaschkeProduct::power(2), BlaschkeProduct::power(3),
                                            s.blaschke(4, cfg.sweep.max_radius)};
  const MomentRule rule = cfg.besov.verbatim_moments ? MomentRule::verbatim : MomentRule::projection;
  CsvTable norms({"theta", "p", "norm", "last_generation"});
  CsvTable vmo({"theta", "eps", "M_eps"});
  Json profiles = Json::array();
  Json failures = Json::array();
  for (std::size_t t = 0; t < thetas.size(); ++t) {
    const TrigPoly phi = s.trig_poly(-2 * thetas[t].degree(), 0);
    try {
      const ClarkMeasure nu = nu_alpha(thetas[t], 1.0);
      const StandardSymbol st = standard_symbol(phi, thetas[t], cfg.quadrature);
      const std::vector<Complex> values = atom_values(st.symbol, nu);
      const int generations = cfg.besov.generations >= 0 ? cfg.besov.generations : default_generations(thetas[t].degree());
      const DyadicArcFamily family = dyadic_family(generations, cfg.besov.anchor);

      Json arcs = Json::array();
      for (std::size_t k = 0; k < family.generations.size(); ++k)
        for (const Arc& a : family.generations[k])
          arcs.push_back(Json{{"generation", k},
                              {"start", a.start},
                              {"end", a.end},
                              {"osc0", real_json(oscillation(values, nu, a, 0, rule).value)}});

      const std::vector<Real> curve = vmo_modulus(values, nu, cfg.besov.eps_grid);
      for (std::size_t e = 0; e < curve.size(); ++e)
        vmo.row({std::to_string(t), format_real(cfg.besov.eps_grid[e]), format_real(curve[e])});

      Json per_p = Json::array();
      for (Real p : cfg.besov.p_list) {
        const BesovValue b = besov_norm(values, nu, p, family, rule);
        Json bj = to_json(b);
        bj["p"] = p;
        per_p.push_back(bj);
        norms.row({std::to_string(t), format_real(p), format_real(b.norm), format_real(b.last_generation)});
      }
      profiles.push_back(Json{{"theta", to_json(thetas[t])},
                              {"alpha", to_json(Complex(1.0))},
                              {"symbol", to_json(phi)},
                              {"measure", to_json(nu)},
                              {"anchor", cfg.besov.anchor},
                              {"generations", generations},
                              {"moment_rule", cfg.besov.verbatim_moments ? "verbatim" : "projection"},
                              {"arcs", arcs},
                              {"vmo", Json{{"eps", cfg.besov.eps_grid}, {"M_eps", curve}}},
                              {"besov", per_p}});
    } catch (const std::exception& e) {
      failures.push_back(Json{{"theta", t}, {"error", e.what()}});
    }
  }
  out.csv("besov_norms.csv", norms);
  out.csv("vmo_modulus.csv", vmo);
  Json j = header("besov", cfg);
  j["profiles"] = profiles;
  j["failures"] = failures;
  out.json("besov.json", j);
  j["files"] = out.files();
  return j;
}

Json conjecture(const RunConfig& cfg) {
  OutputSet out(cfg.output_dir);
  Sampler s(cfg.sweep.seed);
  std::vector<BoundarySymbol> corpus;
  Json corpus_json = Json::array();
  for (int i = 0; i < cfg.conjecture.corpus; ++i) {
    const TrigPoly phi = s.trig_poly(-s.uniform_int(1, 8), s.uniform_int(0, 3));
    corpus.push_back(phi);
    corpus_json.push_back(to_json(phi));
  }
  const Complex alpha = unit(cfg.conjecture.alpha_angle);
  CsvTable table({"theta_degree", "p", "index", "schatten", "besov", "ratio"});
  Json probes = Json::array();
  Json failures = Json::array();
  for (int d : cfg.conjecture.degrees) {
    for (Real p : cfg.conjecture.p_list) {
      try {
        const ConjectureProbe probe = conjecture_probe(BlaschkeProduct::power(d), alpha, p, corpus, cfg.quadrature);
        Json pj = to_json(probe);
        pj["theta"] = to_json(BlaschkeProduct::power(d));
        probes.push_back(pj);
        for (const auto& r : probe.rows)
          table.row({std::to_string(d), format_real(p), std::to_string(r.index), format_real(r.schatten),
                     format_real(r.besov), format_real(r.ratio)});
      } catch (const std::exception& e) {
        failures.push_back(Json{{"theta_degree", d}, {"p", p}, {"error", e.what()}});
      }
    }
  }
  out.csv("conjecture.csv", table);
  Json j = header("conjecture", cfg);
  j["label"] = "exploratory, no pass/fail";
  j["corpus"] = corpus_json;
  j["probes"] = probes;
  j["failures"] = failures;
  out.json("conjecture.json", j);
  j["files"] = out.files();
  return j;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"essential", "lemma1", "nehari", "besov", "conjecture"};
  return names;
}

Json run_experiment(const std::string& name, const RunConfig& cfg) {
  if (name == "essential") return essential(cfg);
  if (name == "lemma1") return decay(cfg);
  if (name == "nehari") return nehari(cfg);
  if (name == "besov") return besov(cfg);
  if (name == "conjecture") return conjecture(cfg);
  throw ConfigError("unknown experiment " + name);
}

}  // namespace ttlab
