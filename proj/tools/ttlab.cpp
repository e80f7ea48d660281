// Command-line front end: verification suites, single-object reports and experiments.
//
// Exit codes: 0 pass, 1 check failure, 2 configuration error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ttlab/clark.hpp"
#include "ttlab/experiments.hpp"
#include "ttlab/verify.hpp"

using namespace ttlab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheck = 1;
constexpr int kExitConfig = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

Real parse_real(const std::string& s) {
  std::size_t used = 0;
  Real x = 0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw ConfigError("not a number: '" + s + "'");
  return x;
}

Complex parse_complex(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() == 1) return parse_real(parts[0]);
  if (parts.size() == 2) return {parse_real(parts[0]), parse_real(parts[1])};
  throw ConfigError("expected re or re,im: '" + s + "'");
}

// "re,im;re,im;..." (a bare "re" is a real zero).
BlaschkeProduct parse_zeros(const std::string& s, Real gamma_angle) {
  std::vector<Complex> zeros;
  for (const auto& z : split(s, ';')) zeros.push_back(parse_complex(z));
  if (zeros.empty()) throw ConfigError("--zeros needs at least one zero");
  for (Complex z : zeros)
    if (!(std::abs(z) < 1)) throw ConfigError("zeros must lie in the open unit disk");
  return BlaschkeProduct(std::move(zeros), unit(gamma_angle));
}

// "k:re,im;k:re;..." as sum c_k z^k.
TrigPoly parse_symbol(const std::string& s) {
  std::map<int, Complex> c;
  for (const auto& term : split(s, ';')) {
    const auto colon = term.find(':');
    if (colon == std::string::npos) throw ConfigError("symbol terms are k:re[,im], got '" + term + "'");
    int k = 0;
    try {
      k = std::stoi(term.substr(0, colon));
    } catch (const std::exception&) {
      throw ConfigError("bad Fourier index in '" + term + "'");
    }
    c[k] += parse_complex(term.substr(colon + 1));
  }
  return TrigPoly(std::move(c));
}

std::vector<Real> parse_reals(const std::string& s) {
  std::vector<Real> out;
  for (const auto& x : split(s, ',')) out.push_back(parse_real(x));
  return out;
}

void write_json(const RunConfig& cfg, const std::string& name, const Json& j) {
  std::filesystem::create_directories(cfg.output_dir);
  const auto path = std::filesystem::path(cfg.output_dir) / name;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump(j);
}

void write_csv(const RunConfig& cfg, const std::string& name, const CsvTable& t) {
  std::filesystem::create_directories(cfg.output_dir);
  t.write((std::filesystem::path(cfg.output_dir) / name).string());
}

Json object_header(const std::string& report, const RunConfig& cfg) {
  return Json{{"report", report}, {"seed", cfg.sweep.seed}};
}

struct ObjectArgs {
  std::string zeros;
  Real gamma_angle = 0;
  std::string symbol = "-1:1";
  std::string kind = "toeplitz";
  Real alpha_angle = 0;
  long samples = 256;
  std::string p_list = "1,2";
};

OperatorMatrix assemble(const ObjectArgs& a, const ModelSpaceBasis& basis) {
  const TrigPoly phi = parse_symbol(a.symbol);
  if (a.kind == "toeplitz") return toeplitz_matrix(phi, basis);
  if (a.kind == "hankel") return hankel_matrix(phi, basis);
  throw ConfigError("--kind must be toeplitz or hankel");
}

int cmd_basis(const RunConfig& cfg, const ObjectArgs& a) {
  const ModelSpaceBasis basis(parse_zeros(a.zeros, a.gamma_angle), cfg.quadrature);
  Json j = object_header("basis", cfg);
  j["theta"] = to_json(basis.theta());
  j["dim"] = basis.dim();
  j["gram_deviation"] = real_json(basis.gram_deviation());
  j["samples"] = a.samples;
  write_json(cfg, "basis.json", j);
  write_csv(cfg, "basis_samples.csv", basis_samples_csv(basis, a.samples));
  std::cout << "basis: dim " << basis.dim() << ", Gram deviation " << basis.gram_deviation() << '\n';
  return kExitPass;
}

int cmd_op_matrix(const RunConfig& cfg, const ObjectArgs& a) {
  const ModelSpaceBasis basis(parse_zeros(a.zeros, a.gamma_angle), cfg.quadrature);
  const OperatorMatrix op = assemble(a, basis);
  Json j = object_header("op-matrix", cfg);
  j["theta"] = to_json(basis.theta());
  j["symbol"] = to_json(parse_symbol(a.symbol));
  j["kind"] = a.kind;
  j["matrix"] = to_json(op);
  write_json(cfg, "op_matrix.json", j);
  write_csv(cfg, "op_matrix.csv", matrix_csv(op.entries));
  std::cout << a.kind << " matrix: " << op.entries.rows() << "x" << op.entries.cols() << ", norm " << op.norm() << '\n';
  return kExitPass;
}

int cmd_clark(const RunConfig& cfg, const ObjectArgs& a) {
  const BlaschkeProduct theta = parse_zeros(a.zeros, a.gamma_angle);
  const ModelSpaceBasis basis(theta, cfg.quadrature);
  const Complex alpha = unit(a.alpha_angle);
  const ClarkMeasure plus = clark_measure(theta, alpha);
  const ClarkMeasure minus = clark_measure(theta, -alpha);
  const OperatorMatrix v = clark_unitary(basis, plus);
  const HilbertTransform h = hilbert_transform(basis, alpha);
  Json j = object_header("clark", cfg);
  j["theta"] = to_json(theta);
  j["sigma_alpha"] = to_json(plus);
  j["sigma_minus_alpha"] = to_json(minus);
  j["nu_alpha"] = to_json(nu_alpha(theta, alpha));
  j["clark_unitary"] = to_json(v);
  j["hilbert_direct"] = to_json(h.direct);
  j["hilbert_unitarity_deviation"] = real_json(h.unitarity_deviation);
  j["hilbert_route_deviation"] = real_json(h.route_deviation);
  write_json(cfg, "clark.json", j);
  std::cout << "clark: " << plus.atoms.size() << " atoms, H unitarity deviation " << h.unitarity_deviation << '\n';
  return kExitPass;
}

int cmd_spectrum(const RunConfig& cfg, const ObjectArgs& a) {
  const ModelSpaceBasis basis(parse_zeros(a.zeros, a.gamma_angle), cfg.quadrature);
  const OperatorMatrix op = assemble(a, basis);
  const std::vector<Real> p = parse_reals(a.p_list);
  for (Real x : p)
    if (!(x > 0)) throw ConfigError("--p entries must be positive");
  const SpectralReport r = spectral_report(op.entries, p);
  Json j = object_header("spectrum", cfg);
  j["theta"] = to_json(basis.theta());
  j["symbol"] = to_json(parse_symbol(a.symbol));
  j["kind"] = a.kind;
  j["spectrum"] = to_json(r);
  write_json(cfg, "spectrum.json", j);
  CsvTable t({"index", "re", "im"});
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i)
    t.row({std::to_string(i), format_real(r.eigenvalues[i].real()), format_real(r.eigenvalues[i].imag())});
  write_csv(cfg, "spectrum_eigenvalues.csv", t);
  std::cout << "spectrum: " << r.eigenvalues.size() << " eigenvalues, s_1 = " << r.singular_values.front() << '\n';
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& only) {
  VerifyReport report;
  report.seed = cfg.sweep.seed;
  const std::vector<std::string>& names = only.empty() ? verify_suite_names() : only;
  for (const auto& name : names) {
    try {
      report.suites.push_back(run_suite(name, cfg));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const SuiteResult& s = report.suites.back();
    std::cout << (s.passed() ? "PASS " : "FAIL ") << s.name << "  max deviation " << s.max_deviation << " (tol "
              << s.tolerance << ", " << s.instances - s.failed_instances << "/" << s.instances << " instances)\n";
  }
  write_json(cfg, "verify.json", to_json(report, cfg));
  int passed = 0;
  for (const auto& s : report.suites) passed += s.passed() ? 1 : 0;
  std::cout << passed << "/" << report.suites.size() << " suites passed\n";
  return report.passed() ? kExitPass : kExitCheck;
}

int cmd_experiment(const std::string& name, const RunConfig& cfg) {
  const Json j = run_experiment(name, cfg);
  std::cout << name << ": wrote";
  for (const auto& f : j.at("files")) std::cout << ' ' << f.get<std::string>();
  std::cout << " to " << cfg.output_dir << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated Toeplitz and Hankel operators on model spaces of finite Blaschke products"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> config_path;
  std::optional<std::string> output_dir;
  std::optional<std::uint64_t> seed;
  std::optional<Real> quad_tol;
  std::optional<long> quad_initial;
  std::optional<long> quad_max;
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--output-dir", output_dir, std::string("Output directory (overrides the config and ") + kOutputDirEnv + ")");
  app.add_option("--seed", seed, "Sweep seed");
  app.add_option("--quad-tol", quad_tol, "Quadrature doubling tolerance");
  app.add_option("--quad-initial-nodes", quad_initial, "Initial quadrature nodes");
  app.add_option("--quad-max-nodes", quad_max, "Quadrature node cap");

  std::vector<std::string> suites;
  auto* verify = app.add_subcommand("verify", "Run the invariant suites; exit 0 iff all pass");
  verify->add_option("--suite", suites, "Run only these suites");

  ObjectArgs obj;
  auto add_theta = [&](CLI::App* sub) {
    sub->add_option("--zeros", obj.zeros, "Zeros as re,im;re,im;...")->required();
    sub->add_option("--gamma-angle", obj.gamma_angle, "Angle of the unimodular constant");
  };
  auto add_symbol = [&](CLI::App* sub) {
    sub->add_option("--symbol", obj.symbol, "Trigonometric polynomial as k:re,im;k:re,im;...")->capture_default_str();
    sub->add_option("--kind", obj.kind, "toeplitz or hankel")->capture_default_str();
  };
  auto* basis = app.add_subcommand("basis", "Takenaka-Malmquist basis samples and Gram check");
  add_theta(basis);
  basis->add_option("--samples", obj.samples, "Grid size for the sample export")->capture_default_str();
  auto* op = app.add_subcommand("op-matrix", "Toeplitz or Hankel matrix on K_theta");
  add_theta(op);
  add_symbol(op);
  auto* clark = app.add_subcommand("clark", "Clark measures, Clark unitary and Hilbert kernel");
  add_theta(clark);
  clark->add_option("--alpha-angle", obj.alpha_angle, "Angle of alpha")->capture_default_str();
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues, singular values and Schatten norms");
  add_theta(spectrum);
  add_symbol(spectrum);
  spectrum->add_option("--p", obj.p_list, "Schatten exponents, comma separated")->capture_default_str();

  std::optional<std::string> family_sizes, steps, p_list, degrees, radii;
  std::optional<Real> delta, anchor;
  std::optional<int> generations, random_starts, corpus;
  bool verbatim = false;
  auto* essential = app.add_subcommand("essential", "Eigenvalue clusters along zeros 1 - 2^-n");
  essential->add_option("--family-sizes", family_sizes, "N list, comma separated");
  essential->add_option("--delta", delta, "Cluster scale");
  auto* lemma1 = app.add_subcommand("lemma1", "Test-vector ratio decay table");
  lemma1->alias("decay");
  lemma1->add_option("--steps", steps, "n list, comma separated");
  auto* nehari = app.add_subcommand("nehari", "Hankel norm against dual distance; convolution table");
  nehari->add_option("--random-starts", random_starts, "Random starts per dual solve");
  nehari->add_option("--radii", radii, "Dilation radii, comma separated");
  auto* besov = app.add_subcommand("besov", "Oscillation profiles and B_p norms");
  besov->add_option("--generations", generations, "Dyadic generations (negative: default)");
  besov->add_option("--anchor", anchor, "Dyadic anchor angle");
  besov->add_option("--p", p_list, "Exponents, comma separated");
  besov->add_flag("--verbatim-moments", verbatim, "Use the homogeneous moment rule");
  auto* conjecture = app.add_subcommand("conjecture", "Exploratory Schatten/Besov pairing");
  conjecture->add_option("--degrees", degrees, "Degrees d of theta = z^d, comma separated");
  conjecture->add_option("--p", p_list, "Exponents, comma separated");
  conjecture->add_option("--corpus", corpus, "Number of random symbols");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  auto ints = [](const std::string& s) {
    std::vector<int> out;
    for (Real x : parse_reals(s)) {
      if (x != std::floor(x)) throw ConfigError("expected integers: '" + s + "'");
      out.push_back(static_cast<int>(x));
    }
    return out;
  };

  RunConfig cfg;
  try {
    if (config_path) cfg = load_config(*config_path);
    apply_environment(cfg);
    if (output_dir) cfg.output_dir = *output_dir;
    if (seed) {
      cfg.sweep.seed = *seed;
      cfg.nehari.dual.seed = *seed;
    }
    if (quad_tol) cfg.quadrature.tol = *quad_tol;
    if (quad_initial) cfg.quadrature.initial_nodes = *quad_initial;
    if (quad_max) cfg.quadrature.max_nodes = *quad_max;
    if (family_sizes) cfg.essential.family_sizes = ints(*family_sizes);
    if (delta) cfg.essential.delta = *delta;
    if (steps) cfg.decay.steps = ints(*steps);
    if (random_starts) cfg.nehari.dual.random_starts = *random_starts;
    if (radii) cfg.nehari.radii = parse_reals(*radii);
    if (generations) cfg.besov.generations = *generations;
    if (anchor) cfg.besov.anchor = *anchor;
    if (verbatim) cfg.besov.verbatim_moments = true;
    if (p_list) (besov->parsed() ? cfg.besov.p_list : cfg.conjecture.p_list) = parse_reals(*p_list);
    if (degrees) cfg.conjecture.degrees = ints(*degrees);
    if (corpus) cfg.conjecture.corpus = *corpus;
    validate(cfg);

    if (verify->parsed()) return cmd_verify(cfg, suites);
    if (basis->parsed()) return cmd_basis(cfg, obj);
    if (op->parsed()) return cmd_op_matrix(cfg, obj);
    if (clark->parsed()) return cmd_clark(cfg, obj);
    if (spectrum->parsed()) return cmd_spectrum(cfg, obj);
    for (const auto& name : experiment_names())
      if (app.got_subcommand(name)) return cmd_experiment(name, cfg);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "check failure: " << e.what() << '\n';
    return kExitCheck;
  }
  return kExitConfig;
}
