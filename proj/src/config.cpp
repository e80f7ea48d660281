#include "ttlab/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>

namespace ttlab {

namespace {

// Reads the keys of one JSON object into fields, rejecting keys it does not know.
class Reader {
 public:
  Reader(const Json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) throw ConfigError(where_ + " must be a JSON object");
  }

  template <typename T>
  Reader& field(const char* key, T& out) {
    seen_.insert(key);
    if (!j_.contains(key)) return *this;
    try {
      out = j_.at(key).get<T>();
    } catch (const Json::exception& e) {
      throw ConfigError(where_ + "." + key + ": " + e.what());
    }
    return *this;
  }

  template <typename F>
  Reader& object(const char* key, F&& read) {
    seen_.insert(key);
    if (j_.contains(key)) read(Reader(j_.at(key), where_ + "." + key));
    return *this;
  }

  void finish() const {
    for (const auto& [key, value] : j_.items())
      if (!seen_.count(key)) throw ConfigError("unknown configuration key " + where_ + "." + key);
  }

 private:
  const Json& j_;
  std::string where_;
  std::set<std::string> seen_;
};

}  // namespace

RunConfig config_from_json(const Json& j) {
  RunConfig c;
  Reader root(j, "config");
  root.object("quadrature", [&](Reader r) {
        r.field("initial_nodes", c.quadrature.initial_nodes)
            .field("max_nodes", c.quadrature.max_nodes)
            .field("tol", c.quadrature.tol)
            .finish();
      })
      .object("sweep", [&](Reader r) {
        r.field("seed", c.sweep.seed)
            .field("instances", c.sweep.instances)
            .field("max_degree", c.sweep.max_degree)
            .field("max_radius", c.sweep.max_radius)
            .field("band", c.sweep.band)
            .field("clark_instances", c.sweep.clark_instances)
            .field("clark_max_degree", c.sweep.clark_max_degree)
            .field("alphas_per_instance", c.sweep.alphas_per_instance)
            .field("points_per_instance", c.sweep.points_per_instance)
            .finish();
      })
      .object("essential", [&](Reader r) {
        r.field("family_sizes", c.essential.family_sizes)
            .field("delta", c.essential.delta)
            .field("quadrature_tol", c.essential.quadrature_tol)
            .finish();
      })
      .object("decay", [&](Reader r) { r.field("steps", c.decay.steps).finish(); })
      .object("nehari", [&](Reader r) {
        r.field("theta_count", c.nehari.theta_count)
            .field("symbols_per_theta", c.nehari.symbols_per_theta)
            .field("max_degree", c.nehari.max_degree)
            .field("l1_nodes", c.nehari.dual.l1_nodes)
            .field("certify_nodes", c.nehari.dual.certify_nodes)
            .field("max_iterations", c.nehari.dual.max_iterations)
            .field("random_starts", c.nehari.dual.random_starts)
            .field("radii", c.nehari.radii)
            .field("band", c.nehari.band)
            .finish();
      })
      .object("besov", [&](Reader r) {
        r.field("eps_grid", c.besov.eps_grid)
            .field("p_list", c.besov.p_list)
            .field("generations", c.besov.generations)
            .field("anchor", c.besov.anchor)
            .field("verbatim_moments", c.besov.verbatim_moments)
            .finish();
      })
      .object("conjecture", [&](Reader r) {
        r.field("degrees", c.conjecture.degrees)
            .field("p_list", c.conjecture.p_list)
            .field("alpha_angle", c.conjecture.alpha_angle)
            .field("corpus", c.conjecture.corpus)
            .finish();
      })
      .field("output_dir", c.output_dir)
      .finish();
  c.nehari.dual.seed = c.sweep.seed;
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read configuration file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("configuration file " + path + " is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

Json to_json(const RunConfig& c) {
  return Json{{"quadrature", {{"initial_nodes", c.quadrature.initial_nodes},
                              {"max_nodes", c.quadrature.max_nodes},
                              {"tol", c.quadrature.tol}}},
              {"sweep", {{"seed", c.sweep.seed},
                         {"instances", c.sweep.instances},
                         {"max_degree", c.sweep.max_degree},
                         {"max_radius", c.sweep.max_radius},
                         {"band", c.sweep.band},
                         {"clark_instances", c.sweep.clark_instances},
                         {"clark_max_degree", c.sweep.clark_max_degree},
                         {"alphas_per_instance", c.sweep.alphas_per_instance},
                         {"points_per_instance", c.sweep.points_per_instance}}},
              {"essential", {{"family_sizes", c.essential.family_sizes},
                             {"delta", c.essential.delta},
                             {"quadrature_tol", c.essential.quadrature_tol}}},
              {"decay", {{"steps", c.decay.steps}}},
              {"nehari", {{"theta_count", c.nehari.theta_count},
                          {"symbols_per_theta", c.nehari.symbols_per_theta},
                          {"max_degree", c.nehari.max_degree},
                          {"l1_nodes", c.nehari.dual.l1_nodes},
                          {"certify_nodes", c.nehari.dual.certify_nodes},
                          {"max_iterations", c.nehari.dual.max_iterations},
                          {"random_starts", c.nehari.dual.random_starts},
                          {"radii", c.nehari.radii},
                          {"band", c.nehari.band}}},
              {"besov", {{"eps_grid", c.besov.eps_grid},
                         {"p_list", c.besov.p_list},
                         {"generations", c.besov.generations},
                         {"anchor", c.besov.anchor},
                         {"verbatim_moments", c.besov.verbatim_moments}}},
              {"conjecture", {{"degrees", c.conjecture.degrees},
                              {"p_list", c.conjecture.p_list},
                              {"alpha_angle", c.conjecture.alpha_angle},
                              {"corpus", c.conjecture.corpus}}},
              {"output_dir", c.output_dir}};
}

void validate(const RunConfig& c) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
  };
  require(c.quadrature.tol > 0, "quadrature.tol must be positive");
  require(c.quadrature.initial_nodes >= 2 && c.quadrature.max_nodes >= c.quadrature.initial_nodes,
          "quadrature node counts must satisfy 2 <= initial_nodes <= max_nodes");
  require(c.quadrature.max_nodes <= (1L << 26), "quadrature.max_nodes is limited to 2^26");
  require(c.sweep.instances > 0 && c.sweep.clark_instances > 0, "sweep instance counts must be positive");
  require(c.sweep.max_degree > 0 && c.sweep.clark_max_degree > 0, "sweep degrees must be positive");
  require(c.sweep.max_radius > 0 && c.sweep.max_radius < 1, "sweep.max_radius must lie in (0, 1)");
  require(c.sweep.band >= 0, "sweep.band must be nonnegative");
  require(c.sweep.alphas_per_instance > 0 && c.sweep.points_per_instance > 0, "sweep sample counts must be positive");
  require(!c.essential.family_sizes.empty(), "essential.family_sizes must not be empty");
  for (int n : c.essential.family_sizes) require(n > 0 && n <= 64, "essential.family_sizes entries must lie in 1..64");
  require(c.essential.delta > 0, "essential.delta must be positive");
  require(c.essential.quadrature_tol > 0, "essential.quadrature_tol must be positive");
  require(!c.decay.steps.empty(), "decay.steps must not be empty");
  for (int n : c.decay.steps) require(n > 0 && n <= 64, "decay.steps entries must lie in 1..64");
  require(c.nehari.theta_count > 0 && c.nehari.symbols_per_theta > 0, "nehari counts must be positive");
  require(c.nehari.max_degree > 0, "nehari.max_degree must be positive");
  require(c.nehari.dual.l1_nodes >= 16 && c.nehari.dual.certify_nodes >= c.nehari.dual.l1_nodes,
          "nehari grids must satisfy 16 <= l1_nodes <= certify_nodes");
  require(c.nehari.dual.max_iterations > 0 && c.nehari.dual.random_starts >= 0, "nehari iteration counts are invalid");
  for (Real r : c.nehari.radii) require(r > 0 && r < 1, "nehari.radii entries must lie in (0, 1)");
  require(c.nehari.band >= 0, "nehari.band must be nonnegative");
  for (Real e : c.besov.eps_grid) require(e > 0, "besov.eps_grid entries must be positive");
  for (Real p : c.besov.p_list) require(p > 0 && std::isfinite(p), "besov.p_list entries must lie in (0, inf)");
  require(!c.conjecture.degrees.empty(), "conjecture.degrees must not be empty");
  for (int d : c.conjecture.degrees) require(d > 0, "conjecture.degrees entries must be positive");
  for (Real p : c.conjecture.p_list) require(p > 0 && std::isfinite(p), "conjecture.p_list entries must lie in (0, inf)");
  require(c.conjecture.corpus > 0, "conjecture.corpus must be positive");
  require(!c.output_dir.empty(), "output_dir must not be empty");
}

void apply_environment(RunConfig& cfg) {
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') cfg.output_dir = dir;
}

}  // namespace ttlab
