#include <cmath>
#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "ttlab/config.hpp"
#include "ttlab/sampling.hpp"
#include "ttlab/serialize.hpp"

using namespace ttlab;

TEST_CASE("object round trips") {
  Sampler s(7);
  for (int i = 0; i < 10; ++i) {
    const BlaschkeProduct theta = s.blaschke(1 + i, 0.9);
    const BlaschkeProduct back = blaschke_from_json(Json::parse(dump(to_json(theta))));
    REQUIRE(back.degree() == theta.degree());
    for (int k = 0; k < theta.degree(); ++k) CHECK(back.zeros()[k] == theta.zeros()[k]);
    const Complex z = s.in_disk(0.95);
    CHECK(back(z) == theta(z));

    const TrigPoly p = s.trig_poly(-i, i);
    const TrigPoly q = trig_poly_from_json(Json::parse(dump(to_json(p))));
    for (int k = -i; k <= i; ++k) CHECK(q.coeff(k) == p.coeff(k));

    const ClarkMeasure sigma = clark_measure(theta, s.unimodular());
    const ClarkMeasure tau = clark_measure_from_json(Json::parse(dump(to_json(sigma))));
    REQUIRE(tau.atoms.size() == sigma.atoms.size());
    for (std::size_t k = 0; k < sigma.atoms.size(); ++k) {
      CHECK(tau.atoms[k].xi == sigma.atoms[k].xi);
      CHECK(tau.atoms[k].weight == sigma.atoms[k].weight);
    }
  }
}

TEST_CASE("matrix round trip is exact and row-major") {
  MatrixXc m(2, 3);
  m << Complex(1, 2), Complex(3, 4), Complex(5, 6), Complex(0.1, -0.2), Complex(1e-300, 0), Complex(-7, 1.0 / 3);
  const Json j = matrix_to_json(m);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 3);
  CHECK(j["data"][1][0] == 3.0);
  CHECK(j["data"][3][1] == -0.2);
  CHECK(matrix_from_json(Json::parse(dump(j))) == m);
}

TEST_CASE("non-finite reals serialize as null") {
  CHECK(real_json(NAN).is_null());
  CHECK(real_json(INFINITY).is_null());
  CHECK(real_json(0.5) == 0.5);
  CHECK(dump(Json{{"x", 1}}).back() == '\n');
  CHECK(std::strtod(format_real(0.1).c_str(), nullptr) == 0.1);
  CHECK(std::strtod(format_real(1.0 / 3).c_str(), nullptr) == 1.0 / 3);
}

TEST_CASE("csv layout") {
  CsvTable t({"a", "b"});
  t.row({"1", "2"}).row({"3", "4"});
  std::ostringstream out;
  t.write(out);
  CHECK(out.str() == "a,b\n1,2\n3,4\n");
}

TEST_CASE("config round trip and defaults") {
  const RunConfig defaults;
  CHECK(dump(to_json(config_from_json(Json::object()))) == dump(to_json(defaults)));

  RunConfig cfg;
  cfg.sweep.seed = 99;
  cfg.essential.family_sizes = {3, 5};
  cfg.besov.verbatim_moments = true;
  cfg.output_dir = "elsewhere";
  const RunConfig back = config_from_json(Json::parse(dump(to_json(cfg))));
  CHECK(dump(to_json(back)) == dump(to_json(cfg)));
  CHECK(back.sweep.seed == 99);
  CHECK(back.essential.family_sizes == std::vector<int>{3, 5});
}

TEST_CASE("config rejects unknown keys and invalid values") {
  CHECK_THROWS_AS(config_from_json(Json{{"sweeps", Json::object()}}), ConfigError);
  CHECK_THROWS_AS(config_from_json(Json{{"sweep", Json{{"sed", 1}}}}), ConfigError);

  RunConfig cfg;
  cfg.quadrature.tol = -1;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg = RunConfig{};
  cfg.sweep.instances = 0;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg = RunConfig{};
  cfg.essential.family_sizes.clear();
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  CHECK_NOTHROW(validate(RunConfig{}));
}

TEST_CASE("output directory from the environment") {
  RunConfig cfg;
  ::setenv(kOutputDirEnv, "from_env", 1);
  apply_environment(cfg);
  CHECK(cfg.output_dir == "from_env");
  ::unsetenv(kOutputDirEnv);
  RunConfig untouched;
  apply_environment(untouched);
  CHECK(untouched.output_dir == RunConfig{}.output_dir);
}

TEST_CASE("sampler is reproducible") {
  Sampler a(123), b(123);
  for (int i = 0; i < 5; ++i) {
    const BlaschkeProduct x = a.blaschke(4, 0.9), y = b.blaschke(4, 0.9);
    for (int k = 0; k < 4; ++k) CHECK(x.zeros()[k] == y.zeros()[k]);
    CHECK(std::abs(a.in_disk(0.5)) <= 0.5);
    b.in_disk(0.5);
  }
}
