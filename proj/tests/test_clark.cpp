#include "doctest.h"

#include "test_support.hpp"
#include "ttlab/clark.hpp"
#include "ttlab/linalg.hpp"

using namespace ttlab;

namespace {

// Re((alpha + theta(0))/(alpha - theta(0))), the mass the Poisson identity predicts.
Real predicted_mass(const BlaschkeProduct& theta, Complex alpha) {
  const Complex t = theta(0.0);
  return ((alpha + t) / (alpha - t)).real();
}

std::vector<Complex> random_points(std::mt19937_64& rng, int n, Real radius) {
  std::vector<Complex> pts;
  for (int i = 0; i < n; ++i) pts.push_back(testing::random_in_disk(rng, radius));
  return pts;
}

BoundarySymbol random_conj_square_model(std::mt19937_64& rng, const BlaschkeProduct& theta) {
  const ModelSpaceBasis square(theta.square());
  std::normal_distribution<Real> n(0.0, 1.0);
  VectorXc c(square.dim());
  for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = Complex(n(rng), n(rng));
  return conj(square.combination(c));
}

}  // namespace

TEST_CASE("Clark measure examples") {
  for (int n = 1; n <= 6; ++n) {
    const ClarkMeasure s = clark_measure(BlaschkeProduct::power(n), 1.0);
    REQUIRE(s.atoms.size() == static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      CHECK(std::abs(std::pow(s.atoms[j].xi, n) - 1.0) < 1e-12);
      CHECK(std::abs(s.atoms[j].weight - 1.0 / n) < 1e-14);
    }
    CHECK(std::abs(s.total_mass() - 1.0) < 1e-13);
    CHECK(std::abs(s.poisson_integral(0.0) - predicted_mass(BlaschkeProduct::power(n), 1.0)) < 1e-13);
  }
  const ClarkMeasure m = clark_measure(BlaschkeProduct::power(1), -1.0);
  REQUIRE(m.atoms.size() == 1);
  CHECK(std::abs(m.atoms[0].xi + 1.0) < 1e-12);
  CHECK(std::abs(m.atoms[0].weight - 1.0) < 1e-14);

  std::mt19937_64 rng(89);
  const BlaschkeProduct half({0.5});
  const ClarkMeasure h = clark_measure(half, 1.0);
  REQUIRE(h.atoms.size() == 1);
  CHECK(std::abs(half(h.atoms[0].xi) - 1.0) < 1e-10);
  const auto pts = random_points(rng, 100, 0.99);
  CHECK(poisson_identity_error(h, half, pts) < 1e-8);
  CHECK_THROWS_AS(clark_measure(half, 0.5), std::invalid_argument);
}

TEST_CASE("Poisson identity and total mass on random products") {
  std::mt19937_64 rng(97);
  for (int i = 0; i < 20; ++i) {
    const BlaschkeProduct theta = testing::random_blaschke(rng, 1 + i % 10, 0.9);
    const Complex alpha = testing::random_unimodular(rng);
    const ClarkMeasure s = clark_measure(theta, alpha);
    REQUIRE(s.atoms.size() == static_cast<std::size_t>(theta.degree()));
    for (const auto& a : s.atoms) {
      CHECK(std::abs(theta(a.xi) - alpha) < 1e-10);
      CHECK(a.weight > 0);
    }
    for (std::size_t j = 1; j < s.atoms.size(); ++j) CHECK(angle_of(s.atoms[j - 1].xi) < angle_of(s.atoms[j].xi));
    CHECK(poisson_identity_error(s, theta, random_points(rng, 100, 0.99)) < 1e-8);
    CHECK(std::abs(s.total_mass() - predicted_mass(theta, alpha)) < 1e-10);
  }
}

TEST_CASE("nu_alpha is the Clark measure of the square") {
  const ClarkMeasure a = nu_alpha(BlaschkeProduct::power(1), 1.0);
  REQUIRE(a.atoms.size() == 2);
  CHECK(measure_deviation(a, clark_measure(BlaschkeProduct::power(2), 1.0)) < 1e-12);
  CHECK(std::abs(a.atoms[0].weight - 0.5) < 1e-14);

  const ClarkMeasure b = nu_alpha(BlaschkeProduct::power(2), 1.0);
  REQUIRE(b.atoms.size() == 4);
  for (const auto& at : b.atoms) CHECK(std::abs(at.weight - 0.25) < 1e-14);
  CHECK(measure_deviation(b, clark_measure(BlaschkeProduct::power(4), 1.0)) < 1e-12);

  std::mt19937_64 rng(101);
  for (int i = 0; i < 20; ++i) {
    const BlaschkeProduct theta = testing::random_blaschke(rng, 1 + i % 8, 0.9);
    const Complex alpha = testing::random_unimodular(rng);
    const ClarkMeasure nu = nu_alpha(theta, alpha);
    CHECK(measure_deviation(nu, clark_measure(theta.square(), alpha * alpha)) < 1e-10);
    const Real avg = 0.5 * (clark_measure(theta, alpha).total_mass() + clark_measure(theta, -alpha).total_mass());
    CHECK(std::abs(nu.total_mass() - avg) < 1e-12);
  }
}

TEST_CASE("Clark unitary examples and reconstruction") {
  const ModelSpaceBasis one(BlaschkeProduct::power(1));
  CHECK(std::abs(clark_unitary(one, clark_measure(one.theta(), 1.0)).entries(0, 0) - 1.0) < 1e-14);

  const ModelSpaceBasis two(BlaschkeProduct::power(2));
  const OperatorMatrix v = clark_unitary(two, clark_measure(two.theta(), 1.0));
  MatrixXc expected(2, 2);
  expected << 1, 1, 1, -1;
  expected *= std::sqrt(0.5);
  CHECK(max_abs_deviation(v.entries, expected) < 1e-12);
  CHECK(v.domain == Space::model);
  CHECK(v.codomain == Space::clark_alpha);

  std::mt19937_64 rng(103);
  for (int i = 0; i < 20; ++i) {
    const BlaschkeProduct theta = testing::random_blaschke(rng, 1 + i % 10, 0.9);
    const ModelSpaceBasis basis(theta);
    const ClarkMeasure s = clark_measure(theta, testing::random_unimodular(rng));
    const OperatorMatrix u = clark_unitary(basis, s);
    CHECK(max_abs_deviation(u.entries.adjoint() * u.entries, MatrixXc::Identity(basis.dim(), basis.dim())) < 1e-10);
    for (int trial = 0; trial < 5; ++trial) {
      VectorXc c = VectorXc::Random(basis.dim());
      std::vector<Complex> values;
      for (const auto& a : s.atoms) values.push_back(basis.values_at(a.xi).cwiseProduct(c).sum());
      const Complex z = testing::random_in_disk(rng, 0.95);
      const Complex truth = basis.values_at(z).cwiseProduct(c).sum();
      CHECK(std::abs(clark_reconstruct(s, theta, values, z) - truth) < 1e-8);
    }
  }
}

TEST_CASE("shifted conjugate Clark map is unitary") {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 10; ++i) {
    const BlaschkeProduct theta = testing::random_blaschke(rng, 1 + i % 8, 0.9);
    const ModelSpaceBasis basis(theta);
    const OperatorMatrix w = conj_shift_clark_unitary(basis, clark_measure(theta, -testing::random_unimodular(rng)));
    CHECK(w.domain == Space::conj_shifted_model);
    CHECK(w.codomain == Space::clark_minus_alpha);
  }
}

TEST_CASE("Hilbert transform routes and unitarity") {
  const HilbertTransform h1 = hilbert_transform(ModelSpaceBasis(BlaschkeProduct::power(1)), 1.0);
  CHECK(std::abs(h1.direct.entries(0, 0) - 1.0) < 1e-14);
  CHECK(h1.route_deviation < 1e-12);

  const HilbertTransform h2 = hilbert_transform(ModelSpaceBasis(BlaschkeProduct::power(2)), 1.0);
  CHECK(h2.route_deviation < 1e-10);
  CHECK(h2.unitarity_deviation < 1e-10);

  std::mt19937_64 rng(109);
  for (int i = 0; i < 20; ++i) {
    const BlaschkeProduct theta = testing::random_blaschke(rng, 1 + i % 10, 0.9);
    const HilbertTransform h = hilbert_transform(ModelSpaceBasis(theta), testing::random_unimodular(rng));
    CHECK(h.unitarity_deviation < 1e-10);
    CHECK(h.route_deviation < 1e-10);
  }
}

TEST_CASE("commutator kernel") {
  const BlaschkeProduct z = BlaschkeProduct::power(1);
  const ClarkMeasure plus = clark_measure(z, 1.0);
  const ClarkMeasure minus = clark_measure(z, -1.0);
  const OperatorMatrix c = commutator_matrix(BoundarySymbol::zbar(), plus, minus);
  CHECK(std::abs(c.entries(0, 0) - 1.0) < 1e-14);
  CHECK(commutator_route_deviation(BoundarySymbol::zbar(), plus, minus) < 1e-14);

  std::mt19937_64 rng(113);
  for (int i = 0; i < 10; ++i) {
    const BlaschkeProduct theta = testing::random_blaschke(rng, 1 + i % 8, 0.9);
    const Complex alpha = testing::random_unimodular(rng);
    const ClarkMeasure p = clark_measure(theta, alpha);
    const ClarkMeasure m = clark_measure(theta, -alpha);
    CHECK(commutator_matrix(3.5, p, m).entries.cwiseAbs().maxCoeff() == 0.0);
    CHECK(commutator_route_deviation(testing::random_trig_poly(rng, -5, 5), p, m) < 1e-10);
  }
}

TEST_CASE("Hankel operators are transported commutators") {
  const EquivalenceReport one =
      verify_equivalence(BoundarySymbol::zbar(), ModelSpaceBasis(BlaschkeProduct::power(1)), 1.0);
  CHECK(std::abs(one.hankel.entries(0, 0) - 1.0) < 1e-14);
  CHECK(one.matrix_deviation < 1e-12);

  const EquivalenceReport zero = verify_equivalence(BoundarySymbol(), ModelSpaceBasis(BlaschkeProduct::power(3)), 1.0);
  CHECK(zero.matrix_deviation == 0.0);

  std::mt19937_64 rng(127);
  for (int i = 0; i < 20; ++i) {
    const BlaschkeProduct theta = testing::random_blaschke(rng, 1 + i % 8, 0.9);
    const BoundarySymbol phi = random_conj_square_model(rng, theta);
    const EquivalenceReport r = verify_equivalence(phi, ModelSpaceBasis(theta), testing::random_unimodular(rng));
    CHECK(r.matrix_deviation < 1e-8);
    CHECK(r.singular_value_deviation < 1e-8);
    CHECK(r.transported.codomain == Space::conj_shifted_model);
  }
}
