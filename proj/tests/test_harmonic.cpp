#include "doctest.h"

#include "test_support.hpp"
#include "ttlab/quadrature.hpp"

using namespace ttlab;

TEST_CASE("grid sums of monomials detect multiples of the node count") {
  const QuadratureGrid grid(256);
  const ArrayXc nodes = grid.nodes();
  for (int k = -600; k <= 600; ++k) {
    Complex s{};
    for (Eigen::Index j = 0; j < nodes.size(); ++j) s += std::pow(nodes[j], k);
    s *= grid.weight();
    const Real expected = (k % 256 == 0) ? 1.0 : 0.0;
    CHECK(std::abs(s - expected) < 1e-12);
  }
  CHECK_THROWS_AS(QuadratureGrid(300), std::invalid_argument);
}

TEST_CASE("trig poly evaluation matches the defining sum") {
  std::mt19937_64 rng(7);
  const TrigPoly p = testing::random_trig_poly(rng, -5, 9);
  for (Real t : {0.0, 0.3, 1.7, 4.0}) {
    const Complex xi = unit(t);
    Complex direct{};
    for (const auto& [k, c] : p.coeffs()) direct += c * std::pow(xi, k);
    CHECK(std::abs(p(xi) - direct) < 1e-12);
    CHECK(std::abs(p.conj()(xi) - std::conj(p(xi))) < 1e-12);
  }
  CHECK(p.conj().coeff(3) == std::conj(p.coeff(-3)));
}

TEST_CASE("inner products of monomials and Blaschke factors") {
  const BoundarySymbol z = BoundarySymbol::z();
  CHECK(std::abs(inner_product(z, z) - 1.0) < 1e-14);
  CHECK(std::abs(inner_product(z, BoundarySymbol(1.0))) < 1e-14);

  const BoundarySymbol b = BoundarySymbol::rational(TrigPoly::constant(0.5) - TrigPoly::monomial(1),
                                                    TrigPoly::constant(1.0) - TrigPoly::monomial(1, 0.5));
  // Oracle: the factor is unimodular pointwise, so its squared norm is 1.
  for (Real t = 0; t < kTwoPi; t += 0.1) CHECK(std::abs(std::abs(b(unit(t))) - 1.0) < 1e-14);
  CHECK(std::abs(inner_product(b, b) - 1.0) < 1e-12);
}

TEST_CASE("fourier coefficients") {
  const BoundarySymbol f = TrigPoly::constant(3.0) + TrigPoly::monomial(-1, 2.0);
  CHECK(std::abs(fourier_coefficient(f, -1) - 2.0) < 1e-14);
  CHECK(std::abs(fourier_coefficient(BoundarySymbol(TrigPoly::monomial(2)), 0)) < 1e-14);

  const BoundarySymbol g =
      BoundarySymbol::rational(TrigPoly::constant(1.0), TrigPoly::constant(1.0) - TrigPoly::monomial(1, 0.5));
  for (int k = 0; k <= 6; ++k) CHECK(std::abs(fourier_coefficient(g, k) - std::pow(0.5, k)) < 1e-13);
  CHECK(std::abs(fourier_coefficient(g, -2)) < 1e-13);

  const TrigPoly analytic = fourier_coefficients(g, 0, 4).analytic_part();
  CHECK(analytic.max_index() == 4);
  CHECK(fourier_coefficients(g, -3, 4).antianalytic_part().is_zero());
}

TEST_CASE("aliasing guard reports insufficient resolution") {
  // z^255 is invisible to the 256 and 512 point sums of c_0, so the doubling
  // test passes; the Nyquist-edge coefficient on the 512 grid exposes it.
  QuadratureConfig cfg;
  cfg.max_nodes = 512;
  CHECK_THROWS_AS(fourier_coefficient(BoundarySymbol(TrigPoly::monomial(255)), 0, cfg), QuadratureError);
}

TEST_CASE("adaptive doubling gives up on poles near the circle") {
  const BoundarySymbol near_pole =
      BoundarySymbol::rational(TrigPoly::constant(1.0), TrigPoly::constant(1.0) - TrigPoly::monomial(1, 0.999));
  QuadratureConfig small;
  small.max_nodes = 1024;
  CHECK_THROWS_AS(inner_product(near_pole, near_pole, small), QuadratureError);
  // Same integral with the default cap: ||1/(1 - r z)||^2 = 1/(1 - r^2).
  const Real r = 0.999;
  CHECK(std::abs(inner_product(near_pole, near_pole).real() * (1 - r * r) - 1.0) < 1e-9);
  CHECK_THROWS_AS(BoundarySymbol::rational(TrigPoly::constant(1.0), TrigPoly::constant(1.0) - TrigPoly::monomial(1)),
                  std::invalid_argument);
}

TEST_CASE("Parseval at grid scale for random trigonometric polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial * 5;
    const TrigPoly p = testing::random_trig_poly(rng, -n, n);
    Real energy = 0;
    for (const auto& [k, c] : p.coeffs()) energy += std::norm(c);
    const BoundarySymbol f(p);
    CHECK(std::abs(inner_product(f, f).real() - energy) < 1e-12 * std::max(1.0, energy));
  }
}

TEST_CASE("doubling is stable once accepted") {
  std::mt19937_64 rng(5);
  QuadratureConfig cfg;
  cfg.tol = 1e-12;
  for (int trial = 0; trial < 10; ++trial) {
    const BlaschkeProduct theta = testing::random_blaschke(rng, 1 + trial % 6, 0.9);
    const BoundarySymbol f = BoundarySymbol::blaschke(theta) * BoundarySymbol(testing::random_trig_poly(rng, -3, 3));
    long used = 0;
    const Complex a = integrate([&](const ArrayXc& p) -> ArrayXc { return f(p); }, cfg, &used);
    QuadratureConfig finer = cfg;
    finer.initial_nodes = used * 2;
    finer.max_nodes = std::max(finer.max_nodes, used * 4);
    const Complex b = integrate([&](const ArrayXc& p) -> ArrayXc { return f(p); }, finer);
    CHECK(std::abs(a - b) < 1e-11);
  }
}

TEST_CASE("conjugation is an involution on symbols") {
  std::mt19937_64 rng(3);
  const BlaschkeProduct theta = testing::random_blaschke(rng, 3, 0.8);
  const BoundarySymbol s = BoundarySymbol::blaschke(theta) * BoundarySymbol(testing::random_trig_poly(rng, -2, 2));
  const BoundarySymbol back = conj(conj(s));
  for (Real t = 0; t < kTwoPi; t += 0.37) CHECK(back(unit(t)) == s(unit(t)));
  CHECK(conj(s).kind() == BoundarySymbol::Kind::conj_of);
  CHECK_FALSE(conj(s).is_analytic());
  CHECK_THROWS_AS(conj(s).analytic_eval(0.2), std::domain_error);
}

TEST_CASE("sup norm refines beyond the sampling grid") {
  const BoundarySymbol f = TrigPoly::constant(1.0) + TrigPoly::monomial(7, Complex(0, 1));
  CHECK(std::abs(sup_norm(f, 64) - 2.0) < 1e-12);
}
