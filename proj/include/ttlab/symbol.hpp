#pragma once

#include <memory>
#include <vector>

#include "ttlab/blaschke.hpp"
#include "ttlab/trig_poly.hpp"

namespace ttlab {

/// A function on the unit circle, built as an immutable expression tree.
///
/// Leaves are trigonometric polynomials, quotients of trigonometric
/// polynomials whose denominator has no zeros on the circle, and finite
/// Blaschke products. Interior nodes are boundary conjugation, sums and
/// products. Copies share the tree.
class BoundarySymbol {
 public:
  enum class Kind { trig_poly, rational, conj_of, sum, product, blaschke };

  /// The zero symbol.
  BoundarySymbol();
  BoundarySymbol(TrigPoly p);  // NOLINT(google-explicit-constructor)
  BoundarySymbol(Complex c);   // NOLINT(google-explicit-constructor)
  BoundarySymbol(Real c) : BoundarySymbol(Complex(c)) {}  // NOLINT(google-explicit-constructor)

  static BoundarySymbol rational(TrigPoly numerator, TrigPoly denominator);
  static BoundarySymbol blaschke(BlaschkeProduct theta);
  static BoundarySymbol z() { return TrigPoly::monomial(1); }
  static BoundarySymbol zbar() { return TrigPoly::monomial(-1); }

  Kind kind() const;

  /// Value at a point of the unit circle.
  Complex operator()(Complex xi) const;
  /// Values at many points of the unit circle.
  ArrayXc operator()(const ArrayXc& xi) const;

  /// True when the tree is holomorphic in the disk: no conjugation nodes and
  /// no negative Fourier indices in polynomial leaves.
  bool is_analytic() const;
  /// Holomorphic extension at |z| <= 1; throws std::domain_error for non-analytic trees.
  Complex analytic_eval(Complex z) const;

  /// The trigonometric polynomial this symbol is, if it is a bare polynomial leaf.
  const TrigPoly* as_trig_poly() const;

  friend BoundarySymbol conj(const BoundarySymbol& s);
  friend BoundarySymbol operator+(const BoundarySymbol& a, const BoundarySymbol& b);
  friend BoundarySymbol operator*(const BoundarySymbol& a, const BoundarySymbol& b);
  friend BoundarySymbol operator-(const BoundarySymbol& a, const BoundarySymbol& b);
  friend BoundarySymbol operator-(const BoundarySymbol& a);

  struct Node;

 private:
  explicit BoundarySymbol(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Sum of coefficient-weighted symbols.
BoundarySymbol linear_combination(const std::vector<BoundarySymbol>& terms, const VectorXc& coeffs);

}  // namespace ttlab
