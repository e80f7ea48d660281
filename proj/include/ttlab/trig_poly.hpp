#pragma once

#include <map>

#include "ttlab/types.hpp"

namespace ttlab {

/// Finite Fourier series sum_k c_k z^k, k ranging over a finite set of integers.
///
/// On the unit circle this is a trigonometric polynomial; when every index is
/// nonnegative it is an analytic polynomial and may be evaluated anywhere.
class TrigPoly {
 public:
  TrigPoly() = default;
  explicit TrigPoly(std::map<int, Complex> coeffs);

  static TrigPoly constant(Complex c);
  static TrigPoly monomial(int k, Complex c = 1.0);

  const std::map<int, Complex>& coeffs() const { return coeffs_; }
  Complex coeff(int k) const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_analytic() const { return coeffs_.empty() || coeffs_.begin()->first >= 0; }
  int min_index() const;
  int max_index() const;

  /// sum_k c_k z^k; negative powers are z^{-|k|}, so z must be nonzero if any k < 0.
  Complex operator()(Complex z) const;
  ArrayXc operator()(const ArrayXc& z) const;

  /// Boundary conjugate: c_k -> conj(c_{-k}).
  TrigPoly conj() const;
  /// Tail with k >= 0.
  TrigPoly analytic_part() const;
  /// Tail with k <= -1.
  TrigPoly antianalytic_part() const;
  /// Coefficients of z -> p(r z); only meaningful for analytic p.
  TrigPoly dilate(Real r) const;
  /// sum |c_k|, an upper bound for the sup norm on the circle.
  Real coefficient_l1() const;

  TrigPoly& operator+=(const TrigPoly& rhs);
  TrigPoly& operator-=(const TrigPoly& rhs);
  TrigPoly& operator*=(Complex s);

  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(TrigPoly a, Complex s) { return a *= s; }
  friend TrigPoly operator*(Complex s, TrigPoly a) { return a *= s; }
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);

 private:
  void prune();
  std::map<int, Complex> coeffs_;
};

}  // namespace ttlab
