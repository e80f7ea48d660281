#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/SVD>

#include "ttlab/types.hpp"

namespace ttlab {

/// Singular values in descending order.
template <typename Derived>
std::vector<Real> singular_values(const Eigen::MatrixBase<Derived>& m) {
  using PlainMatrix = typename Derived::PlainObject;
  if (m.size() == 0) return {};
  Eigen::JacobiSVD<PlainMatrix> svd(m.eval());
  const auto& s = svd.singularValues();
  std::vector<Real> out(s.data(), s.data() + s.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Largest singular value.
template <typename Derived>
Real operator_norm(const Eigen::MatrixBase<Derived>& m) {
  const auto s = singular_values(m);
  return s.empty() ? 0.0 : s.front();
}

/// (sum s_k^p)^{1/p}; p = infinity gives the operator norm.
inline Real schatten_norm(const std::vector<Real>& singular, Real p) {
  if (std::isinf(p)) return singular.empty() ? 0.0 : *std::max_element(singular.begin(), singular.end());
  Real s = 0;
  for (Real x : singular) s += std::pow(x, p);
  return std::pow(s, 1.0 / p);
}

template <typename Derived>
Real schatten_norm(const Eigen::MatrixBase<Derived>& m, Real p) {
  return schatten_norm(singular_values(m), p);
}

/// Max-entry distance between two matrices of the same shape.
template <typename A, typename B>
Real max_abs_deviation(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

/// Distance between two equal-size multisets of complex numbers under greedy
/// nearest matching; exact when the error is small against the separation.
inline Real multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<Real>::infinity();
  Real worst = 0;
  while (!a.empty()) {
    std::size_t bi = 0;
    std::size_t bj = 0;
    Real best = std::numeric_limits<Real>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (std::abs(a[i] - b[j]) < best) {
          best = std::abs(a[i] - b[j]);
          bi = i;
          bj = j;
        }
    worst = std::max(worst, best);
    a.erase(a.begin() + static_cast<long>(bi));
    b.erase(b.begin() + static_cast<long>(bj));
  }
  return worst;
}

}  // namespace ttlab
