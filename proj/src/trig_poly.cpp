#include "ttlab/trig_poly.hpp"

#include <cmath>
#include <vector>

namespace ttlab {

TrigPoly::TrigPoly(std::map<int, Complex> coeffs) : coeffs_(std::move(coeffs)) { prune(); }

TrigPoly TrigPoly::constant(Complex c) { return monomial(0, c); }

TrigPoly TrigPoly::monomial(int k, Complex c) { return TrigPoly({{k, c}}); }

Complex TrigPoly::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Complex{} : it->second;
}

int TrigPoly::min_index() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
int TrigPoly::max_index() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

Complex TrigPoly::operator()(Complex z) const {
  if (coeffs_.empty()) return {};
  const int lo = min_index();
  const int hi = max_index();
  // Horner on the shifted dense coefficient range, then multiply by z^lo.
  Complex acc{};
  for (int k = hi; k >= lo; --k) acc = acc * z + coeff(k);
  if (lo == 0) return acc;
  return acc * std::pow(z, lo);
}

ArrayXc TrigPoly::operator()(const ArrayXc& z) const {
  ArrayXc out = ArrayXc::Zero(z.size());
  if (coeffs_.empty()) return out;
  const int lo = min_index();
  const int hi = max_index();
  std::vector<Complex> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [k, c] : coeffs_) dense[static_cast<std::size_t>(k - lo)] = c;
  for (auto it = dense.rbegin(); it != dense.rend(); ++it) out = out * z + *it;
  if (lo != 0) {
    for (Eigen::Index i = 0; i < z.size(); ++i) out[i] *= std::pow(z[i], lo);
  }
  return out;
}

TrigPoly TrigPoly::conj() const {
  std::map<int, Complex> out;
  for (const auto& [k, c] : coeffs_) out[-k] = std::conj(c);
  return TrigPoly(std::move(out));
}

TrigPoly TrigPoly::analytic_part() const {
  std::map<int, Complex> out(coeffs_.lower_bound(0), coeffs_.end());
  return TrigPoly(std::move(out));
}

TrigPoly TrigPoly::antianalytic_part() const {
  std::map<int, Complex> out(coeffs_.begin(), coeffs_.lower_bound(0));
  return TrigPoly(std::move(out));
}

TrigPoly TrigPoly::dilate(Real r) const {
  std::map<int, Complex> out;
  for (const auto& [k, c] : coeffs_) out[k] = c * std::pow(r, k);
  return TrigPoly(std::move(out));
}

Real TrigPoly::coefficient_l1() const {
  Real s = 0;
  for (const auto& [k, c] : coeffs_) s += std::abs(c);
  return s;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& rhs) {
  for (const auto& [k, c] : rhs.coeffs_) coeffs_[k] += c;
  prune();
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& rhs) {
  for (const auto& [k, c] : rhs.coeffs_) coeffs_[k] -= c;
  prune();
  return *this;
}

TrigPoly& TrigPoly::operator*=(Complex s) {
  for (auto& [k, c] : coeffs_) c *= s;
  prune();
  return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  std::map<int, Complex> out;
  for (const auto& [i, x] : a.coeffs_)
    for (const auto& [j, y] : b.coeffs_) out[i + j] += x * y;
  return TrigPoly(std::move(out));
}

void TrigPoly::prune() {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == Complex{}; });
}

}  // namespace ttlab
