#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace ttlab {

using Real = double;
using Complex = std::complex<Real>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXc = Matrix<Complex>;
using VectorXc = Vector<Complex>;
using ArrayXc = Eigen::Array<Complex, Eigen::Dynamic, 1>;
using ArrayXr = Eigen::Array<Real, Eigen::Dynamic, 1>;

inline constexpr Real kTwoPi = 2.0 * std::numbers::pi;

/// Point e^{it} on the unit circle.
inline Complex unit(Real t) { return std::polar(1.0, t); }

/// Angle of a unit-circle point, normalized to [0, 2pi).
inline Real angle_of(Complex xi) {
  Real t = std::arg(xi);
  return t < 0 ? t + kTwoPi : t;
}

/// Thrown when adaptive quadrature cannot meet its tolerance below the node cap.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, long nodes_reached, Real last_change)
      : std::runtime_error(what), nodes_reached_(nodes_reached), last_change_(last_change) {}
  long nodes_reached() const { return nodes_reached_; }
  Real last_change() const { return last_change_; }

 private:
  long nodes_reached_;
  Real last_change_;
};

/// Thrown when a built-in consistency check of a construction fails.
class CheckFailure : public std::runtime_error {
 public:
  CheckFailure(const std::string& what, Real deviation)
      : std::runtime_error(what), deviation_(deviation) {}
  Real deviation() const { return deviation_; }

 private:
  Real deviation_;
};

}  // namespace ttlab
