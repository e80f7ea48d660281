#include "ttlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ttlab {

namespace {

constexpr long kChunk = 8192;

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

// Points e^{2 pi i (offset + stride*j)/denominator} for j in [begin, end).
ArrayXc arithmetic_points(long begin, long end, long offset, long stride, long denominator) {
  ArrayXc pts(end - begin);
  const Real scale = kTwoPi / static_cast<Real>(denominator);
  for (long j = begin; j < end; ++j)
    pts[j - begin] = unit(scale * static_cast<Real>(offset + stride * j));
  return pts;
}

MatrixXc chunked_sum(const std::function<MatrixXc(const ArrayXc&)>& partial_sum, long count,
                     long offset, long stride, long denominator) {
  MatrixXc acc;
  for (long begin = 0; begin < count; begin += kChunk) {
    const long end = std::min(count, begin + kChunk);
    MatrixXc part = partial_sum(arithmetic_points(begin, end, offset, stride, denominator));
    if (acc.size() == 0) {
      acc = std::move(part);
    } else {
      acc += part;
    }
  }
  return acc;
}

}  // namespace

QuadratureGrid::QuadratureGrid(long nodes) : nodes_(nodes) {
  if (!is_power_of_two(nodes)) throw std::invalid_argument("quadrature node count must be a power of two");
}

ArrayXc QuadratureGrid::nodes() const { return arithmetic_points(0, nodes_, 0, 1, nodes_); }

BlockSampler sampler_of(std::vector<BoundarySymbol> symbols) {
  return [symbols = std::move(symbols)](const ArrayXc& pts) {
    MatrixXc out(pts.size(), static_cast<Eigen::Index>(symbols.size()));
    for (std::size_t k = 0; k < symbols.size(); ++k)
      out.col(static_cast<Eigen::Index>(k)) = symbols[k](pts).matrix();
    return out;
  };
}

MatrixXc integrate_adaptive(const std::function<MatrixXc(const ArrayXc&)>& partial_sum,
                            const QuadratureConfig& cfg, long* nodes_used) {
  if (!is_power_of_two(cfg.initial_nodes) || !is_power_of_two(cfg.max_nodes) ||
      cfg.initial_nodes > cfg.max_nodes || !(cfg.tol > 0))
    throw std::invalid_argument("invalid quadrature configuration");
  long m = cfg.initial_nodes;
  MatrixXc sum = chunked_sum(partial_sum, m, 0, 1, m);
  MatrixXc value = sum / static_cast<Real>(m);
  Real change = 0;
  while (m < cfg.max_nodes) {
    // Odd nodes of the doubled grid.
    sum += chunked_sum(partial_sum, m, 1, 2, 2 * m);
    m *= 2;
    MatrixXc next = sum / static_cast<Real>(m);
    change = (next - value).cwiseAbs().maxCoeff();
    const Real scale = std::max<Real>(1.0, next.cwiseAbs().maxCoeff());
    value = std::move(next);
    if (change <= cfg.tol * scale) {
      if (nodes_used) *nodes_used = m;
      return value;
    }
  }
  std::ostringstream msg;
  msg << "quadrature did not converge with " << m << " nodes (last change " << change
      << "); a pole is likely too close to the unit circle";
  throw QuadratureError(msg.str(), m, change);
}

Complex integrate(const std::function<ArrayXc(const ArrayXc&)>& f, const QuadratureConfig& cfg,
                  long* nodes_used) {
  auto partial = [&](const ArrayXc& pts) {
    MatrixXc s(1, 1);
    s(0, 0) = f(pts).sum();
    return s;
  };
  return integrate_adaptive(partial, cfg, nodes_used)(0, 0);
}

MatrixXc gram(const BlockSampler& left, const BlockSampler& right, const QuadratureConfig& cfg) {
  auto partial = [&](const ArrayXc& pts) -> MatrixXc { return left(pts).adjoint() * right(pts); };
  return integrate_adaptive(partial, cfg);
}

Complex inner_product(const BoundarySymbol& f, const BoundarySymbol& g, const QuadratureConfig& cfg) {
  return integrate([&](const ArrayXc& pts) -> ArrayXc { return f(pts) * g(pts).conjugate(); }, cfg);
}

Complex fourier_coefficient(const BoundarySymbol& f, int k, const QuadratureConfig& cfg) {
  QuadratureConfig local = cfg;
  while (local.initial_nodes / 2 <= std::abs(k) + 1 && local.initial_nodes < local.max_nodes)
    local.initial_nodes *= 2;
  auto weighted = [&](int index) {
    return [&f, index](const ArrayXc& pts) -> ArrayXc {
      ArrayXc w(pts.size());
      for (Eigen::Index i = 0; i < pts.size(); ++i) w[i] = std::pow(std::conj(pts[i]), index);
      return f(pts) * w;
    };
  };
  long m = 0;
  const Complex c = integrate(weighted(k), local, &m);
  if (std::abs(k) >= m / 2) throw QuadratureError("coefficient index beyond grid resolution", m, 0);
  // Aliasing guard: the grid's highest resolvable coefficients must be negligible.
  const QuadratureGrid grid(m);
  const ArrayXc pts = grid.nodes();
  const ArrayXc vals = f(pts);
  const Real scale = std::max<Real>(1.0, vals.abs().mean());
  const int edge = static_cast<int>(m / 2 - 1);
  for (int e : {edge, -edge}) {
    Complex s{};
    for (Eigen::Index i = 0; i < pts.size(); ++i) s += vals[i] * std::pow(std::conj(pts[i]), e);
    s /= static_cast<Real>(m);
    if (std::abs(s) > 1e3 * cfg.tol * scale)
      throw QuadratureError("insufficient resolution: coefficients near the Nyquist index are not negligible", m,
                            std::abs(s));
  }
  return c;
}

TrigPoly fourier_coefficients(const BoundarySymbol& f, int lo, int hi, const QuadratureConfig& cfg) {
  std::map<int, Complex> out;
  for (int k = lo; k <= hi; ++k) {
    const Complex c = fourier_coefficient(f, k, cfg);
    if (std::abs(c) > 1e-15) out[k] = c;
  }
  return TrigPoly(std::move(out));
}

Real sup_norm(const std::function<ArrayXc(const ArrayXc&)>& f, long nodes) {
  const QuadratureGrid grid(nodes);
  const ArrayXr mags = f(grid.nodes()).abs();
  std::vector<long> idx(static_cast<std::size_t>(nodes));
  for (long j = 0; j < nodes; ++j) idx[static_cast<std::size_t>(j)] = j;
  const std::size_t top = std::min<std::size_t>(8, idx.size());
  std::partial_sort(idx.begin(), idx.begin() + static_cast<long>(top), idx.end(),
                    [&](long a, long b) { return mags[a] > mags[b]; });
  Real best = mags[idx[0]];
  const Real h = kTwoPi / static_cast<Real>(nodes);
  auto mag_at = [&](Real t) {
    ArrayXc p(1);
    p[0] = unit(t);
    return std::abs(f(p)[0]);
  };
  const Real golden = (std::sqrt(5.0) - 1.0) / 2.0;
  for (std::size_t r = 0; r < top; ++r) {
    const Real t0 = h * static_cast<Real>(idx[r]);
    Real a = t0 - h;
    Real b = t0 + h;
    Real c = b - golden * (b - a);
    Real d = a + golden * (b - a);
    Real fc = mag_at(c);
    Real fd = mag_at(d);
    for (int it = 0; it < 60; ++it) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - golden * (b - a);
        fc = mag_at(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + golden * (b - a);
        fd = mag_at(d);
      }
    }
    best = std::max({best, fc, fd});
  }
  return best;
}

Real sup_norm(const BoundarySymbol& f, long nodes) {
  return sup_norm([&f](const ArrayXc& pts) -> ArrayXc { return f(pts); }, nodes);
}

}  // namespace ttlab
