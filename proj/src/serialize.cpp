#include "ttlab/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ttlab {

Json real_json(Real x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

std::string format_real(Real x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(Complex c) { return Json{{"re", real_json(c.real())}, {"im", real_json(c.imag())}}; }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return j.get<Real>();
  return {j.at("re").get<Real>(), j.at("im").get<Real>()};
}

Json to_json(const BlaschkeProduct& theta) {
  Json zeros = Json::array();
  for (Complex z : theta.zeros()) zeros.push_back(to_json(z));
  return Json{{"zeros", zeros}, {"gamma", to_json(theta.gamma())}};
}

BlaschkeProduct blaschke_from_json(const Json& j) {
  std::vector<Complex> zeros;
  for (const auto& z : j.at("zeros")) zeros.push_back(complex_from_json(z));
  const Complex gamma = j.contains("gamma") ? complex_from_json(j.at("gamma")) : Complex(1.0);
  return BlaschkeProduct(std::move(zeros), gamma);
}

Json to_json(const TrigPoly& p) {
  Json coeffs = Json::array();
  for (const auto& [k, c] : p.coeffs())
    coeffs.push_back(Json{{"k", k}, {"re", real_json(c.real())}, {"im", real_json(c.imag())}});
  return Json{{"coeffs", coeffs}};
}

TrigPoly trig_poly_from_json(const Json& j) {
  std::map<int, Complex> c;
  for (const auto& e : j.at("coeffs")) c[e.at("k").get<int>()] += complex_from_json(e);
  return TrigPoly(std::move(c));
}

Json to_json(const ClarkMeasure& sigma) {
  Json atoms = Json::array();
  for (const auto& a : sigma.atoms) atoms.push_back(Json{{"xi", to_json(a.xi)}, {"w", real_json(a.weight)}});
  return Json{{"alpha", to_json(sigma.alpha)}, {"atoms", atoms}};
}

ClarkMeasure clark_measure_from_json(const Json& j) {
  ClarkMeasure s{complex_from_json(j.at("alpha")), {}};
  for (const auto& a : j.at("atoms")) s.atoms.push_back({complex_from_json(a.at("xi")), a.at("w").get<Real>()});
  return s;
}

Json matrix_to_json(const MatrixXc& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) data.push_back(Json::array({real_json(m(i, k).real()), real_json(m(i, k).imag())}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

MatrixXc matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const Json& data = j.at("data");
  if (data.size() != static_cast<std::size_t>(rows * cols)) throw std::invalid_argument("matrix data has the wrong length");
  MatrixXc m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Json& e = data[static_cast<std::size_t>(i * cols + k)];
      m(i, k) = Complex(e.at(0).get<Real>(), e.at(1).get<Real>());
    }
  return m;
}

Json to_json(const OperatorMatrix& op) {
  Json j = matrix_to_json(op.entries);
  j["domain"] = to_string(op.domain);
  j["codomain"] = to_string(op.codomain);
  j["provenance"] = op.provenance;
  return j;
}

namespace {

Json complex_list(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (Complex c : v) out.push_back(to_json(c));
  return out;
}

Json real_list(const std::vector<Real>& v) {
  Json out = Json::array();
  for (Real x : v) out.push_back(real_json(x));
  return out;
}

}  // namespace

Json to_json(const SpectralReport& r) {
  Json schatten = Json::array();
  for (const auto& [p, v] : r.schatten) schatten.push_back(Json{{"p", p}, {"norm", real_json(v)}});
  return Json{{"eigenvalues", complex_list(r.eigenvalues)},
              {"singular_values", real_list(r.singular_values)},
              {"schatten", schatten},
              {"eigenvector_condition", real_json(r.eigenvector_condition)}};
}

Json to_json(const ClusterReport& r) {
  Json clusters = Json::array();
  for (const auto& c : r.clusters)
    clusters.push_back(Json{{"center", to_json(c.center)}, {"count", c.count}, {"radius", real_json(c.radius)}});
  Json j{{"N", r.family_size}, {"failed", r.failed}};
  if (r.failed) {
    j["failure"] = r.failure;
    j["quadrature_nodes"] = r.quadrature_nodes;
    return j;
  }
  j["eigenvalues"] = complex_list(r.eigenvalues);
  j["clusters"] = clusters;
  j["eigenvalue_distance"] = real_json(r.eigenvalue_distance);
  j["cluster_distance"] = real_json(r.cluster_distance);
  return j;
}

Json to_json(const EssentialSpectrumReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(to_json(row));
  return Json{{"delta", r.delta},
              {"accumulation_points", complex_list(r.accumulation_points)},
              {"target", complex_list(r.target)},
              {"rows", rows}};
}

Json to_json(const DecayRow& r) {
  return Json{{"n", r.n},
              {"lambda", to_json(r.lambda)},
              {"zeta", to_json(r.zeta)},
              {"ratio", real_json(r.ratio)},
              {"bound_continuous", real_json(r.bound_continuous)},
              {"bound_analytic", real_json(r.bound_analytic)}};
}

Json to_json(const DistanceReport& r) {
  Json opt = Json::array();
  for (Eigen::Index i = 0; i < r.optimizer.size(); ++i) opt.push_back(to_json(r.optimizer[i]));
  return Json{{"inner", to_json(r.inner)},
              {"dual_value", real_json(r.dual_value)},
              {"label", "estimate (lower bound certified)"},
              {"hankel_norm", real_json(r.hankel_norm)},
              {"ratio", real_json(r.ratio)},
              {"starts", r.starts},
              {"iterations", r.iterations},
              {"optimizer", opt}};
}

Json to_json(const PrimalCertificate& c) {
  return Json{{"analytic", to_json(c.analytic)},
              {"conj_part", to_json(c.conj_part)},
              {"sup_error", real_json(c.sup_error)},
              {"grid_nodes", c.grid_nodes},
              {"band", c.band}};
}

Json to_json(const ConvolutionTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back(Json{{"r", r.r},
                        {"smoothed_error", real_json(r.smoothed_error)},
                        {"inner_dilation_error", real_json(r.inner_dilation_error)}});
  return Json{{"dual_value", real_json(t.dual_value)}, {"certificate", to_json(t.certificate)}, {"rows", rows}};
}

Json to_json(const BesovValue& b) {
  return Json{{"norm", real_json(b.norm)},
              {"degree", b.degree},
              {"per_generation", real_list(b.per_generation)},
              {"last_generation", real_json(b.last_generation)}};
}

Json to_json(const ConjectureProbe& p) {
  Json rows = Json::array();
  for (const auto& r : p.rows)
    rows.push_back(Json{{"index", r.index},
                        {"schatten", real_json(r.schatten)},
                        {"besov", real_json(r.besov)},
                        {"ratio", real_json(r.ratio)}});
  return Json{{"label", "exploratory"},
              {"p", p.p},
              {"alpha", to_json(p.alpha)},
              {"generations", p.generations},
              {"rows", rows},
              {"ratio_min", real_json(p.ratio_min)},
              {"ratio_max", real_json(p.ratio_max)},
              {"ratio_median", real_json(p.ratio_median)}};
}

CsvTable& CsvTable::row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw std::invalid_argument("CSV row width does not match the header");
  rows_.push_back(std::move(cells));
  return *this;
}

void CsvTable::write(std::ostream& out) const {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
}

void CsvTable::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write(out);
}

CsvTable basis_samples_csv(const ModelSpaceBasis& basis, long nodes) {
  std::vector<std::string> header{"j", "angle"};
  for (int k = 0; k < basis.dim(); ++k) {
    header.push_back("e" + std::to_string(k) + "_re");
    header.push_back("e" + std::to_string(k) + "_im");
  }
  CsvTable table(header);
  const QuadratureGrid grid(nodes);
  const ArrayXc xi = grid.nodes();
  const MatrixXc s = basis.sample(xi);
  for (long j = 0; j < nodes; ++j) {
    std::vector<std::string> cells{std::to_string(j), format_real(kTwoPi * static_cast<Real>(j) / static_cast<Real>(nodes))};
    for (int k = 0; k < basis.dim(); ++k) {
      cells.push_back(format_real(s(j, k).real()));
      cells.push_back(format_real(s(j, k).imag()));
    }
    table.row(std::move(cells));
  }
  return table;
}

CsvTable matrix_csv(const MatrixXc& m) {
  CsvTable table({"row", "col", "re", "im"});
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      table.row({std::to_string(i), std::to_string(k), format_real(m(i, k).real()), format_real(m(i, k).imag())});
  return table;
}

}  // namespace ttlab
