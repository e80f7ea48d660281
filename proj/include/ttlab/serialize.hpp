#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ttlab/nehari.hpp"
#include "ttlab/oscillation.hpp"
#include "ttlab/spectra.hpp"

namespace ttlab {

using Json = nlohmann::ordered_json;

/// {"re": x, "im": y}.
Json to_json(Complex c);
Complex complex_from_json(const Json& j);

/// {"zeros": [{"re", "im"}...], "gamma": {"re", "im"}}.
Json to_json(const BlaschkeProduct& theta);
BlaschkeProduct blaschke_from_json(const Json& j);

/// {"coeffs": [{"k": k, "re", "im"}...]} in increasing k.
Json to_json(const TrigPoly& p);
TrigPoly trig_poly_from_json(const Json& j);

/// {"alpha": {"re", "im"}, "atoms": [{"xi": {"re", "im"}, "w": w}...]}.
Json to_json(const ClarkMeasure& sigma);
ClarkMeasure clark_measure_from_json(const Json& j);

/// {"rows", "cols", "data": [[re, im]...]} with data in row-major order.
Json matrix_to_json(const MatrixXc& m);
MatrixXc matrix_from_json(const Json& j);
/// The matrix object plus "domain", "codomain" and "provenance".
Json to_json(const OperatorMatrix& op);

Json to_json(const SpectralReport& r);
Json to_json(const ClusterReport& r);
Json to_json(const EssentialSpectrumReport& r);
Json to_json(const DecayRow& r);
Json to_json(const DistanceReport& r);
Json to_json(const PrimalCertificate& c);
Json to_json(const ConvolutionTable& t);
Json to_json(const BesovValue& b);
Json to_json(const ConjectureProbe& p);

/// Real as a JSON number, NaN and infinities as null.
Json real_json(Real x);

/// Deterministic text form: two-space indentation and a trailing newline.
std::string dump(const Json& j);

/// %.17g.
std::string format_real(Real x);

/// Comma-separated table with a header line; cells are written as given.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  CsvTable& row(std::vector<std::string> cells);
  void write(std::ostream& out) const;
  void write(const std::string& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Basis samples e_k(xi_j) on an M-point grid: columns j, angle, then re/im per element.
CsvTable basis_samples_csv(const ModelSpaceBasis& basis, long nodes);
/// Row-major (row, col, re, im).
CsvTable matrix_csv(const MatrixXc& m);

}  // namespace ttlab
