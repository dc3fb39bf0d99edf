#include "qsa/json_io.hpp"

#include <string>
#include <vector>

namespace qsa {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"dim", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

namespace {

// Accepts both unsigned and signed integer storage; JSON text always parses
// nonnegative integers as unsigned, but documents built in code may not.
bool is_positive_integer(const json& v) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>() > 0;
  return v.is_number_integer() && v.get<std::int64_t>() > 0;
}

// Reads an n x n numeric grid, complaining with the field name on any
// structural problem.
std::vector<std::vector<double>> read_grid(const json& j, const char* field,
                                           std::size_t n) {
  if (!j.contains(field) || !j[field].is_array() || j[field].size() != n) {
    throw Error(std::string("matrix document: \"") + field +
                "\" must be an array of " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<double>> grid;
  grid.reserve(n);
  for (const json& row : j[field]) {
    if (!row.is_array() || row.size() != n) {
      throw Error(std::string("matrix document: ragged row in \"") + field +
                  "\"");
    }
    std::vector<double> values;
    values.reserve(n);
    for (const json& v : row) {
      if (!v.is_number()) {
        throw Error(std::string("matrix document: non-numeric entry in \"") +
                    field + "\"");
      }
      values.push_back(v.get<double>());
    }
    grid.push_back(std::move(values));
  }
  return grid;
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !is_positive_integer(j["dim"])) {
    throw Error("matrix document: \"dim\" must be a positive integer");
  }
  const std::size_t n = j["dim"].get<std::size_t>();
  const auto re = read_grid(j, "re", n);
  const auto im = read_grid(j, "im", n);
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      entries.emplace_back(re[i][k], im[i][k]);
    }
  }
  return ComplexMatrix(n, std::move(entries));
}

json density_to_json(const DensityMatrix& rho) {
  json j = matrix_to_json(rho.matrix());
  j["shape"] = rho.shape().factors();
  return j;
}

DensityDocument density_document_from_json(const json& j) {
  ComplexMatrix m = matrix_from_json(j);
  if (!j.contains("shape") || !j["shape"].is_array() || j["shape"].empty()) {
    throw Error("density document: \"shape\" must be a non-empty array");
  }
  std::vector<std::size_t> factors;
  for (const json& f : j["shape"]) {
    if (!is_positive_integer(f)) {
      throw Error("density document: shape entries must be positive integers");
    }
    factors.push_back(f.get<std::size_t>());
  }
  FactorShape shape(std::move(factors));
  shape.validate_against(m.dim());
  return DensityDocument{std::move(m), std::move(shape)};
}

DensityMatrix density_from_json(const json& j, double axiom_tol) {
  DensityDocument doc = density_document_from_json(j);
  return DensityMatrix(std::move(doc.matrix), std::move(doc.shape), axiom_tol);
}

json direction_to_json(const Direction& d) {
  return json{{"theta", d.theta}, {"phi", d.phi}};
}

Direction direction_from_json(const json& j) {
  if (!j.is_object() || !j.contains("theta") || !j.contains("phi") ||
      !j["theta"].is_number() || !j["phi"].is_number()) {
    throw Error("direction document: need numeric \"theta\" and \"phi\"");
  }
  return Direction{j["theta"].get<double>(), j["phi"].get<double>()};
}

json scenario_report_to_json(const ScenarioReport& report) {
  return json{{"name", report.name},
              {"probability", report.probability},
              {"fidelity", report.fidelity},
              {"result_state", density_to_json(report.result_state)},
              {"expected_state", density_to_json(report.expected_state)}};
}

json transcript_to_json(const ProtocolTranscript& transcript, int eve_stream,
                        const Direction& basis0, const Direction& basis1) {
  json pairs = json::array();
  for (const PhotonPairRecord& rec : transcript.pairs) {
    pairs.push_back(json{{"pol1_bit", classify(rec.pol1, basis0, basis1)},
                         {"pol3_bit", classify(rec.pol3, basis0, basis1)}});
  }
  const EveStats eve = eve_single_photon_stats(
      transcript.pairs, eve_stream, transcript.message, basis0, basis1);
  return json{{"seed", transcript.seed},
              {"message_hex", transcript.message.to_hex()},
              {"key_hex", transcript.key.to_hex()},
              {"decoded_hex", transcript.decoded.to_hex()},
              {"pairs", std::move(pairs)},
              {"eve", json{{"stream", eve_stream},
                           {"ones_fraction", eve.ones_fraction},
                           {"correlation", eve.correlation_with_message}}}};
}

}  // namespace qsa
