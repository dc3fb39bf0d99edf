#ifndef QSA_JSON_IO_HPP
#define QSA_JSON_IO_HPP

#include <json.hpp>

#include "qsa/density_matrix.hpp"
#include "qsa/scenarios.hpp"
#include "qsa/vernam.hpp"

namespace qsa {

// Matrix document: {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// Density-matrix document: the matrix fields plus "shape": [d1, d2, ...].
nlohmann::json density_to_json(const DensityMatrix& rho);

// Structurally parsed density-matrix document, before any axiom check.
// Lets callers (the validate command) measure the axioms themselves.
struct DensityDocument {
  ComplexMatrix matrix;
  FactorShape shape;
};
DensityDocument density_document_from_json(const nlohmann::json& j);
DensityMatrix density_from_json(const nlohmann::json& j,
                                double axiom_tol = kAxiomTol);

nlohmann::json direction_to_json(const Direction& d);
Direction direction_from_json(const nlohmann::json& j);

nlohmann::json scenario_report_to_json(const ScenarioReport& report);

// Transcript document; pairs carry the classified polarization bits and
// "eve" the single-stream statistics for the requested stream.
nlohmann::json transcript_to_json(const ProtocolTranscript& transcript,
                                  int eve_stream, const Direction& basis0,
                                  const Direction& basis1);

}  // namespace qsa

#endif  // QSA_JSON_IO_HPP
