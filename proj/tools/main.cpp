#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qsa/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPhysics = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

// Fidelity at or above this reports success.
constexpr double kFidelityGate = 1.0 - 1e-8;

std::string fmt_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string fmt_complex(qsa::Complex z) {
  const char sign = (z.imag() < 0.0) ? '-' : '+';
  return fmt_num(z.real()) + sign + fmt_num(std::abs(z.imag())) + "i";
}

void print_matrix(std::ostream& os, const qsa::ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      os << ' ' << fmt_complex(m(i, j));
    }
    os << " ]\n";
  }
}

void print_state(std::ostream& os, const char* label,
                 const qsa::DensityMatrix& rho) {
  os << label << " (shape [";
  for (std::size_t i = 0; i < rho.shape().count(); ++i) {
    if (i) os << ", ";
    os << rho.shape().factors()[i];
  }
  os << "]):\n";
  print_matrix(os, rho.matrix());
}

int emit_scenario(const qsa::ScenarioReport& report, bool as_json) {
  if (as_json) {
    std::cout << qsa::scenario_report_to_json(report).dump() << "\n";
  } else {
    std::cout << "scenario: " << report.name << "\n"
              << "probability: " << fmt_num(report.probability) << "\n"
              << "fidelity: " << fmt_num(report.fidelity) << "\n";
    print_state(std::cout, "result_state", report.result_state);
    print_state(std::cout, "expected_state", report.expected_state);
  }
  return report.fidelity >= kFidelityGate ? kExitOk : kExitPhysics;
}

int run_scenario(const std::string& name, const std::vector<double>& thetas,
                 const std::vector<double>& phis, bool as_json) {
  if (thetas.size() != phis.size()) {
    std::cerr << "scenario: each --theta needs a matching --phi\n";
    return kExitUsage;
  }
  std::vector<qsa::Direction> dirs;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    dirs.push_back(qsa::Direction{thetas[i], phis[i]});
  }

  try {
    if (name == "parapositronium" || name == "teleportation") {
      if (dirs.size() > 1) {
        std::cerr << "scenario " << name << ": takes at most one direction\n";
        return kExitUsage;
      }
      const qsa::Direction m = dirs.empty() ? qsa::Direction{0.0, 0.0} : dirs[0];
      return emit_scenario(name == "parapositronium" ? qsa::parapositronium(m)
                                                     : qsa::teleportation(m),
                           as_json);
    }
    if (name == "swapping") {
      if (!dirs.empty()) {
        std::cerr << "scenario swapping: takes no directions\n";
        return kExitUsage;
      }
      return emit_scenario(qsa::entanglement_swapping(), as_json);
    }
    if (name == "polarized-pairs") {
      if (dirs.empty()) {
        // photon order n, m, r, s
        dirs = {qsa::Direction{0.0, 0.0}, qsa::antipode({0.0, 0.0}),
                qsa::Direction{M_PI / 2.0, 0.0},
                qsa::antipode({M_PI / 2.0, 0.0})};
      }
      if (dirs.size() != 4) {
        std::cerr << "scenario polarized-pairs: needs four directions "
                     "(n, m, r, s)\n";
        return kExitUsage;
      }
      return emit_scenario(
          qsa::polarized_pairs(dirs[0], dirs[1], dirs[2], dirs[3]), as_json);
    }
  } catch (const qsa::OrthogonalityError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  std::cerr << "unknown scenario \"" << name
            << "\"; expected parapositronium, teleportation, swapping or "
               "polarized-pairs\n";
  return kExitUsage;
}

int run_vernam(std::uint64_t seed, const std::string& message_hex,
               int eve_stream) {
  // Agreed polarizer settings: bit 0 along +z, bit 1 along the antipode.
  const qsa::Direction basis0{0.0, 0.0};
  const qsa::Direction basis1 = qsa::antipode(basis0);

  try {
    const qsa::BitString message = qsa::BitString::from_hex(message_hex);
    const qsa::ProtocolTranscript transcript =
        qsa::run_protocol(seed, message, basis0, basis1);
    std::cout << qsa::transcript_to_json(transcript, eve_stream, basis0, basis1)
                     .dump()
              << "\n";
    return transcript.decoded == message ? kExitOk : kExitPhysics;
  } catch (const qsa::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;  // malformed hex and friends
  }
}

int run_validate(const std::string& path, bool as_json) {
  nlohmann::json doc;
  qsa::ComplexMatrix matrix(1);
  std::vector<std::size_t> shape;
  try {
    std::ifstream in(path);
    if (!in) throw qsa::Error("cannot open " + path);
    in >> doc;
    qsa::DensityDocument parsed = qsa::density_document_from_json(doc);
    matrix = std::move(parsed.matrix);
    shape = parsed.shape.factors();
  } catch (const std::exception& e) {
    std::cerr << "validate: " << e.what() << "\n";
    return kExitData;
  }

  const qsa::AxiomReport report = qsa::check_density_axioms(matrix);
  if (as_json) {
    std::cout << nlohmann::json{
                     {"pass", report.ok()},
                     {"hermitian", report.hermitian},
                     {"unit_trace", report.unit_trace},
                     {"positive_semidefinite", report.positive_semidefinite},
                     {"hermiticity_residual", report.hermiticity_residual},
                     {"trace_deviation", report.trace_deviation},
                     {"min_eigenvalue", report.min_eigenvalue}}
                     .dump()
              << "\n";
  } else {
    std::cout << "dim " << matrix.dim() << ", shape [";
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << shape[i];
    }
    std::cout << "]\n"
              << "hermiticity residual " << fmt_num(report.hermiticity_residual)
              << ": " << (report.hermitian ? "PASS" : "FAIL") << "\n"
              << "trace deviation " << fmt_num(report.trace_deviation) << ": "
              << (report.unit_trace ? "PASS" : "FAIL") << "\n"
              << "min eigenvalue " << fmt_num(report.min_eigenvalue) << ": "
              << (report.positive_semidefinite ? "PASS" : "FAIL") << "\n"
              << "axioms: " << (report.ok() ? "PASS" : "FAIL") << "\n";
  }
  return report.ok() ? kExitOk : kExitPhysics;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qsa: finite-dimensional density-matrix algebra, conditional states, "
      "and a photon-pair one-time-pad simulation"};
  app.require_subcommand(1);

  auto* scen = app.add_subcommand(
      "scenario", "run a conditioning scenario and report its outcome");
  std::string scen_name;
  std::vector<double> thetas, phis;
  bool scen_json = false;
  scen->add_option("name", scen_name,
                   "parapositronium | teleportation | swapping | "
                   "polarized-pairs")
      ->required();
  scen->add_option("--theta", thetas,
                   "direction polar angle in radians (repeat per photon)");
  scen->add_option("--phi", phis,
                   "direction azimuth in radians (repeat per photon)");
  scen->add_flag("--json", scen_json, "emit the report as JSON");

  auto* ver = app.add_subcommand(
      "vernam", "run the photon-pair one-time-pad simulation (JSON output)");
  std::uint64_t seed = 0;
  std::string message_hex;
  int eve_stream = 1;
  bool ver_json = false;
  ver->add_option("--seed", seed, "PRNG seed for the key")->required();
  ver->add_option("--message", message_hex, "message as hex")->required();
  ver->add_option("--eve-stream", eve_stream,
                  "photon stream for the eavesdropper statistics")
      ->check(CLI::IsMember({1, 3}));
  ver->add_flag("--json", ver_json, "accepted for symmetry; output is JSON");

  auto* val = app.add_subcommand(
      "validate", "check a density-matrix JSON file against the state axioms");
  std::string path;
  bool val_json = false;
  val->add_option("file", path, "density-matrix JSON document")->required();
  val->add_flag("--json", val_json, "emit the diagnostics as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (scen->parsed()) return run_scenario(scen_name, thetas, phis, scen_json);
  if (ver->parsed()) return run_vernam(seed, message_hex, eve_stream);
  return run_validate(path, val_json);
}
