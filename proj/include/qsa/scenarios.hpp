#ifndef QSA_SCENARIOS_HPP
#define QSA_SCENARIOS_HPP

#include <string>

#include "qsa/density_matrix.hpp"
#include "qsa/spin.hpp"

namespace qsa {

// Outcome of one conditioning scenario: the selection probability of the
// conditioning event, the conditional state it leaves behind, and the
// closed-form state it should equal.
struct ScenarioReport {
  std::string name;
  double probability;
  DensityMatrix result_state;
  DensityMatrix expected_state;
  double fidelity;  // Tr(result * expected); 1 iff they match (pure target)
};

// Tr(result * expected), valid as a fidelity when expected is pure.
double fidelity_pure(const DensityMatrix& result,
                     const DensityMatrix& expected);

// Electron-positron pair in the total-spin-zero state. Selecting the
// positron polarization along m leaves the electron polarized along -m,
// with selection probability 1/2.
ScenarioReport parapositronium(const Direction& m);

// Photons (1,2) in the singlet state joined with photon 3 polarized along
// m. Selecting the pair (1,3) into the singlet leaves photon 2 polarized
// along m, with probability 1/4.
ScenarioReport teleportation(const Direction& m);

// Two singlet pairs (1,2) and (3,4). Selecting (2,3) into the singlet
// leaves (1,4) in the singlet state, with probability 1/4.
ScenarioReport entanglement_swapping();

// Two singlet pairs; photons 2 and 4 are selected with polarizations m and
// s. Photons (1,3) end up in the pure product chi_n (x) chi_r, where n, r
// are the directions orthogonal to m, s. Probability 1/4. Throws
// OrthogonalityError unless <chi_n|chi_m> = <chi_r|chi_s> = 0 within 1e-9.
ScenarioReport polarized_pairs(const Direction& n, const Direction& m,
                               const Direction& r, const Direction& s);

}  // namespace qsa

#endif  // QSA_SCENARIOS_HPP
