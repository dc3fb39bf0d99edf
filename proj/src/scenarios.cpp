#include "qsa/scenarios.hpp"

namespace qsa {

double fidelity_pure(const DensityMatrix& result,
                     const DensityMatrix& expected) {
  const Complex t = trace(matmul(result.matrix(), expected.matrix()));
  return t.real();
}

namespace {

ScenarioReport make_report(std::string name, const ConditionalResult& cond,
                           DensityMatrix expected) {
  const double fid = fidelity_pure(cond.cdm, expected);
  return ScenarioReport{std::move(name), cond.probability, cond.cdm,
                        std::move(expected), fid};
}

}  // namespace

ScenarioReport parapositronium(const Direction& m) {
  const DensityMatrix rho =
      DensityMatrix::from_state(singlet(), FactorShape{2, 2});
  const ConditionalResult cond =
      conditional(rho, projector_onto(chi(m, 1)), std::size_t{2});
  DensityMatrix expected =
      DensityMatrix::from_state(chi(m, -1), FactorShape{2});
  return make_report("parapositronium", cond, std::move(expected));
}

ScenarioReport teleportation(const Direction& m) {
  const StateVector psi = tensor_vec(singlet(), chi(m, 1));  // factors 1,2,3
  const DensityMatrix rho = DensityMatrix::from_state(psi, FactorShape{2, 2, 2});
  const ConditionalResult cond = conditional(
      rho, projector_onto(singlet()), std::vector<std::size_t>{1, 3});
  DensityMatrix expected = DensityMatrix::from_state(chi(m, 1), FactorShape{2});
  return make_report("teleportation", cond, std::move(expected));
}

ScenarioReport entanglement_swapping() {
  const StateVector psi = tensor_vec(singlet(), singlet());  // factors 1..4
  const DensityMatrix rho =
      DensityMatrix::from_state(psi, FactorShape{2, 2, 2, 2});
  const ConditionalResult cond = conditional(
      rho, projector_onto(singlet()), std::vector<std::size_t>{2, 3});
  DensityMatrix expected =
      DensityMatrix::from_state(singlet(), FactorShape{2, 2});
  return make_report("swapping", cond, std::move(expected));
}

ScenarioReport polarized_pairs(const Direction& n, const Direction& m,
                               const Direction& r, const Direction& s) {
  if (!spinors_orthogonal(n, m)) {
    throw OrthogonalityError(
        "polarized_pairs: chi_n and chi_m are not orthogonal");
  }
  if (!spinors_orthogonal(r, s)) {
    throw OrthogonalityError(
        "polarized_pairs: chi_r and chi_s are not orthogonal");
  }
  const StateVector psi = tensor_vec(singlet(), singlet());
  const DensityMatrix rho =
      DensityMatrix::from_state(psi, FactorShape{2, 2, 2, 2});
  const StateVector filter = tensor_vec(chi(m, 1), chi(s, 1));
  const ConditionalResult cond = conditional(
      rho, projector_onto(filter), std::vector<std::size_t>{2, 4});
  DensityMatrix expected = DensityMatrix::from_state(
      tensor_vec(chi(n, 1), chi(r, 1)), FactorShape{2, 2});
  return make_report("polarized-pairs", cond, std::move(expected));
}

}  // namespace qsa
