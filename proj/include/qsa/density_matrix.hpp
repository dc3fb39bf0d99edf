#ifndef QSA_DENSITY_MATRIX_HPP
#define QSA_DENSITY_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qsa/complex_matrix.hpp"
#include "qsa/eigen_hermitian.hpp"

namespace qsa {

// Axiom tolerance at construction; reduce/conditional re-validate their
// results at the looser value.
inline constexpr double kAxiomTol = 1e-9;
inline constexpr double kAxiomTolLoose = 1e-8;

// Below this selection probability the conditional state is undefined.
inline constexpr double kProbTol = 1e-12;

// Eigenvalues closer than this are treated as one degenerate group.
inline constexpr double kEigGroupTol = 1e-8;

inline constexpr double kPurityTol = 1e-8;

// Measured residuals of the three density-matrix axioms. hermiticity is
// checked against tol * max(1, ||m||_F); trace and min-eigenvalue against
// tol directly. The eigenvalue is taken from the Hermitian part so the
// check never throws, whatever the input.
struct AxiomReport {
  double hermiticity_residual;
  double trace_deviation;
  double min_eigenvalue;
  bool hermitian;
  bool unit_trace;
  bool positive_semidefinite;

  bool ok() const { return hermitian && unit_trace && positive_semidefinite; }
};

AxiomReport check_density_axioms(const ComplexMatrix& m,
                                 double tol = kAxiomTol);

// Hermitian, PSD, unit-trace operator annotated with its tensor-factor
// structure. Construction validates all three axioms and the shape.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, FactorShape shape,
                double axiom_tol = kAxiomTol);

  static DensityMatrix from_state(const StateVector& psi, FactorShape shape);
  static DensityMatrix maximally_mixed(FactorShape shape);

  std::size_t dim() const { return matrix_.dim(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const FactorShape& shape() const { return shape_; }

 private:
  ComplexMatrix matrix_;
  FactorShape shape_;
};

// Hermitian operator (a real physical variable).
class Observable {
 public:
  explicit Observable(ComplexMatrix matrix);

  std::size_t dim() const { return matrix_.dim(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

// Hermitian idempotent operator (||P^2 - P||_F <= 1e-9 enforced).
class Projector {
 public:
  explicit Projector(ComplexMatrix matrix);

  std::size_t dim() const { return matrix_.dim(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

// rho = sum_n p_n P_n with orthogonal projectors summing to identity.
// Eigenvalues are descending; degenerate values (within kEigGroupTol) are
// merged into a single projector.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<Projector> projectors;
};

// Outcome of conditioning: the conditional density matrix of the kept
// factors and the selection probability p = Tr(P rho), clamped to [0, 1].
struct ConditionalResult {
  DensityMatrix cdm;
  double probability;
};

// One branch of a mixture expansion. cdm is absent when the branch
// probability is <= kProbTol.
struct MixtureTerm {
  double probability;
  std::optional<DensityMatrix> cdm;
};

// ---- operations ------------------------------------------------------------

// <F> = Re Tr(F rho). The imaginary part of the trace must vanish within
// 1e-9 (AxiomViolation otherwise, since that indicates broken invariants).
double expectation(const Observable& f, const DensityMatrix& rho);

// Tr(Q^2 rho) with Q = F - <F> I. Nonnegative; values in [-1e-10, 0) are
// rounding and clamp to zero.
double dispersion(const Observable& f, const DensityMatrix& rho);

// True iff dispersion(f, rho) <= tol. tol must be positive.
bool has_definite_value(const Observable& f, const DensityMatrix& rho,
                        double tol);

// Tr(rho^2); 1 for pure states, 1/dim for the maximally mixed state.
double purity(const DensityMatrix& rho);

// True iff ||rho^2 - rho||_F <= kPurityTol.
bool is_pure(const DensityMatrix& rho);

// Reduced density matrix of the kept factors (1-based, ascending output
// order). Throws ShapeError for an invalid keep set and AxiomViolation if
// the result fails re-validation, which would mean a bug upstream.
DensityMatrix reduce(const DensityMatrix& rho,
                     const std::vector<std::size_t>& keep);

// Conditional density matrix
//
//   cdm = Tr_S(P rho) / Tr(P rho)
//
// where P acts on the factor set S (joint left-slow indexing, ascending)
// and is embedded as identity elsewhere. The result lives on the remaining
// factors. Throws ZeroProbability when Tr(P rho) <= kProbTol.
ConditionalResult conditional(const DensityMatrix& rho, const Projector& p2,
                              const std::vector<std::size_t>& on_factors);
ConditionalResult conditional(const DensityMatrix& rho, const Projector& p2,
                              std::size_t on_factor);

SpectralDecomposition spectral(const DensityMatrix& rho);

// Expands the reduced state of the complement of on_factor over a complete
// orthonormal basis of that factor: reduce(rho) = sum_n p_n cdm_n. Terms
// come back in basis order; branches with p_n <= kProbTol carry no cdm.
// Throws BasisError if the basis is not orthonormal or not complete.
std::vector<MixtureTerm> mixture_expansion(const DensityMatrix& rho,
                                           const std::vector<StateVector>& basis2,
                                           std::size_t on_factor);

}  // namespace qsa

#endif  // QSA_DENSITY_MATRIX_HPP
