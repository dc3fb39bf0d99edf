#ifndef QSA_ERRORS_HPP
#define QSA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsa {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operand dimensions incompatible (matmul, expectation, bad keep-set, ...).
struct DimensionError : Error {
  using Error::Error;
};

// A FactorShape does not multiply out to the matrix dimension it annotates.
struct ShapeError : Error {
  using Error::Error;
};

// Input to the Hermitian eigensolver is not Hermitian within tolerance.
struct HermiticityError : Error {
  using Error::Error;
};

// A vector expected to be unit-norm is not.
struct NormalizationError : Error {
  using Error::Error;
};

// A value that must satisfy the density-matrix axioms does not. This comes
// out of internal re-validation (reduce, conditional), so it signals a bug
// upstream rather than bad user input.
struct AxiomViolation : Error {
  using Error::Error;
};

// The conditioning event has probability <= TOL_PROB; the conditional
// density matrix is undefined.
struct ZeroProbability : Error {
  using Error::Error;
};

// A supplied basis is not orthonormal/complete, or a recorded polarization
// matches no agreed basis setting.
struct BasisError : Error {
  using Error::Error;
};

// Two directions required to have orthogonal spinors do not.
struct OrthogonalityError : Error {
  using Error::Error;
};

// Bit strings of different lengths where equal lengths are required.
struct LengthError : Error {
  using Error::Error;
};

}  // namespace qsa

#endif  // QSA_ERRORS_HPP
