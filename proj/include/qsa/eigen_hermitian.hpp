#ifndef QSA_EIGEN_HERMITIAN_HPP
#define QSA_EIGEN_HERMITIAN_HPP

#include <vector>

#include "qsa/complex_matrix.hpp"

namespace qsa {

// Input must satisfy ||a - adjoint(a)||_F <= kHermTol * ||a||_F.
inline constexpr double kHermTol = 1e-9;

struct EigenSystem {
  std::vector<double> values;        // real, sorted descending
  std::vector<StateVector> vectors;  // orthonormal, vectors[k] pairs values[k]
};

// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
// Sweeps run until the off-diagonal Frobenius mass drops below
// 1e-12 * ||a||_F, capped at 100 sweeps.
//
// Guarantees: a * v_k = values[k] * v_k with residual <= 1e-8 * ||a||_F,
// pairwise orthonormality within 1e-9. Throws HermiticityError if the
// input fails the Hermiticity tolerance.
EigenSystem eig_hermitian(const ComplexMatrix& a);

}  // namespace qsa

#endif  // QSA_EIGEN_HERMITIAN_HPP
