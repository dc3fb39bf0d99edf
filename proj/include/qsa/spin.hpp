#ifndef QSA_SPIN_HPP
#define QSA_SPIN_HPP

#include <array>

#include "qsa/complex_matrix.hpp"
#include "qsa/density_matrix.hpp"

namespace qsa {

// Unit vector n = (sin t cos p, sin t sin p, cos t) on the Bloch sphere.
// Photon polarization uses the same 2-dimensional primitives as spin-1/2.
struct Direction {
  double theta;  // polar angle, radians
  double phi;    // azimuthal angle, radians
};

std::array<double, 3> unit_vector(const Direction& n);

// Direction whose +1 spinor is orthogonal to chi(n, +1): the antipodal
// point (pi - theta, phi + pi).
Direction antipode(const Direction& n);

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

// Spin projection onto n: n_x sx + n_y sy + n_z sz. Hermitian, traceless,
// squares to the identity.
Observable sigma_dot_n(const Direction& n);

// Eigenvector of sigma_dot_n(n) with eigenvalue sign (+1 or -1). Phase
// convention:
//   chi(n, +1) = (cos t/2, e^{i p} sin t/2)
//   chi(n, -1) = (-e^{-i p} sin t/2, cos t/2)
StateVector chi(const Direction& n, int sign);

// The antisymmetric two-qubit state (|01> - |10>)/sqrt(2): total spin zero,
// identical components whichever direction's eigenbasis builds it.
StateVector singlet();

// Rank-1 projector |v><v|.
Projector projector_onto(const StateVector& v);

// True iff |<chi(a,+1)|chi(b,+1)>| <= tol, i.e. the spinors of the two
// directions are orthogonal (the directions are antipodal).
bool spinors_orthogonal(const Direction& a, const Direction& b,
                        double tol = 1e-9);

}  // namespace qsa

#endif  // QSA_SPIN_HPP
