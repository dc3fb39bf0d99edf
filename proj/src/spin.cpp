#include "qsa/spin.hpp"

#include <cmath>
#include <string>

namespace qsa {

std::array<double, 3> unit_vector(const Direction& n) {
  return {std::sin(n.theta) * std::cos(n.phi),
          std::sin(n.theta) * std::sin(n.phi), std::cos(n.theta)};
}

Direction antipode(const Direction& n) {
  const double two_pi = 2.0 * M_PI;
  double phi = std::fmod(n.phi + M_PI, two_pi);
  if (phi < 0.0) phi += two_pi;
  return Direction{M_PI - n.theta, phi};
}

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m =
      ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  return m;
}

const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m = ComplexMatrix::from_rows(
      {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
  return m;
}

const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m =
      ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  return m;
}

Observable sigma_dot_n(const Direction& n) {
  const auto [nx, ny, nz] = unit_vector(n);
  return Observable(Complex(nx, 0.0) * pauli_x() +
                    Complex(ny, 0.0) * pauli_y() +
                    Complex(nz, 0.0) * pauli_z());
}

StateVector chi(const Direction& n, int sign) {
  if (sign != 1 && sign != -1) {
    throw Error("chi: sign must be +1 or -1, got " + std::to_string(sign));
  }
  const double c = std::cos(n.theta / 2.0);
  const double s = std::sin(n.theta / 2.0);
  const Complex up_phase = std::polar(1.0, n.phi);
  if (sign == 1) {
    return StateVector({Complex(c, 0.0), up_phase * s});
  }
  return StateVector({-std::conj(up_phase) * s, Complex(c, 0.0)});
}

StateVector singlet() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return StateVector({0.0, Complex(inv_sqrt2, 0.0),
                      Complex(-inv_sqrt2, 0.0), 0.0});
}

Projector projector_onto(const StateVector& v) {
  double norm_sq = 0.0;
  for (const Complex& a : v.amplitudes()) norm_sq += std::norm(a);
  if (std::abs(std::sqrt(norm_sq) - 1.0) > kNormTol) {
    throw NormalizationError("projector_onto: vector is not unit norm");
  }
  return Projector(outer(v, v));
}

bool spinors_orthogonal(const Direction& a, const Direction& b, double tol) {
  return std::abs(inner(chi(a, 1), chi(b, 1))) <= tol;
}

}  // namespace qsa
