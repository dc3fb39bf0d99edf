#include "qsa/eigen_hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qsa {

namespace {

constexpr double kOffDiagTol = 1e-12;  // relative to ||a||_F
constexpr int kMaxSweeps = 100;

double offdiag_frobenius(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// One Jacobi step: zero a(p, q) with the unitary
//
//   U = [ c          -s e^{i phi} ]      (rows/cols p, q; identity elsewhere)
//       [ s e^{-i phi}      c     ]
//
// where phi is the phase of a(p, q), and c = cos(theta), s = sin(theta) come
// from the real rotation that diagonalises [[app, |apq|], [|apq|, aqq]].
// Updates a <- U^H a U and accumulates v <- v U, so the columns of v stay the
// eigenvector candidates.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;

  const Complex phase = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  // Smaller root of t^2 - 2 tau t - 1 = 0 keeps |theta| <= pi/4.
  const double t = (tau >= 0.0 ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                               : -1.0 / (tau - std::sqrt(1.0 + tau * tau)));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex u_pq = -s * phase;             // U(p, q)
  const Complex u_qp = s * std::conj(phase);   // U(q, p)

  const std::size_t n = a.dim();
  // Columns: a <- a U.
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp + u_qp * akq;
    a(k, q) = u_pq * akp + c * akq;
  }
  // Rows: a <- U^H a.
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk + std::conj(u_qp) * aqk;
    a(q, k) = std::conj(u_pq) * apk + c * aqk;
  }
  // Pin what the rotation made exact by construction.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp + u_qp * vkq;
    v(k, q) = u_pq * vkp + c * vkq;
  }
}

}  // namespace

EigenSystem eig_hermitian(const ComplexMatrix& input) {
  const double norm = frobenius_norm(input);
  const double herm_residual = frobenius_norm(input - adjoint(input));
  if (herm_residual > kHermTol * norm) {
    throw HermiticityError("eig_hermitian: ||a - a^H|| = " +
                           std::to_string(herm_residual) + " exceeds " +
                           std::to_string(kHermTol) + " * ||a||");
  }

  const std::size_t n = input.dim();
  // Work on the Hermitian average so tolerated asymmetry cannot drift.
  ComplexMatrix a = Complex(0.5, 0.0) * (input + adjoint(input));
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double target = kOffDiagTol * norm;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_frobenius(a) <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) > target / (n * n)) rotate(a, v, p, q);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigenSystem out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t k : order) {
    out.values.push_back(a(k, k).real());
    std::vector<Complex> column(n);
    for (std::size_t i = 0; i < n; ++i) column[i] = v(i, k);
    out.vectors.emplace_back(std::move(column));
  }
  return out;
}

}  // namespace qsa
