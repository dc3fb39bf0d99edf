#ifndef QSA_COMPLEX_MATRIX_HPP
#define QSA_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qsa/errors.hpp"

namespace qsa {

using Complex = std::complex<double>;

// Default scalar comparison: |x - y| <= atol + rtol * max(|x|, |y|).
inline constexpr double kDefaultAtol = 1e-12;
inline constexpr double kDefaultRtol = 1e-9;

// Unit-norm tolerance for state vectors.
inline constexpr double kNormTol = 1e-10;

bool approx_equal(double x, double y, double atol = kDefaultAtol,
                  double rtol = kDefaultRtol);
bool approx_equal(Complex x, Complex y, double atol = kDefaultAtol,
                  double rtol = kDefaultRtol);

// Dense square complex matrix with row-major storage. entry(i, j) is the
// kernel value at row i, column j. Entries must stay finite; constructors
// taking external data enforce that.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const { return dim_; }

  Complex operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }
  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * dim_ + j];
  }

  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

// Normalized complex amplitude vector (|norm - 1| <= kNormTol enforced).
class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amplitudes);

  // k-th computational basis vector of the given dimension.
  static StateVector basis(std::size_t dim, std::size_t k);

  std::size_t dim() const { return amplitudes_.size(); }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }

 private:
  std::vector<Complex> amplitudes_;
};

// Ordered tensor-factor dimensions of a composite space H1 (x) H2 (x) ...
// Factor indices are 1-based in every public interface. The left factor is
// the slow (outer) index: a full index i decodes as i = ((i1*d2 + i2)*d3 + ...
class FactorShape {
 public:
  explicit FactorShape(std::vector<std::size_t> factors);
  FactorShape(std::initializer_list<std::size_t> factors);

  std::size_t count() const { return factors_.size(); }
  std::size_t factor_dim(std::size_t index1) const;
  const std::vector<std::size_t>& factors() const { return factors_; }
  std::size_t total_dim() const;

  // Throws ShapeError unless total_dim() == dim.
  void validate_against(std::size_t dim) const;

  // Full index <-> per-factor digits (0-based digit values).
  std::vector<std::size_t> decode(std::size_t index) const;
  std::size_t encode(const std::vector<std::size_t>& digits) const;

  // Sub-shape of the given 1-based factor indices (ascending) and the
  // ascending complement of such a set.
  FactorShape sub_shape(const std::vector<std::size_t>& indices1) const;
  std::vector<std::size_t> complement(
      const std::vector<std::size_t>& indices1) const;

 private:
  std::vector<std::size_t> factors_;
};

// ---- operations ------------------------------------------------------------

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

// Kronecker product; left factor is the slow index, so
// result(i1*db + i2, j1*db + j2) = a(i1, j1) * b(i2, j2).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector tensor_vec(const StateVector& v, const StateVector& w);

// Sums out every factor not listed in keep (1-based, non-empty, no
// duplicates). Kept factors stay in ascending original order.
ComplexMatrix partial_trace(const ComplexMatrix& a, const FactorShape& shape,
                            const std::vector<std::size_t>& keep);

// Places an operator acting on the listed factors (ascending, joint
// left-slow indexing) into the full space, identity on the others.
ComplexMatrix embed_on_factors(const ComplexMatrix& op,
                               const FactorShape& shape,
                               const std::vector<std::size_t>& factors1);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, Complex s);

// <v|w>, conjugate-linear in the first argument.
Complex inner(const StateVector& v, const StateVector& w);

// |v><w|
ComplexMatrix outer(const StateVector& v, const StateVector& w);

double frobenius_norm(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qsa

#endif  // QSA_COMPLEX_MATRIX_HPP
