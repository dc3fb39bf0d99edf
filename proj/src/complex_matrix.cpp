#include "qsa/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qsa {

namespace {

void require_finite(const std::vector<Complex>& values, const char* what) {
  for (const Complex& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(std::string(what) + ": non-finite entry");
    }
  }
}

}  // namespace

bool approx_equal(double x, double y, double atol, double rtol) {
  return std::abs(x - y) <= atol + rtol * std::max(std::abs(x), std::abs(y));
}

bool approx_equal(Complex x, Complex y, double atol, double rtol) {
  return std::abs(x - y) <= atol + rtol * std::max(std::abs(x), std::abs(y));
}

// ---- ComplexMatrix ----------------------------------------------------------

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex(0.0, 0.0)) {
  if (dim == 0) throw DimensionError("ComplexMatrix: dim must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw DimensionError("ComplexMatrix: dim must be >= 1");
  if (entries_.size() != dim * dim) {
    throw DimensionError("ComplexMatrix: entry count " +
                         std::to_string(entries_.size()) + " != dim^2");
  }
  require_finite(entries_, "ComplexMatrix");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  ComplexMatrix m(n);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw DimensionError("ComplexMatrix::from_rows: ragged row");
    }
    std::size_t j = 0;
    for (const Complex& v : row) m(i, j++) = v;
    ++i;
  }
  require_finite(m.entries_, "ComplexMatrix");
  return m;
}

// ---- StateVector ------------------------------------------------------------

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw DimensionError("StateVector: dim must be >= 1");
  require_finite(amplitudes_, "StateVector");
  double norm_sq = 0.0;
  for (const Complex& a : amplitudes_) norm_sq += std::norm(a);
  if (std::abs(std::sqrt(norm_sq) - 1.0) > kNormTol) {
    throw NormalizationError("StateVector: norm " +
                             std::to_string(std::sqrt(norm_sq)) + " != 1");
  }
}

StateVector StateVector::basis(std::size_t dim, std::size_t k) {
  if (k >= dim) throw DimensionError("StateVector::basis: index out of range");
  std::vector<Complex> amps(dim, Complex(0.0, 0.0));
  amps[k] = 1.0;
  return StateVector(std::move(amps));
}

// ---- FactorShape ------------------------------------------------------------

FactorShape::FactorShape(std::vector<std::size_t> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw ShapeError("FactorShape: no factors");
  for (std::size_t d : factors_) {
    if (d == 0) throw ShapeError("FactorShape: factor dim must be >= 1");
  }
}

FactorShape::FactorShape(std::initializer_list<std::size_t> factors)
    : FactorShape(std::vector<std::size_t>(factors)) {}

std::size_t FactorShape::factor_dim(std::size_t index1) const {
  if (index1 < 1 || index1 > factors_.size()) {
    throw DimensionError("FactorShape: factor index " +
                         std::to_string(index1) + " out of range");
  }
  return factors_[index1 - 1];
}

std::size_t FactorShape::total_dim() const {
  std::size_t d = 1;
  for (std::size_t f : factors_) d *= f;
  return d;
}

void FactorShape::validate_against(std::size_t dim) const {
  if (total_dim() != dim) {
    throw ShapeError("FactorShape: factors multiply to " +
                     std::to_string(total_dim()) + ", matrix dim is " +
                     std::to_string(dim));
  }
}

std::vector<std::size_t> FactorShape::decode(std::size_t index) const {
  std::vector<std::size_t> digits(factors_.size());
  for (std::size_t f = factors_.size(); f-- > 0;) {
    digits[f] = index % factors_[f];
    index /= factors_[f];
  }
  return digits;
}

std::size_t FactorShape::encode(const std::vector<std::size_t>& digits) const {
  std::size_t index = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    index = index * factors_[f] + digits[f];
  }
  return index;
}

FactorShape FactorShape::sub_shape(
    const std::vector<std::size_t>& indices1) const {
  std::vector<std::size_t> dims;
  dims.reserve(indices1.size());
  for (std::size_t idx : indices1) dims.push_back(factor_dim(idx));
  return FactorShape(std::move(dims));
}

std::vector<std::size_t> FactorShape::complement(
    const std::vector<std::size_t>& indices1) const {
  std::vector<std::size_t> rest;
  for (std::size_t f = 1; f <= factors_.size(); ++f) {
    if (std::find(indices1.begin(), indices1.end(), f) == indices1.end()) {
      rest.push_back(f);
    }
  }
  return rest;
}

// ---- operations -------------------------------------------------------------

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("matmul: dims " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r(i, j) = std::conj(a(j, i));
  }
  return r;
}

Complex trace(const ComplexMatrix& a) {
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix r(na * nb);
  for (std::size_t i1 = 0; i1 < na; ++i1) {
    for (std::size_t j1 = 0; j1 < na; ++j1) {
      const Complex aij = a(i1, j1);
      for (std::size_t i2 = 0; i2 < nb; ++i2) {
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          r(i1 * nb + i2, j1 * nb + j2) = aij * b(i2, j2);
        }
      }
    }
  }
  return r;
}

StateVector tensor_vec(const StateVector& v, const StateVector& w) {
  std::vector<Complex> amps(v.dim() * w.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    for (std::size_t j = 0; j < w.dim(); ++j) {
      amps[i * w.dim() + j] = v[i] * w[j];
    }
  }
  return StateVector(std::move(amps));
}

namespace {

// Validates a 1-based factor-index set: non-empty, in range, no duplicates.
// Returns the set sorted ascending.
std::vector<std::size_t> checked_factor_set(const FactorShape& shape,
                                            std::vector<std::size_t> set,
                                            const char* what) {
  if (set.empty()) {
    throw DimensionError(std::string(what) + ": empty factor set");
  }
  std::sort(set.begin(), set.end());
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] < 1 || set[i] > shape.count()) {
      throw DimensionError(std::string(what) + ": factor index " +
                           std::to_string(set[i]) + " out of range");
    }
    if (i > 0 && set[i] == set[i - 1]) {
      throw DimensionError(std::string(what) + ": duplicate factor index " +
                           std::to_string(set[i]));
    }
  }
  return set;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& a, const FactorShape& shape,
                            const std::vector<std::size_t>& keep) {
  shape.validate_against(a.dim());
  const std::vector<std::size_t> kept =
      checked_factor_set(shape, keep, "partial_trace");
  const std::vector<std::size_t> traced = shape.complement(kept);

  const FactorShape kept_shape = shape.sub_shape(kept);
  const std::size_t n_keep = kept_shape.total_dim();
  if (traced.empty()) return a;  // nothing to sum out

  const FactorShape traced_shape = shape.sub_shape(traced);
  const std::size_t n_traced = traced_shape.total_dim();

  std::vector<std::size_t> row(shape.count()), col(shape.count());
  ComplexMatrix r(n_keep);
  for (std::size_t i = 0; i < n_keep; ++i) {
    const auto di = kept_shape.decode(i);
    for (std::size_t j = 0; j < n_keep; ++j) {
      const auto dj = kept_shape.decode(j);
      Complex sum(0.0, 0.0);
      for (std::size_t t = 0; t < n_traced; ++t) {
        const auto dt = traced_shape.decode(t);
        for (std::size_t f = 0; f < kept.size(); ++f) {
          row[kept[f] - 1] = di[f];
          col[kept[f] - 1] = dj[f];
        }
        for (std::size_t f = 0; f < traced.size(); ++f) {
          row[traced[f] - 1] = dt[f];
          col[traced[f] - 1] = dt[f];
        }
        sum += a(shape.encode(row), shape.encode(col));
      }
      r(i, j) = sum;
    }
  }
  return r;
}

ComplexMatrix embed_on_factors(const ComplexMatrix& op,
                               const FactorShape& shape,
                               const std::vector<std::size_t>& factors1) {
  const std::vector<std::size_t> selected =
      checked_factor_set(shape, factors1, "embed_on_factors");
  const FactorShape sel_shape = shape.sub_shape(selected);
  if (op.dim() != sel_shape.total_dim()) {
    throw DimensionError("embed_on_factors: operator dim " +
                         std::to_string(op.dim()) + " != selected factors dim " +
                         std::to_string(sel_shape.total_dim()));
  }

  const std::size_t n = shape.total_dim();
  std::vector<std::size_t> sub_row(selected.size()), sub_col(selected.size());
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto di = shape.decode(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto dj = shape.decode(j);
      bool diagonal_elsewhere = true;
      std::size_t s = 0;
      for (std::size_t f = 1; f <= shape.count(); ++f) {
        if (s < selected.size() && selected[s] == f) {
          sub_row[s] = di[f - 1];
          sub_col[s] = dj[f - 1];
          ++s;
        } else if (di[f - 1] != dj[f - 1]) {
          diagonal_elsewhere = false;
          break;
        }
      }
      if (diagonal_elsewhere) {
        r(i, j) = op(sel_shape.encode(sub_row), sel_shape.encode(sub_col));
      }
    }
  }
  return r;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("matrix +: dimension mismatch");
  ComplexMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
  }
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("matrix -: dimension mismatch");
  ComplexMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) - b(i, j);
  }
  return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = s * a(i, j);
  }
  return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, Complex s) { return s * a; }

Complex inner(const StateVector& v, const StateVector& w) {
  if (v.dim() != w.dim()) throw DimensionError("inner: dimension mismatch");
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < v.dim(); ++i) sum += std::conj(v[i]) * w[i];
  return sum;
}

ComplexMatrix outer(const StateVector& v, const StateVector& w) {
  if (v.dim() != w.dim()) throw DimensionError("outer: dimension mismatch");
  ComplexMatrix r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    for (std::size_t j = 0; j < w.dim(); ++j) r(i, j) = v[i] * std::conj(w[j]);
  }
  return r;
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const Complex& v : a.entries()) sum += std::norm(v);
  return std::sqrt(sum);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

}  // namespace qsa
