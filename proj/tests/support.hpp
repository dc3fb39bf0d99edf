// Shared test utilities: seeded random inputs and independent brute-force
// oracles. The oracles deliberately avoid the library's index machinery
// (FactorShape::decode/encode, embed_on_factors) and work from raw stride
// arithmetic, so they stay an independent route to the same numbers.
#ifndef QSA_TESTS_SUPPORT_HPP
#define QSA_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "qsa/complex_matrix.hpp"
#include "qsa/density_matrix.hpp"
#include "qsa/spin.hpp"

namespace qsa::test {

using Rng = std::mt19937;

inline Complex random_complex(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  const double im = g(rng);
  return Complex(re, im);
}

inline ComplexMatrix random_matrix(Rng& rng, std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_complex(rng);
  }
  return m;
}

inline ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
  const ComplexMatrix g = random_matrix(rng, n);
  return Complex(0.5, 0.0) * (g + adjoint(g));
}

inline StateVector random_state(Rng& rng, std::size_t n) {
  std::vector<Complex> amps(n);
  double norm_sq = 0.0;
  for (auto& a : amps) {
    a = random_complex(rng);
    norm_sq += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (auto& a : amps) a *= scale;
  return StateVector(std::move(amps));
}

// G G^H / Tr(G G^H): Hermitian, PSD, unit trace by construction.
inline DensityMatrix random_density(Rng& rng, FactorShape shape) {
  const std::size_t n = shape.total_dim();
  const ComplexMatrix g = random_matrix(rng, n);
  ComplexMatrix m(n);
  double tr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum(0.0, 0.0);
      for (std::size_t k = 0; k < n; ++k) sum += g(i, k) * std::conj(g(j, k));
      m(i, j) = sum;
    }
    tr += m(i, i).real();
  }
  return DensityMatrix(Complex(1.0 / tr, 0.0) * m, std::move(shape));
}

// Gram-Schmidt over gaussian draws; redraws when a vector comes out too
// close to the span of the previous ones.
inline std::vector<StateVector> random_orthonormal_basis(Rng& rng,
                                                         std::size_t n) {
  std::vector<std::vector<Complex>> rows;
  while (rows.size() < n) {
    std::vector<Complex> v(n);
    for (auto& a : v) a = random_complex(rng);
    for (const auto& u : rows) {
      Complex proj(0.0, 0.0);
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(u[i]) * v[i];
      for (std::size_t i = 0; i < n; ++i) v[i] -= proj * u[i];
    }
    double norm_sq = 0.0;
    for (const auto& a : v) norm_sq += std::norm(a);
    if (norm_sq < 1e-3) continue;
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (auto& a : v) a *= scale;
    rows.push_back(std::move(v));
  }
  std::vector<StateVector> basis;
  basis.reserve(n);
  for (auto& row : rows) basis.emplace_back(std::move(row));
  return basis;
}

inline Direction random_direction(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return Direction{std::acos(2.0 * u(rng) - 1.0), 2.0 * M_PI * u(rng)};
}

inline std::vector<Complex> apply(const ComplexMatrix& m,
                                  const std::vector<Complex>& v) {
  std::vector<Complex> out(m.dim(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

// ---- oracles ---------------------------------------------------------------

// Plain triple-loop product.
inline ComplexMatrix oracle_matmul(const ComplexMatrix& a,
                                   const ComplexMatrix& b) {
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum(0.0, 0.0);
      for (std::size_t k = 0; k < n; ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  }
  return c;
}

// sum_ij F(i,j) rho(j,i)
inline Complex oracle_expectation(const ComplexMatrix& f,
                                  const ComplexMatrix& rho) {
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < f.dim(); ++i) {
    for (std::size_t j = 0; j < f.dim(); ++j) sum += f(i, j) * rho(j, i);
  }
  return sum;
}

// Strides of a left-slow factor layout: digit f of index i is
// (i / stride[f]) % dims[f].
inline std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t f = dims.size(); f-- > 1;) {
    stride[f - 1] = stride[f] * dims[f];
  }
  return stride;
}

// Accumulates every full-matrix entry whose traced digits sit on the
// diagonal. keep1 is 1-based.
inline ComplexMatrix oracle_partial_trace(const ComplexMatrix& m,
                                          const std::vector<std::size_t>& dims,
                                          const std::vector<std::size_t>& keep1) {
  const std::size_t nf = dims.size();
  const auto stride = strides_of(dims);
  std::vector<bool> kept(nf, false);
  for (std::size_t f : keep1) kept[f - 1] = true;

  std::size_t out_dim = 1;
  for (std::size_t f = 0; f < nf; ++f) {
    if (kept[f]) out_dim *= dims[f];
  }

  ComplexMatrix out(out_dim);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      bool traced_diagonal = true;
      std::size_t oi = 0, oj = 0;
      for (std::size_t f = 0; f < nf; ++f) {
        const std::size_t di = (i / stride[f]) % dims[f];
        const std::size_t dj = (j / stride[f]) % dims[f];
        if (kept[f]) {
          oi = oi * dims[f] + di;
          oj = oj * dims[f] + dj;
        } else if (di != dj) {
          traced_diagonal = false;
          break;
        }
      }
      if (traced_diagonal) out(oi, oj) += m(i, j);
    }
  }
  return out;
}

// Conditioning kernel formula for a two-factor state and a rank-1 condition
// |u><u| on `cond_factor` (1 or 2). Returns {p, unnormalized numerator};
// the conditional state is numerator / p.
inline std::pair<double, ComplexMatrix> oracle_conditional_rank1(
    const ComplexMatrix& rho, std::size_t d1, std::size_t d2,
    const std::vector<Complex>& u, std::size_t cond_factor) {
  if (cond_factor == 2) {
    ComplexMatrix num(d1);
    for (std::size_t y = 0; y < d1; ++y) {
      for (std::size_t yp = 0; yp < d1; ++yp) {
        Complex sum(0.0, 0.0);
        for (std::size_t z = 0; z < d2; ++z) {
          for (std::size_t zp = 0; zp < d2; ++zp) {
            sum += std::conj(u[z]) * rho(y * d2 + z, yp * d2 + zp) * u[zp];
          }
        }
        num(y, yp) = sum;
      }
    }
    double p = 0.0;
    for (std::size_t y = 0; y < d1; ++y) p += num(y, y).real();
    return {p, num};
  }
  ComplexMatrix num(d2);
  for (std::size_t z = 0; z < d2; ++z) {
    for (std::size_t zp = 0; zp < d2; ++zp) {
      Complex sum(0.0, 0.0);
      for (std::size_t y = 0; y < d1; ++y) {
        for (std::size_t yp = 0; yp < d1; ++yp) {
          sum += std::conj(u[y]) * rho(y * d2 + z, yp * d2 + zp) * u[yp];
        }
      }
      num(z, zp) = sum;
    }
  }
  double p = 0.0;
  for (std::size_t z = 0; z < d2; ++z) p += num(z, z).real();
  return {p, num};
}

// Tr(E rho) where E places `proj` on the 1-based factor set `factors1`
// (ascending) and the identity elsewhere.
inline double oracle_embedded_trace(const ComplexMatrix& proj,
                                    const ComplexMatrix& rho,
                                    const std::vector<std::size_t>& dims,
                                    const std::vector<std::size_t>& factors1) {
  const std::size_t nf = dims.size();
  const auto stride = strides_of(dims);
  std::vector<bool> selected(nf, false);
  for (std::size_t f : factors1) selected[f - 1] = true;

  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      bool identity_elsewhere = true;
      std::size_t si = 0, sj = 0;
      for (std::size_t f = 0; f < nf; ++f) {
        const std::size_t di = (i / stride[f]) % dims[f];
        const std::size_t dj = (j / stride[f]) % dims[f];
        if (selected[f]) {
          si = si * dims[f] + di;
          sj = sj * dims[f] + dj;
        } else if (di != dj) {
          identity_elsewhere = false;
          break;
        }
      }
      if (identity_elsewhere) sum += proj(si, sj) * rho(j, i);
    }
  }
  return sum.real();
}

inline double max_abs_diff_vec(const std::vector<Complex>& a,
                               const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

}  // namespace qsa::test

#endif  // QSA_TESTS_SUPPORT_HPP
