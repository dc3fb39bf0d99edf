#include "qsa/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qsa {

AxiomReport check_density_axioms(const ComplexMatrix& m, double tol) {
  AxiomReport r{};
  const double norm = frobenius_norm(m);
  r.hermiticity_residual = frobenius_norm(m - adjoint(m));
  r.hermitian = r.hermiticity_residual <= tol * std::max(1.0, norm);
  r.trace_deviation = std::abs(trace(m) - Complex(1.0, 0.0));
  r.unit_trace = r.trace_deviation <= tol;

  const ComplexMatrix hermitian_part = Complex(0.5, 0.0) * (m + adjoint(m));
  const EigenSystem eig = eig_hermitian(hermitian_part);
  r.min_eigenvalue = eig.values.back();
  r.positive_semidefinite = r.min_eigenvalue >= -tol;
  return r;
}

// ---- DensityMatrix ----------------------------------------------------------

DensityMatrix::DensityMatrix(ComplexMatrix matrix, FactorShape shape,
                             double axiom_tol)
    : matrix_(std::move(matrix)), shape_(std::move(shape)) {
  shape_.validate_against(matrix_.dim());
  const AxiomReport report = check_density_axioms(matrix_, axiom_tol);
  if (!report.ok()) {
    throw AxiomViolation(
        "DensityMatrix: axiom check failed (hermiticity residual " +
        std::to_string(report.hermiticity_residual) + ", trace deviation " +
        std::to_string(report.trace_deviation) + ", min eigenvalue " +
        std::to_string(report.min_eigenvalue) + ")");
  }
}

DensityMatrix DensityMatrix::from_state(const StateVector& psi,
                                        FactorShape shape) {
  return DensityMatrix(outer(psi, psi), std::move(shape));
}

DensityMatrix DensityMatrix::maximally_mixed(FactorShape shape) {
  const std::size_t n = shape.total_dim();
  return DensityMatrix(Complex(1.0 / static_cast<double>(n), 0.0) *
                           ComplexMatrix::identity(n),
                       std::move(shape));
}

// ---- Observable / Projector -------------------------------------------------

Observable::Observable(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  const double residual = frobenius_norm(matrix_ - adjoint(matrix_));
  if (residual > kAxiomTol * std::max(1.0, frobenius_norm(matrix_))) {
    throw HermiticityError("Observable: not Hermitian, residual " +
                           std::to_string(residual));
  }
}

Projector::Projector(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  const double herm = frobenius_norm(matrix_ - adjoint(matrix_));
  if (herm > kAxiomTol * std::max(1.0, frobenius_norm(matrix_))) {
    throw HermiticityError("Projector: not Hermitian, residual " +
                           std::to_string(herm));
  }
  const double idem = frobenius_norm(matmul(matrix_, matrix_) - matrix_);
  if (idem > kAxiomTol) {
    throw AxiomViolation("Projector: ||P^2 - P|| = " + std::to_string(idem));
  }
}

// ---- operations -------------------------------------------------------------

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dims " + std::to_string(a) +
                         " vs " + std::to_string(b));
  }
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b,
                          const char* what) {
  const Complex t = trace(matmul(a, b));
  if (std::abs(t.imag()) > 1e-9) {
    throw AxiomViolation(std::string(what) + ": trace has imaginary part " +
                         std::to_string(t.imag()));
  }
  return t.real();
}

}  // namespace

double expectation(const Observable& f, const DensityMatrix& rho) {
  require_same_dim(f.dim(), rho.dim(), "expectation");
  return real_trace_product(f.matrix(), rho.matrix(), "expectation");
}

double dispersion(const Observable& f, const DensityMatrix& rho) {
  require_same_dim(f.dim(), rho.dim(), "dispersion");
  const double mean = expectation(f, rho);
  const ComplexMatrix q =
      f.matrix() - Complex(mean, 0.0) * ComplexMatrix::identity(f.dim());
  double d = real_trace_product(matmul(q, q), rho.matrix(), "dispersion");
  if (d < 0.0 && d >= -1e-10) d = 0.0;
  return d;
}

bool has_definite_value(const Observable& f, const DensityMatrix& rho,
                        double tol) {
  if (tol <= 0.0) throw Error("has_definite_value: tol must be positive");
  return dispersion(f, rho) <= tol;
}

double purity(const DensityMatrix& rho) {
  return real_trace_product(rho.matrix(), rho.matrix(), "purity");
}

bool is_pure(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  return frobenius_norm(matmul(m, m) - m) <= kPurityTol;
}

DensityMatrix reduce(const DensityMatrix& rho,
                     const std::vector<std::size_t>& keep) {
  ComplexMatrix traced = [&] {
    try {
      return partial_trace(rho.matrix(), rho.shape(), keep);
    } catch (const DimensionError& e) {
      throw ShapeError(std::string("reduce: ") + e.what());
    }
  }();
  std::vector<std::size_t> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  return DensityMatrix(std::move(traced), rho.shape().sub_shape(sorted),
                       kAxiomTolLoose);
}

ConditionalResult conditional(const DensityMatrix& rho, const Projector& p2,
                              const std::vector<std::size_t>& on_factors) {
  if (rho.shape().count() < 2) {
    throw DimensionError("conditional: state must have at least 2 factors");
  }
  std::vector<std::size_t> sorted = on_factors;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() >= rho.shape().count()) {
    throw DimensionError("conditional: conditioning on every factor");
  }
  const ComplexMatrix embedded =
      embed_on_factors(p2.matrix(), rho.shape(), sorted);
  const ComplexMatrix selected = matmul(embedded, rho.matrix());

  const Complex raw_p = trace(selected);
  if (std::abs(raw_p.imag()) > 1e-9) {
    throw AxiomViolation("conditional: probability has imaginary part " +
                         std::to_string(raw_p.imag()));
  }
  const double p = raw_p.real();
  if (p <= kProbTol) {
    throw ZeroProbability("conditional: selection probability " +
                          std::to_string(p) +
                          " is below threshold; the state is undefined");
  }
  const std::vector<std::size_t> kept = rho.shape().complement(sorted);
  ComplexMatrix numerator = partial_trace(selected, rho.shape(), kept);
  DensityMatrix cdm(Complex(1.0 / p, 0.0) * numerator,
                    rho.shape().sub_shape(kept), kAxiomTolLoose);
  return ConditionalResult{std::move(cdm), std::clamp(p, 0.0, 1.0)};
}

ConditionalResult conditional(const DensityMatrix& rho, const Projector& p2,
                              std::size_t on_factor) {
  return conditional(rho, p2, std::vector<std::size_t>{on_factor});
}

SpectralDecomposition spectral(const DensityMatrix& rho) {
  const EigenSystem eig = eig_hermitian(rho.matrix());
  SpectralDecomposition out;

  std::size_t k = 0;
  while (k < eig.values.size()) {
    const double anchor = eig.values[k];
    double sum = 0.0;
    ComplexMatrix proj(rho.dim());
    std::size_t members = 0;
    while (k < eig.values.size() && anchor - eig.values[k] <= kEigGroupTol) {
      sum += eig.values[k];
      proj = proj + outer(eig.vectors[k], eig.vectors[k]);
      ++members;
      ++k;
    }
    out.eigenvalues.push_back(sum / static_cast<double>(members));
    out.projectors.emplace_back(std::move(proj));
  }
  return out;
}

std::vector<MixtureTerm> mixture_expansion(const DensityMatrix& rho,
                                           const std::vector<StateVector>& basis2,
                                           std::size_t on_factor) {
  const std::size_t d2 = rho.shape().factor_dim(on_factor);
  if (basis2.size() != d2) {
    throw BasisError("mixture_expansion: basis has " +
                     std::to_string(basis2.size()) + " vectors, factor dim is " +
                     std::to_string(d2));
  }
  for (std::size_t i = 0; i < basis2.size(); ++i) {
    if (basis2[i].dim() != d2) {
      throw BasisError("mixture_expansion: basis vector dim mismatch");
    }
    for (std::size_t j = i; j < basis2.size(); ++j) {
      const double expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(std::abs(inner(basis2[i], basis2[j])) - expected) > 1e-9) {
        throw BasisError("mixture_expansion: basis is not orthonormal");
      }
    }
  }

  std::vector<MixtureTerm> terms;
  terms.reserve(d2);
  for (const StateVector& phi : basis2) {
    const Projector proj(outer(phi, phi));
    const ComplexMatrix embedded = embed_on_factors(
        proj.matrix(), rho.shape(), std::vector<std::size_t>{on_factor});
    const double p =
        real_trace_product(embedded, rho.matrix(), "mixture_expansion");
    if (p > kProbTol) {
      terms.push_back(MixtureTerm{
          std::clamp(p, 0.0, 1.0),
          conditional(rho, proj, on_factor).cdm});
    } else {
      terms.push_back(MixtureTerm{std::clamp(p, 0.0, 1.0), std::nullopt});
    }
  }
  return terms;
}

}  // namespace qsa
