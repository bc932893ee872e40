#ifndef QUDIT_BOUNDS_HPP
#define QUDIT_BOUNDS_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "qudit/common.hpp"
#include "qudit/quasi.hpp"
#include "qudit/states.hpp"
#include "qudit/su_basis.hpp"
#include "qudit/verdict.hpp"

namespace qudit {

// Closed-form separability boundaries and the independent cross-check
// oracles (PPT, correlation-coefficient witness).

// two-qudit mixture boundary: separable iff eps <= 1/(1+D)
inline double two_qudit_boundary(int dim) {
  if (dim < 2) throw InvalidDimensionError("two_qudit_boundary needs D >= 2");
  return 1.0 / (1.0 + dim);
}

// (lower, upper) bounds on the separable neighborhood of M_{D^N}
inline std::pair<double, double> neighborhood_bounds(int dim, int n_parties) {
  if (dim < 2 || n_parties < 2)
    throw InvalidDimensionError("neighborhood_bounds needs D >= 2, N >= 2");
  const double lower =
      1.0 / (1.0 + std::pow(static_cast<double>(dim), 2 * n_parties - 1));
  const double upper =
      1.0 / (1.0 + std::pow(static_cast<double>(dim), n_parties - 1));
  return {lower, upper};
}

struct PptResult {
  double min_eigenvalue;
  bool is_ppt;
};

// Partial transpose over subsystem B (the spectrum is the same for either
// choice).  A negative eigenvalue certifies entanglement; nonnegativity is
// conclusive only for dimA*dimB <= 6.
inline PptResult ppt_test(const Matrix& rho, int dim_a, int dim_b) {
  const Eigen::Index side = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (rho.rows() != side || rho.cols() != side)
    throw DimensionMismatchError("ppt_test: dimension mismatch");
  Matrix pt(side, side);
  for (int a = 0; a < dim_a; ++a)
    for (int ap = 0; ap < dim_a; ++ap)
      for (int b = 0; b < dim_b; ++b)
        for (int bp = 0; bp < dim_b; ++bp)
          pt(a * dim_b + bp, ap * dim_b + b) = rho(a * dim_b + b, ap * dim_b + bp);
  Eigen::SelfAdjointEigenSolver<Matrix> es(pt, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  return {min_eig, min_eig >= -kIdentityTol};
}

// Correlation-coefficient witness: sum_j |c_jj| / (D(D-1)).  Any separable
// two-qudit state gives a value <= 1; for rho_eps the value is (D+1) eps.
inline double necessity_check(const TwoQuditCoeffs& coeffs, int dim) {
  if (coeffs.dim != dim)
    throw DimensionMismatchError("necessity_check: dimension mismatch");
  double total = 0.0;
  for (int j = 1; j < dim * dim; ++j) total += std::abs(coeffs.c(j, j));
  return total / (static_cast<double>(dim) * (dim - 1));
}

// Product ensemble for the sub-boundary mixture: the boundary ensemble with
// weight eps(1+D) plus a computational-basis product ensemble for M_{D^2}
// with the remaining weight.
inline std::vector<ProductEnsembleTerm> sub_boundary_ensemble(int dim, double eps) {
  const double boundary_weight = eps * (1.0 + dim);
  std::vector<ProductEnsembleTerm> terms;
  if (boundary_weight > 0.0) {
    terms = boundary_product_ensemble(dim);
    for (auto& t : terms) t.weight *= boundary_weight;
  }
  const double rest = 1.0 - boundary_weight;
  if (rest > kIdentityTol) {
    const double w = rest / (static_cast<double>(dim) * dim);
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        Vector va = Vector::Zero(dim), vb = Vector::Zero(dim);
        va(a) = 1.0;
        vb(b) = 1.0;
        terms.push_back({w, std::move(va), std::move(vb)});
      }
  }
  return terms;
}

inline SeparabilityVerdict classify_epsilon_mixture(int dim, double eps) {
  if (eps < 0.0 || eps > 1.0) throw RangeError("epsilon must lie in [0,1]");
  const double boundary = two_qudit_boundary(dim);
  SeparabilityVerdict out;
  out.boundary_used = boundary;
  if (eps <= boundary + kIdentityTol) {
    out.verdict = Verdict::SeparableCertified;
    out.certificate_kind = CertificateKind::ProductEnsemble;
    out.ensemble = sub_boundary_ensemble(dim, std::min(eps, boundary));
    out.certificate_value = eps;
  } else {
    // cross-check the closed-form condition against the PPT oracle
    const PptResult ppt = ppt_test(epsilon_mixture(dim, eps), dim, dim);
    if (ppt.min_eigenvalue >= -kIdentityTol)
      throw NumericalDegeneracyError(
          "classify_epsilon_mixture: PPT cross-check disagrees with boundary");
    out.verdict = Verdict::EntangledCertified;
    out.certificate_kind = CertificateKind::PptWitness;
    out.certificate_value = ppt.min_eigenvalue;
  }
  return out;
}

// For N = 2 the cat state is the maximally entangled state, so the exact
// two-qudit classifier applies; the three-way verdict is for N >= 3.
inline SeparabilityVerdict classify_epsilon_cat(int dim, int n_parties, double eps) {
  if (n_parties < 2)
    throw InvalidDimensionError("classify_epsilon_cat needs N >= 2");
  if (eps < 0.0 || eps > 1.0) throw RangeError("epsilon must lie in [0,1]");
  if (n_parties == 2) return classify_epsilon_mixture(dim, eps);
  const auto [lower, upper] = neighborhood_bounds(dim, n_parties);
  SeparabilityVerdict out;
  if (eps <= lower + kIdentityTol) {
    out = certify_separable_floor(epsilon_cat(dim, n_parties, eps), dim, n_parties, eps);
  } else if (eps > upper + kIdentityTol) {
    out.verdict = Verdict::EntangledCertified;
    out.certificate_kind = CertificateKind::BoundaryComparison;
    out.boundary_used = upper;
    // corroborating evidence: the projected qubit cat state crosses its own
    // boundary 1/(1+2^{N-1}) at the same point
    out.certificate_value = epsilon_prime(dim, n_parties, eps);
  } else {
    // the strict inequality leaves the boundary point and the gap open
    out.verdict = Verdict::Indeterminate;
    out.certificate_kind = CertificateKind::None;
    out.boundary_used = upper;
  }
  return out;
}

}  // namespace qudit

#endif  // QUDIT_BOUNDS_HPP
