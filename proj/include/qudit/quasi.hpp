#ifndef QUDIT_QUASI_HPP
#define QUDIT_QUASI_HPP

#include <cmath>
#include <vector>

#include "qudit/common.hpp"
#include "qudit/states.hpp"
#include "qudit/superop.hpp"
#include "qudit/verdict.hpp"

namespace qudit {

// Quasi-probability representation of qudit states over product pure-state
// projectors.  Values carry the projective-volume normalization, so the
// uniform distribution for the maximally mixed state is exactly 1/V^N.

// w_rho(psi) = tr(rho Q_psi) = (D/V)((D+1) <psi|rho|psi> - 1)
inline double w_single(const Matrix& rho, const Vector& psi) {
  const int dim = static_cast<int>(psi.size());
  if (rho.rows() != dim || rho.cols() != dim)
    throw DimensionMismatchError("w_single: dimension mismatch");
  check_density_like(rho);
  check_normalized(psi);
  const HaarMoments hm = haar_moments(dim);
  const double overlap = (psi.adjoint() * rho * psi)(0).real();
  return dim / hm.volume * ((dim + 1.0) * overlap - 1.0);
}

// w_rho(psi_1,...,psi_N) = tr(rho Q_{psi_1} (x) ... (x) Q_{psi_N})
inline double w_product(const Matrix& rho, const std::vector<Vector>& psis) {
  if (psis.empty()) throw DimensionMismatchError("w_product: no factor states");
  if (psis.size() == 1) return w_single(rho, psis.front());
  Matrix q = dual_operator(psis.front());
  for (std::size_t i = 1; i < psis.size(); ++i) q = kron(q, dual_operator(psis[i]));
  if (rho.rows() != q.rows() || rho.cols() != q.cols())
    throw DimensionMismatchError("w_product: dimension mismatch");
  check_density_like(rho);
  return (rho * q).trace().real();
}

// smallest eigenvalue of an N-fold tensor product of dual operators:
// (-D/V)(D^2/V)^{N-1} = -D^{2N-1}/V^N
inline double w_floor(int dim, int n_parties) {
  if (dim < 2) throw InvalidDimensionError("w_floor needs D >= 2");
  if (n_parties < 1) throw InvalidDimensionError("w_floor needs N >= 1");
  const double vol = projective_volume(dim);
  return -std::pow(static_cast<double>(dim), 2 * n_parties - 1) /
         std::pow(vol, n_parties);
}

// Certifies separability of (1-eps) M_{D^N} + eps rho1 via the analytic
// floor on its quasi-distribution.  The floor argument is sufficient but
// not necessary, so above the threshold the verdict is indeterminate.
inline SeparabilityVerdict certify_separable_floor(const Matrix& rho1, int dim,
                                                   int n_parties, double eps) {
  if (eps < 0.0 || eps > 1.0) throw RangeError("epsilon must lie in [0,1]");
  const Eigen::Index side = pow_dim(dim, n_parties);
  if (rho1.rows() != side || rho1.cols() != side)
    throw DimensionMismatchError("certify_separable_floor: dimension mismatch");
  check_density_like(rho1);
  const double threshold =
      1.0 / (1.0 + std::pow(static_cast<double>(dim), 2 * n_parties - 1));
  SeparabilityVerdict out;
  out.boundary_used = threshold;
  if (eps <= threshold + kIdentityTol) {
    const double vol = projective_volume(dim);
    out.verdict = Verdict::SeparableCertified;
    out.certificate_kind = CertificateKind::QuasiFloor;
    // guaranteed minimum of w_{rho_eps}; nonnegative below the threshold
    out.certificate_value =
        (1.0 - eps * (1.0 + std::pow(static_cast<double>(dim), 2 * n_parties - 1))) /
        std::pow(vol, n_parties);
  }
  return out;
}

}  // namespace qudit

#endif  // QUDIT_QUASI_HPP
