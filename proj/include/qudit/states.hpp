#ifndef QUDIT_STATES_HPP
#define QUDIT_STATES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "qudit/common.hpp"
#include "qudit/su_basis.hpp"

namespace qudit {

// Named states and ensembles for the two-qudit and N-qudit mixture families.
//
// Computational-basis flattening is row-major: |a,b> sits at index
// (a-1)*D + (b-1), and likewise for longer strings.

inline Vector max_entangled(int dim) {
  if (dim < 2) throw InvalidDimensionError("max_entangled needs D >= 2");
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(dim) * dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int a = 0; a < dim; ++a) psi(a * dim + a) = amp;
  return psi;
}

inline Matrix maximally_mixed(Eigen::Index side) {
  return Matrix::Identity(side, side) / static_cast<double>(side);
}

// (1-eps) M_{D^2} + eps |Psi><Psi|
inline Matrix epsilon_mixture(int dim, double eps) {
  if (eps < 0.0 || eps > 1.0) throw RangeError("epsilon must lie in [0,1]");
  const Vector psi = max_entangled(dim);
  return (1.0 - eps) * maximally_mixed(psi.size()) + eps * (psi * psi.adjoint());
}

struct TwoQuditCoeffs {
  int dim;
  RealMatrix c;  // (alpha, beta), alpha=0 is lambda_0
};

// c_{alpha beta} = D^2 tr(rho lambda_alpha (x) lambda_beta)
inline TwoQuditCoeffs two_qudit_coeffs(const Matrix& rho, const GeneratorBasis& basis) {
  const int dim = basis.dim();
  const Eigen::Index side = static_cast<Eigen::Index>(dim) * dim;
  if (rho.rows() != side || rho.cols() != side)
    throw DimensionMismatchError("two_qudit_coeffs: state must be D^2 x D^2");
  check_density_like(rho);
  const int n = dim * dim;
  TwoQuditCoeffs out{dim, RealMatrix(n, n)};
  const double scale = static_cast<double>(dim) * dim;
  for (int alpha = 0; alpha < n; ++alpha)
    for (int beta = 0; beta < n; ++beta) {
      const Matrix op = kron(basis.full_element(alpha), basis.full_element(beta));
      out.c(alpha, beta) = scale * (rho * op).trace().real();
    }
  return out;
}

struct ZVector {
  int dim;
  Vector z;  // entries drawn from {+1, -1, +i, -i}
};

// Base-4 digit expansion of index, digit map {0 -> +1, 1 -> -1, 2 -> +i, 3 -> -i}.
inline ZVector z_vector_from_index(int dim, std::uint64_t index) {
  static const Complex digit_values[4] = {
      {1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
  ZVector zv{dim, Vector(dim)};
  for (int a = 0; a < dim; ++a) {
    zv.z(a) = digit_values[index & 3u];
    index >>= 2;
  }
  return zv;
}

// |Phi_z> = (1/sqrt D) sum_a z_a |a>
inline Vector phi_z(const ZVector& zv) {
  for (int a = 0; a < zv.dim; ++a)
    if (std::abs(std::abs(zv.z(a)) - 1.0) >= kInputTol)
      throw InvalidStateError("z-vector components must have unit modulus");
  return zv.z / std::sqrt(static_cast<double>(zv.dim));
}

inline std::uint64_t z_ensemble_size(int dim) { return std::uint64_t{1} << (2 * dim); }

// Uniform average over all 4^D product states |Phi_z><Phi_z| (x) |Phi_z*><Phi_z*|.
inline Matrix z_ensemble_average(int dim) {
  if (dim < 2) throw InvalidDimensionError("z_ensemble_average needs D >= 2");
  if (dim > 8) throw ResourceCapError("z ensemble capped at D <= 8 (4^D terms)");
  const Eigen::Index side = static_cast<Eigen::Index>(dim) * dim;
  Matrix acc = Matrix::Zero(side, side);
  const std::uint64_t count = z_ensemble_size(dim);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const ZVector zv = z_vector_from_index(dim, idx);
    const Vector a = phi_z(zv);
    const ZVector conj{dim, zv.z.conjugate()};
    const Vector b = phi_z(conj);
    const Vector prod = kron(a, b);
    acc.noalias() += prod * prod.adjoint();
  }
  return acc / static_cast<double>(count);
}

struct ProductEnsembleTerm {
  double weight;
  Vector state_a;
  Vector state_b;
};

// Explicit product ensemble reconstructing the two-qudit mixture at the
// separability boundary eps = 1/(1+D): all 4^D z-state pairs plus the D
// computational product states |a,a>.
inline std::vector<ProductEnsembleTerm> boundary_product_ensemble(int dim) {
  if (dim < 2) throw InvalidDimensionError("boundary ensemble needs D >= 2");
  if (dim > 8) throw ResourceCapError("boundary ensemble capped at D <= 8");
  std::vector<ProductEnsembleTerm> terms;
  const std::uint64_t count = z_ensemble_size(dim);
  const double wz = static_cast<double>(dim) /
                    ((1.0 + dim) * static_cast<double>(count));
  terms.reserve(count + dim);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const ZVector zv = z_vector_from_index(dim, idx);
    const ZVector conj{dim, zv.z.conjugate()};
    terms.push_back({wz, phi_z(zv), phi_z(conj)});
  }
  const double wa = 1.0 / ((1.0 + dim) * dim);
  for (int a = 0; a < dim; ++a) {
    Vector basis_vec = Vector::Zero(dim);
    basis_vec(a) = 1.0;
    terms.push_back({wa, basis_vec, basis_vec});
  }
  return terms;
}

inline Matrix assemble_product_ensemble(const std::vector<ProductEnsembleTerm>& terms) {
  if (terms.empty()) throw InvalidStateError("empty ensemble");
  const Eigen::Index side = terms.front().state_a.size() * terms.front().state_b.size();
  Matrix acc = Matrix::Zero(side, side);
  for (const auto& t : terms) {
    const Vector prod = kron(t.state_a, t.state_b);
    acc.noalias() += t.weight * (prod * prod.adjoint());
  }
  return acc;
}

inline Eigen::Index pow_dim(int dim, int n) {
  Eigen::Index p = 1;
  for (int i = 0; i < n; ++i) p *= dim;
  return p;
}

// |Psi_cat> = (1/sqrt D) sum_a |a>^{(x)N}
inline Vector cat_state(int dim, int n_parties) {
  if (dim < 2) throw InvalidDimensionError("cat_state needs D >= 2");
  if (n_parties < 2) throw InvalidDimensionError("cat_state needs N >= 2");
  const Eigen::Index side = pow_dim(dim, n_parties);
  if (side > (Eigen::Index{1} << 20))
    throw ResourceCapError("cat_state capped at D^N <= 2^20");
  Vector psi = Vector::Zero(side);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  // |a,a,...,a> flattens to a * (D^{N-1} + ... + 1)
  Eigen::Index stride = 0;
  for (int i = 0; i < n_parties; ++i) stride = stride * dim + 1;
  for (int a = 0; a < dim; ++a) psi(a * stride) = amp;
  return psi;
}

inline Matrix epsilon_cat(int dim, int n_parties, double eps) {
  if (eps < 0.0 || eps > 1.0) throw RangeError("epsilon must lie in [0,1]");
  const Vector psi = cat_state(dim, n_parties);
  return (1.0 - eps) * maximally_mixed(psi.size()) + eps * (psi * psi.adjoint());
}

// eps' of the qubit-projected epsilon-cat state
inline double epsilon_prime(int dim, int n_parties, double eps) {
  const double two_over_d = 2.0 / dim;
  const double num = two_over_d * eps;
  return num / (std::pow(two_over_d, n_parties) * (1.0 - eps) + num);
}

struct QubitProjection {
  Matrix state;       // 2^N x 2^N qubit epsilon'-cat state
  double eps_prime;   // agrees with the closed form to 1e-12
};

// Project each qudit onto span{|1>,|2>} and renormalize.  Input must be an
// epsilon-cat state for the declared (dim, n_parties); the mixing weight is
// recovered from the cat-state overlap and the shape is validated against
// epsilon_cat before projecting.
inline QubitProjection project_to_qubits(const Matrix& rho, int dim, int n_parties) {
  const Eigen::Index side = pow_dim(dim, n_parties);
  if (rho.rows() != side || rho.cols() != side)
    throw DimensionMismatchError("project_to_qubits: dimension mismatch");
  check_density_like(rho);
  const Vector cat = cat_state(dim, n_parties);
  // <cat|rho|cat> = (1-eps)/D^N + eps
  const double overlap = (cat.adjoint() * rho * cat)(0).real();
  const double inv_side = 1.0 / static_cast<double>(side);
  const double eps = (overlap - inv_side) / (1.0 - inv_side);
  if (eps < -kInputTol || eps > 1.0 + kInputTol ||
      (rho - epsilon_cat(dim, n_parties, std::clamp(eps, 0.0, 1.0))).norm() >= kInputTol)
    throw InvalidStateError("project_to_qubits: input is not an epsilon-cat state");

  // single-qudit projector onto the first two levels
  Matrix pi = Matrix::Zero(dim, dim);
  pi(0, 0) = 1.0;
  pi(1, 1) = 1.0;
  Matrix proj = pi;
  for (int i = 1; i < n_parties; ++i) proj = kron(proj, pi);
  const Matrix cut = proj * rho * proj;
  const double norm = cut.trace().real();
  if (norm < 1e-300)
    throw NumericalDegeneracyError("project_to_qubits: zero projection norm");

  // compress to the 2^N dimensional subspace
  const Eigen::Index qside = Eigen::Index{1} << n_parties;
  std::vector<Eigen::Index> keep;
  keep.reserve(qside);
  for (Eigen::Index i = 0; i < side; ++i) {
    Eigen::Index x = i;
    bool ok = true;
    for (int k = 0; k < n_parties; ++k) {
      if (x % dim > 1) { ok = false; break; }
      x /= dim;
    }
    if (ok) keep.push_back(i);
  }
  Matrix out(qside, qside);
  for (Eigen::Index r = 0; r < qside; ++r)
    for (Eigen::Index c = 0; c < qside; ++c) out(r, c) = cut(keep[r], keep[c]) / norm;

  const double ep_formula = epsilon_prime(dim, n_parties, eps);
  // recover eps' from the projected matrix via the qubit cat overlap
  const Vector qcat = cat_state(2, n_parties);
  const double qoverlap = (qcat.adjoint() * out * qcat)(0).real();
  const double qinv = 1.0 / static_cast<double>(qside);
  const double ep_measured = (qoverlap - qinv) / (1.0 - qinv);
  if (std::abs(ep_formula - ep_measured) >= kIdentityTol)
    throw NumericalDegeneracyError("project_to_qubits: eps' cross-check failed");
  // roundoff can push the closed form a few ulp outside [0,1]
  return {out, std::clamp(ep_formula, 0.0, 1.0)};
}

}  // namespace qudit

#endif  // QUDIT_STATES_HPP
