#ifndef QUDIT_COMMON_HPP
#define QUDIT_COMMON_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace qudit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Tolerances used throughout: user-supplied inputs are accepted with a
// little slack, internal closed-form identities are held to near machine
// precision.
inline constexpr double kInputTol = 1e-10;
inline constexpr double kIdentityTol = 1e-12;

struct InvalidDimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidStateError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct ResourceCapError : std::length_error {
  using std::length_error::length_error;
};

struct NumericalDegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

inline bool is_hermitian(const Matrix& m, double tol = kInputTol) {
  return m.rows() == m.cols() && (m - m.adjoint()).norm() < tol;
}

// Throws unless rho is square, Hermitian and unit trace.
inline void check_density_like(const Matrix& rho, double tol = kInputTol) {
  if (rho.rows() != rho.cols())
    throw InvalidStateError("density operator must be square");
  if ((rho - rho.adjoint()).norm() >= tol)
    throw InvalidStateError("density operator must be Hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) >= tol)
    throw InvalidStateError("density operator must have unit trace");
}

inline void check_normalized(const Vector& psi, double tol = kInputTol) {
  if (std::abs(psi.norm() - 1.0) >= tol)
    throw InvalidStateError("state vector must be normalized");
}

}  // namespace qudit

#endif  // QUDIT_COMMON_HPP
