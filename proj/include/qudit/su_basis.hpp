#ifndef QUDIT_SU_BASIS_HPP
#define QUDIT_SU_BASIS_HPP

#include <vector>

#include "qudit/common.hpp"

namespace qudit {

// Hermitian generator basis of SU(D).
//
// Flat index order is fixed as: diagonal generators (a = 2..D), then
// symmetric pair generators (a,b) with a < b in lexicographic order, then
// the antisymmetric pairs in the same order.  Callers that care about a
// particular generator should go through the label map rather than a raw
// flat index.

enum class GeneratorKind { Diagonal, Symmetric, Antisymmetric };

struct GeneratorLabel {
  GeneratorKind kind;
  int a;  // 1-based basis index; for Diagonal this is the single index a >= 2
  int b;  // 1-based, only meaningful for pair kinds (a < b)
};

class GeneratorBasis {
 public:
  explicit GeneratorBasis(int dim) : dim_(dim) {
    if (dim < 2) throw InvalidDimensionError("generator basis needs D >= 2");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // diagonal: Gamma_a, 2 <= a <= D
    for (int a = 2; a <= dim; ++a) {
      Matrix g = Matrix::Zero(dim, dim);
      const double norm = 1.0 / std::sqrt(static_cast<double>(a) * (a - 1));
      for (int b = 1; b <= a - 1; ++b) g(b - 1, b - 1) = norm;
      g(a - 1, a - 1) = -(a - 1) * norm;
      generators_.push_back(g);
      labels_.push_back({GeneratorKind::Diagonal, a, 0});
    }
    // symmetric pairs
    for (int a = 1; a <= dim; ++a)
      for (int b = a + 1; b <= dim; ++b) {
        Matrix g = Matrix::Zero(dim, dim);
        g(a - 1, b - 1) = inv_sqrt2;
        g(b - 1, a - 1) = inv_sqrt2;
        generators_.push_back(g);
        labels_.push_back({GeneratorKind::Symmetric, a, b});
      }
    // antisymmetric pairs
    for (int a = 1; a <= dim; ++a)
      for (int b = a + 1; b <= dim; ++b) {
        Matrix g = Matrix::Zero(dim, dim);
        g(a - 1, b - 1) = Complex(0.0, -inv_sqrt2);
        g(b - 1, a - 1) = Complex(0.0, inv_sqrt2);
        generators_.push_back(g);
        labels_.push_back({GeneratorKind::Antisymmetric, a, b});
      }
    lambda0_ = Matrix::Identity(dim, dim) / std::sqrt(static_cast<double>(dim));
  }

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(generators_.size()); }

  // lambda_j for j in [0, D^2-2]
  const Matrix& generator(int j) const { return generators_.at(j); }
  const std::vector<Matrix>& generators() const { return generators_; }
  const Matrix& lambda0() const { return lambda0_; }

  const GeneratorLabel& label(int j) const { return labels_.at(j); }

  int index_of(const GeneratorLabel& lbl) const {
    const int n_diag = dim_ - 1;
    const int n_pair = dim_ * (dim_ - 1) / 2;
    switch (lbl.kind) {
      case GeneratorKind::Diagonal:
        if (lbl.a < 2 || lbl.a > dim_)
          throw RangeError("diagonal label out of range");
        return lbl.a - 2;
      case GeneratorKind::Symmetric:
        return n_diag + pair_offset(lbl.a, lbl.b);
      case GeneratorKind::Antisymmetric:
        return n_diag + n_pair + pair_offset(lbl.a, lbl.b);
    }
    throw RangeError("bad generator label");
  }

  // The antisymmetric sector carries the sign flip in the maximally
  // entangled state's coefficient pattern.
  bool is_antisymmetric(int j) const {
    return labels_.at(j).kind == GeneratorKind::Antisymmetric;
  }

  // Basis element of the full Hermitian operator basis, alpha in [0, D^2-1],
  // alpha = 0 meaning lambda_0 = I/sqrt(D).
  const Matrix& full_element(int alpha) const {
    return alpha == 0 ? lambda0_ : generators_.at(alpha - 1);
  }

 private:
  int pair_offset(int a, int b) const {
    if (a < 1 || b <= a || b > dim_) throw RangeError("pair label out of range");
    // lexicographic position of (a,b), a < b, both 1-based
    int off = 0;
    for (int x = 1; x < a; ++x) off += dim_ - x;
    return off + (b - a - 1);
  }

  int dim_;
  std::vector<Matrix> generators_;
  std::vector<GeneratorLabel> labels_;
  Matrix lambda0_;
};

inline GeneratorBasis build_basis(int dim) { return GeneratorBasis(dim); }

struct StructureConstants {
  int dim;
  // dense rank-3 tables, index (j,k,l) -> j*(n*n) + k*n + l with n = D^2-1
  std::vector<double> d;
  std::vector<double> f;

  double dval(int j, int k, int l) const {
    const int n = dim * dim - 1;
    return d[static_cast<std::size_t>(j) * n * n + static_cast<std::size_t>(k) * n + l];
  }
  double fval(int j, int k, int l) const {
    const int n = dim * dim - 1;
    return f[static_cast<std::size_t>(j) * n * n + static_cast<std::size_t>(k) * n + l];
  }
};

// d_{jkl} = tr({l_j,l_k} l_l)/2, f_{jkl} = tr([l_j,l_k] l_l)/(2i)
inline StructureConstants structure_constants(const GeneratorBasis& basis) {
  const int dim = basis.dim();
  if (dim > 16)
    throw ResourceCapError("structure constants capped at D <= 16");
  const int n = dim * dim - 1;
  StructureConstants sc;
  sc.dim = dim;
  sc.d.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  sc.f.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Matrix prod = basis.generator(j) * basis.generator(k);
      const Matrix anti = prod + basis.generator(k) * basis.generator(j);
      const Matrix comm = prod - basis.generator(k) * basis.generator(j);
      for (int l = 0; l < n; ++l) {
        const Complex td = (anti * basis.generator(l)).trace() * 0.5;
        const Complex tf = (comm * basis.generator(l)).trace() / Complex(0.0, 2.0);
        sc.d[static_cast<std::size_t>(j) * n * n + static_cast<std::size_t>(k) * n + l] = td.real();
        sc.f[static_cast<std::size_t>(j) * n * n + static_cast<std::size_t>(k) * n + l] = tf.real();
      }
    }
  return sc;
}

struct BlochVector {
  int dim;
  RealVector c;  // length D^2 - 1
};

// c_j = D tr(rho lambda_j); rho must be Hermitian with unit trace.
inline BlochVector bloch_expand(const Matrix& rho, const GeneratorBasis& basis) {
  const int dim = basis.dim();
  if (rho.rows() != dim || rho.cols() != dim)
    throw DimensionMismatchError("bloch_expand: operator/basis dimension mismatch");
  check_density_like(rho);
  BlochVector bv{dim, RealVector(basis.size())};
  for (int j = 0; j < basis.size(); ++j) {
    const Complex t = static_cast<double>(dim) * (rho * basis.generator(j)).trace();
    if (std::abs(t.imag()) >= kIdentityTol)
      throw InvalidStateError("bloch_expand: coefficient has imaginary part");
    bv.c(j) = t.real();
  }
  return bv;
}

inline Matrix bloch_reconstruct(const BlochVector& bv, const GeneratorBasis& basis) {
  const int dim = basis.dim();
  if (bv.c.size() != basis.size())
    throw DimensionMismatchError("bloch_reconstruct: coefficient length mismatch");
  Matrix rho = Matrix::Identity(dim, dim);
  for (int j = 0; j < basis.size(); ++j) rho += bv.c(j) * basis.generator(j);
  return rho / static_cast<double>(dim);
}

}  // namespace qudit

#endif  // QUDIT_SU_BASIS_HPP
