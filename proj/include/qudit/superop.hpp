#ifndef QUDIT_SUPEROP_HPP
#define QUDIT_SUPEROP_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "qudit/common.hpp"

namespace qudit {

// Superoperators stored as D^2 x D^2 matrices in the outer-product basis
// tau_{ca} = |c><a|, with flat(c,a) = c*D + a (0-based).  The left-right
// action is then literal matrix algebra on vectorized operators, and sharp
// is an index permutation.

class Superoperator {
 public:
  Superoperator(int dim, Matrix mat) : dim_(dim), mat_(std::move(mat)) {
    const Eigen::Index side = static_cast<Eigen::Index>(dim) * dim;
    if (mat_.rows() != side || mat_.cols() != side)
      throw DimensionMismatchError("superoperator matrix must be D^2 x D^2");
  }

  int dim() const { return dim_; }
  const Matrix& mat() const { return mat_; }
  Matrix& mat() { return mat_; }

  Eigen::Index flat(int c, int a) const { return static_cast<Eigen::Index>(c) * dim_ + a; }

 private:
  int dim_;
  Matrix mat_;
};

// |A) as a coefficient vector in the tau basis: entry flat(c,a) = A(c,a)
inline Vector operator_to_vec(const Matrix& a) {
  const int dim = static_cast<int>(a.rows());
  Vector v(static_cast<Eigen::Index>(dim) * dim);
  for (int c = 0; c < dim; ++c)
    for (int x = 0; x < dim; ++x) v(static_cast<Eigen::Index>(c) * dim + x) = a(c, x);
  return v;
}

inline Matrix vec_to_operator(const Vector& v, int dim) {
  Matrix a(dim, dim);
  for (int c = 0; c < dim; ++c)
    for (int x = 0; x < dim; ++x) a(c, x) = v(static_cast<Eigen::Index>(c) * dim + x);
  return a;
}

// identity with respect to the left-right action
inline Superoperator identity_lr(int dim) {
  const Eigen::Index side = static_cast<Eigen::Index>(dim) * dim;
  return Superoperator(dim, Matrix::Identity(side, side));
}

// identity with respect to the ordinary action: I (.) I = |I)(I|
inline Superoperator identity_ordinary(int dim) {
  const Vector vi = operator_to_vec(Matrix::Identity(dim, dim));
  return Superoperator(dim, vi * vi.adjoint());
}

// S^#_{ca,db} = S_{cd,ab}
inline Superoperator sharp(const Superoperator& s) {
  const int dim = s.dim();
  Matrix out(s.mat().rows(), s.mat().cols());
  for (int c = 0; c < dim; ++c)
    for (int a = 0; a < dim; ++a)
      for (int d = 0; d < dim; ++d)
        for (int b = 0; b < dim; ++b)
          out(s.flat(c, a), s.flat(d, b)) = s.mat()(s.flat(c, d), s.flat(a, b));
  return Superoperator(dim, std::move(out));
}

// S(A) = sum S_{ca,db} |c><a| A |b><d|
inline Matrix ordinary_action(const Superoperator& s, const Matrix& a) {
  const int dim = s.dim();
  if (a.rows() != dim || a.cols() != dim)
    throw DimensionMismatchError("ordinary_action: operand dimension mismatch");
  // equals the left-right action of the sharped superoperator
  return vec_to_operator(sharp(s).mat() * operator_to_vec(a), dim);
}

inline Matrix left_right_action(const Superoperator& s, const Matrix& a) {
  const int dim = s.dim();
  if (a.rows() != dim || a.cols() != dim)
    throw DimensionMismatchError("left_right_action: operand dimension mismatch");
  return vec_to_operator(s.mat() * operator_to_vec(a), dim);
}

inline Superoperator lr_adjoint(const Superoperator& s) {
  return Superoperator(s.dim(), s.mat().adjoint());
}

// S^x_{ca,db} = S*_{ac,bd}
inline Superoperator ordinary_adjoint(const Superoperator& s) {
  const int dim = s.dim();
  Matrix out(s.mat().rows(), s.mat().cols());
  for (int c = 0; c < dim; ++c)
    for (int a = 0; a < dim; ++a)
      for (int d = 0; d < dim; ++d)
        for (int b = 0; b < dim; ++b)
          out(s.flat(c, a), s.flat(d, b)) = std::conj(s.mat()(s.flat(a, c), s.flat(b, d)));
  return Superoperator(dim, std::move(out));
}

inline Superoperator lr_multiply(const Superoperator& r, const Superoperator& s) {
  if (r.dim() != s.dim())
    throw DimensionMismatchError("lr_multiply: dimension mismatch");
  return Superoperator(r.dim(), r.mat() * s.mat());
}

// (R o S)(A) = R(S(A))
inline Superoperator ordinary_compose(const Superoperator& r, const Superoperator& s) {
  if (r.dim() != s.dim())
    throw DimensionMismatchError("ordinary_compose: dimension mismatch");
  return sharp(lr_multiply(sharp(r), sharp(s)));
}

// Tr relative to the left-right action; plain matrix trace in the tau basis.
// Note tr(S(I)) equals Tr(S^#), which coincides with Tr(S) only for
// sharp-symmetric superoperators.
inline Complex lr_trace(const Superoperator& s) { return s.mat().trace(); }

struct HaarMoments {
  int dim;
  double volume;  // projective-space volume V = pi^{D-1}/(D-1)!
  double k;       // V / D(D+1)
  double gamma;   // 2K
};

// log-gamma form keeps the factorial from overflowing for larger D
inline double projective_volume(int dim) {
  return std::exp((dim - 1) * std::log(M_PI) - std::lgamma(static_cast<double>(dim)));
}

inline HaarMoments haar_moments(int dim) {
  if (dim < 2) throw InvalidDimensionError("haar_moments needs D >= 2");
  const double vol = projective_volume(dim);
  const double k = vol / (static_cast<double>(dim) * (dim + 1));
  return {dim, vol, k, 2.0 * k};
}

// G = K(I_lr + I_ord), the Haar average of |P_psi)(P_psi| times the volume
inline Superoperator g_superoperator(int dim) {
  const HaarMoments hm = haar_moments(dim);
  Superoperator s = identity_lr(dim);
  s.mat() += identity_ordinary(dim).mat();
  s.mat() *= hm.k;
  return s;
}

// inverse of G with respect to the left-right action
inline Superoperator g_inverse(int dim) {
  const HaarMoments hm = haar_moments(dim);
  Superoperator s = identity_lr(dim);
  s.mat() -= identity_ordinary(dim).mat() / (dim + 1.0);
  s.mat() /= hm.k;
  return s;
}

// Q_psi = (D/V)((D+1) P_psi - I)
inline Matrix dual_operator(const Vector& psi) {
  check_normalized(psi);
  const int dim = static_cast<int>(psi.size());
  const HaarMoments hm = haar_moments(dim);
  const double scale = dim / hm.volume;
  return scale * ((dim + 1.0) * (psi * psi.adjoint()) - Matrix::Identity(dim, dim));
}

// Haar-random pure state: normalized vector of iid standard complex Gaussians
inline Vector haar_sample(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector psi(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    psi(i) = Complex(re, im);
  }
  return psi / psi.norm();
}

inline Vector haar_sample(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_sample(dim, rng);
}

struct MonteCarloG {
  Superoperator estimate;        // V times the sample mean of |P_psi)(P_psi|
  RealMatrix stderr_re;          // per-entry standard errors, already V-scaled
  RealMatrix stderr_im;
  std::int64_t samples;
};

// seed for worker w derived from the root seed by splitmix-style mixing
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t worker) {
  std::uint64_t x = root + 0x9E3779B97F4A7C15ull * (worker + 1);
  x ^= x >> 30; x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27; x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

// Monte Carlo estimate of G.  Deterministic for a fixed (seed, samples,
// workers) triple: each worker runs its own sequential stream and partial
// sums are combined in worker order.
inline MonteCarloG monte_carlo_g(int dim, std::int64_t samples, std::uint64_t seed,
                                 int workers = 1) {
  if (samples < 1) throw RangeError("monte_carlo_g needs samples >= 1");
  if (workers < 1) throw RangeError("monte_carlo_g needs workers >= 1");
  const Eigen::Index side = static_cast<Eigen::Index>(dim) * dim;
  struct Partial {
    Matrix sum;
    RealMatrix sum_sq_re, sum_sq_im;
  };
  std::vector<Partial> parts(workers);
  std::vector<std::int64_t> counts(workers, samples / workers);
  for (int w = 0; w < samples % workers; ++w) ++counts[w];

  auto run = [&](int w) {
    Partial p{Matrix::Zero(side, side), RealMatrix::Zero(side, side),
              RealMatrix::Zero(side, side)};
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(w)));
    for (std::int64_t i = 0; i < counts[w]; ++i) {
      const Vector psi = haar_sample(dim, rng);
      const Vector vp = operator_to_vec(psi * psi.adjoint());
      const Matrix outer = vp * vp.adjoint();
      p.sum += outer;
      p.sum_sq_re += outer.real().cwiseProduct(outer.real());
      p.sum_sq_im += outer.imag().cwiseProduct(outer.imag());
    }
    parts[w] = std::move(p);
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  Matrix sum = Matrix::Zero(side, side);
  RealMatrix sq_re = RealMatrix::Zero(side, side);
  RealMatrix sq_im = RealMatrix::Zero(side, side);
  for (const auto& p : parts) {
    sum += p.sum;
    sq_re += p.sum_sq_re;
    sq_im += p.sum_sq_im;
  }
  const double n = static_cast<double>(samples);
  const double vol = haar_moments(dim).volume;
  const Matrix mean = sum / n;
  const RealMatrix var_re =
      (sq_re / n - mean.real().cwiseProduct(mean.real())).cwiseMax(0.0);
  const RealMatrix var_im =
      (sq_im / n - mean.imag().cwiseProduct(mean.imag())).cwiseMax(0.0);
  MonteCarloG out{Superoperator(dim, vol * mean),
                  vol * (var_re / n).cwiseSqrt(),
                  vol * (var_im / n).cwiseSqrt(), samples};
  return out;
}

}  // namespace qudit

#endif  // QUDIT_SUPEROP_HPP
