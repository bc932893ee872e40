// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are pinned in code next to each check.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qudit/qudit.hpp"

using namespace qudit;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok,
            const std::string& detail) {
  std::printf("%s criterion %2d (%s): %s\n", ok ? "PASS" : "FAIL", criterion,
              name.c_str(), detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

Matrix random_operator(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
  return a;
}

Matrix random_unitary(int dim, std::mt19937_64& rng) {
  const Matrix a = random_operator(dim, rng);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

void criterion_1_generator_algebra() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int dim = 2; dim <= 6; ++dim) {
    const GeneratorBasis basis = build_basis(dim);
    for (int a = 0; a < dim * dim; ++a)
      for (int b = 0; b < dim * dim; ++b)
        worst = std::max(
            worst, std::abs((basis.full_element(a) * basis.full_element(b))
                                .trace() -
                            Complex(a == b ? 1.0 : 0.0)));
    const StructureConstants sc = structure_constants(basis);
    const int n = dim * dim - 1;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Matrix rhs = Matrix::Identity(dim, dim) * (j == k ? 1.0 / dim : 0.0);
        for (int l = 0; l < n; ++l)
          rhs += (sc.dval(j, k, l) + Complex(0, 1) * sc.fval(j, k, l)) *
                 basis.generator(l);
        worst =
            std::max(worst, (basis.generator(j) * basis.generator(k) - rhs).norm());
      }
  }
  const double elapsed = seconds_since(t0);
  char detail[128];
  std::snprintf(detail, sizeof(detail), "max residual %.3e (< 1e-12), %.1fs (< 30s)",
                worst, elapsed);
  report(1, "generator algebra", worst < 1e-12 && elapsed < 30.0, detail);
}

void criterion_2_pure_state_norm() {
  double worst = 0.0;
  std::mt19937_64 rng(202);
  for (int dim = 2; dim <= 6; ++dim) {
    const GeneratorBasis basis = build_basis(dim);
    for (int trial = 0; trial < 100; ++trial) {
      const Vector psi = haar_sample(dim, rng);
      const BlochVector bv = bloch_expand(psi * psi.adjoint(), basis);
      worst = std::max(worst, std::abs(bv.c.squaredNorm() - dim * (dim - 1.0)));
    }
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail), "max |c.c - D(D-1)| = %.3e (< 1e-10)", worst);
  report(2, "pure-state Bloch norm", worst < 1e-10, detail);
}

// exact z-moment check in Gaussian-integer arithmetic
bool z_moment_exact(int dim) {
  auto digit = [](std::uint64_t index, int a) -> std::pair<long long, long long> {
    static const std::pair<long long, long long> values[4] = {
        {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    return values[(index >> (2 * a)) & 3u];
  };
  auto mul = [](std::pair<long long, long long> x,
                std::pair<long long, long long> y) {
    return std::pair<long long, long long>{
        x.first * y.first - x.second * y.second,
        x.first * y.second + x.second * y.first};
  };
  const std::uint64_t count = z_ensemble_size(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c)
        for (int d = 0; d < dim; ++d) {
          std::pair<long long, long long> sum{0, 0};
          for (std::uint64_t idx = 0; idx < count; ++idx) {
            auto t = mul(digit(idx, a), {digit(idx, b).first, -digit(idx, b).second});
            t = mul(t, {digit(idx, c).first, -digit(idx, c).second});
            t = mul(t, digit(idx, d));
            sum.first += t.first;
            sum.second += t.second;
          }
          const long long dab = a == b, dcd = c == d, dac = a == c, dbd = b == d;
          const long long expect = static_cast<long long>(count) *
                                   (dab * dcd + dac * dbd - dab * dcd * dac);
          if (sum.first != expect || sum.second != 0) return false;
        }
  return true;
}

void criterion_3_boundary_ensemble() {
  double worst = 0.0;
  for (int dim = 2; dim <= 6; ++dim) {
    const Matrix mix = assemble_product_ensemble(boundary_product_ensemble(dim));
    worst = std::max(
        worst, (mix - epsilon_mixture(dim, 1.0 / (1.0 + dim))).norm());
  }
  bool moments_ok = true;
  for (int dim : {2, 3, 4}) moments_ok = moments_ok && z_moment_exact(dim);
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "max reconstruction residual %.3e (< 1e-12), z-moments %s", worst,
                moments_ok ? "exact" : "VIOLATED");
  report(3, "boundary product ensemble", worst < 1e-12 && moments_ok, detail);
}

void criterion_4_coefficient_pattern() {
  double worst = 0.0;
  for (int dim = 2; dim <= 5; ++dim) {
    const GeneratorBasis basis = build_basis(dim);
    for (int k = 0; k <= 10; ++k) {
      const double eps = k * 0.1;
      const TwoQuditCoeffs tc = two_qudit_coeffs(epsilon_mixture(dim, eps), basis);
      for (int alpha = 0; alpha < dim * dim; ++alpha)
        for (int beta = 0; beta < dim * dim; ++beta) {
          double expect = 0.0;
          if (alpha == 0 && beta == 0) expect = dim;
          else if (alpha == beta)
            expect = basis.is_antisymmetric(alpha - 1) ? -dim * eps : dim * eps;
          worst = std::max(worst, std::abs(tc.c(alpha, beta) - expect));
        }
    }
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail), "max pattern residual %.3e (< 1e-12)", worst);
  report(4, "two-qudit coefficient pattern", worst < 1e-12, detail);
}

void criterion_5_superoperator_calculus() {
  std::mt19937_64 rng(505);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst_sharp = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 + trial % 3;
    Matrix smat(dim * dim, dim * dim);
    for (Eigen::Index i = 0; i < smat.size(); ++i)
      smat.data()[i] = Complex(gauss(rng), gauss(rng));
    const Superoperator s(dim, smat);
    const Matrix a = random_operator(dim, rng);
    worst_sharp = std::max(
        worst_sharp,
        (ordinary_action(sharp(s), a) - left_right_action(s, a)).norm() /
            std::max(1.0, a.norm() * smat.norm()));
  }

  double worst_g = 0.0;
  double worst_trace = 0.0;
  for (int dim : {2, 3, 4}) {
    const Superoperator g = g_superoperator(dim);
    worst_g = std::max(worst_g, (g.mat() - g.mat().adjoint()).norm());
    worst_g = std::max(worst_g, (ordinary_adjoint(g).mat() - g.mat()).norm());
    worst_g = std::max(worst_g, (sharp(g).mat() - g.mat()).norm());
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix u = random_unitary(dim, rng);
      const Vector vu = operator_to_vec(u);
      const Vector vud = operator_to_vec(Matrix(u.adjoint()));
      const Superoperator cu(dim, vu * vu.adjoint());
      const Superoperator cud(dim, vud * vud.adjoint());
      const Superoperator rotated = ordinary_compose(cu, ordinary_compose(g, cud));
      worst_g = std::max(worst_g, (rotated.mat() - g.mat()).norm());
    }
    const HaarMoments hm = haar_moments(dim);
    worst_trace = std::max(
        worst_trace,
        std::abs(lr_trace(identity_lr(dim)) - Complex(dim * dim)) / (dim * dim));
    worst_trace = std::max(
        worst_trace, std::abs(lr_trace(identity_ordinary(dim)) - Complex(dim)) / dim);
    worst_trace = std::max(
        worst_trace,
        std::abs(lr_trace(g) - Complex(hm.volume)) / hm.volume);
  }
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "sharp %.3e, G properties %.3e, traces rel %.3e (all < 1e-12)",
                worst_sharp, worst_g, worst_trace);
  report(5, "superoperator calculus",
         worst_sharp < 1e-12 && worst_g < 1e-12 && worst_trace < 1e-12, detail);
}

void criterion_6_haar_monte_carlo() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  double worst_pull = 0.0;
  const std::int64_t samples = 1000000;
  for (int dim : {2, 3}) {
    const auto mc = monte_carlo_g(dim, samples, 606, 4);
    const Superoperator g = g_superoperator(dim);
    for (Eigen::Index r = 0; r < g.mat().rows(); ++r)
      for (Eigen::Index c = 0; c < g.mat().cols(); ++c) {
        const Complex diff = mc.estimate.mat()(r, c) - g.mat()(r, c);
        const double pull_re =
            std::abs(diff.real()) / (mc.stderr_re(r, c) + 1e-12);
        const double pull_im =
            std::abs(diff.imag()) / (mc.stderr_im(r, c) + 1e-12);
        worst_pull = std::max({worst_pull, pull_re, pull_im});
      }
    // fourth moment E[|<e|psi>|^4] = 2/D(D+1) = gamma/V
    std::mt19937_64 rng(607);
    double sum = 0.0, sum_sq = 0.0;
    Vector e = Vector::Zero(dim);
    e(0) = 1.0;
    for (std::int64_t i = 0; i < samples; ++i) {
      const double p = std::norm(haar_sample(dim, rng).dot(e));
      sum += p * p;
      sum_sq += p * p * p * p;
    }
    const double mean = sum / samples;
    const double sigma =
        std::sqrt((sum_sq / samples - mean * mean) / samples);
    const double target = 2.0 / (dim * (dim + 1.0));
    const double pull4 = std::abs(mean - target) / (sigma + 1e-15);
    worst_pull = std::max(worst_pull, pull4);
  }
  ok = worst_pull < 6.0;
  const double elapsed = seconds_since(t0);
  char detail[128];
  std::snprintf(detail, sizeof(detail), "worst pull %.2f sigma (< 6), %.1fs (< 120s)",
                worst_pull, elapsed);
  report(6, "Haar Monte Carlo vs closed-form G", ok && elapsed < 120.0, detail);
}

void criterion_7_dual_operators() {
  std::mt19937_64 rng(707);
  double worst_spec = 0.0, worst_map = 0.0;
  for (int dim = 2; dim <= 6; ++dim) {
    const HaarMoments hm = haar_moments(dim);
    const Superoperator g = g_superoperator(dim);
    for (int trial = 0; trial < 50; ++trial) {
      const Vector psi = haar_sample(dim, rng);
      const Matrix q = dual_operator(psi);
      Eigen::SelfAdjointEigenSolver<Matrix> es(q, Eigen::EigenvaluesOnly);
      const RealVector eig = es.eigenvalues();
      worst_spec =
          std::max(worst_spec, std::abs(eig(dim - 1) - dim * dim / hm.volume));
      for (int i = 0; i < dim - 1; ++i)
        worst_spec = std::max(worst_spec, std::abs(eig(i) + dim / hm.volume));
      worst_map = std::max(
          worst_map, (left_right_action(g, q) - psi * psi.adjoint()).norm());
    }
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "spectrum residual %.3e (< 1e-10), G(Q)=P residual %.3e (< 1e-12)",
                worst_spec, worst_map);
  report(7, "dual operator spectrum and inversion",
         worst_spec < 1e-10 && worst_map < 1e-12, detail);
}

void criterion_8_quasi_floor() {
  std::mt19937_64 rng(808);
  double worst_floor = 0.0;
  for (auto [dim, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    Matrix q = dual_operator(haar_sample(dim, rng));
    for (int i = 1; i < n; ++i) q = kron(q, dual_operator(haar_sample(dim, rng)));
    Eigen::SelfAdjointEigenSolver<Matrix> es(q, Eigen::EigenvaluesOnly);
    worst_floor = std::max(
        worst_floor, std::abs(es.eigenvalues().minCoeff() - w_floor(dim, n)));
  }
  double worst_pull = 0.0;
  for (int dim : {2, 3}) {
    const HaarMoments hm = haar_moments(dim);
    Matrix rho = Matrix::Identity(dim, dim);
    rho(0, 0) = 2.0;
    rho /= rho.trace();
    const int samples = 200000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double w = hm.volume * w_single(rho, haar_sample(dim, rng));
      sum += w;
      sum_sq += w * w;
    }
    const double mean = sum / samples;
    const double sigma = std::sqrt((sum_sq / samples - mean * mean) / samples);
    worst_pull = std::max(worst_pull, std::abs(mean - 1.0) / sigma);
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "floor residual %.3e (< 1e-12), normalization pull %.2f sigma (< 6)",
                worst_floor, worst_pull);
  report(8, "quasi-distribution floor and normalization",
         worst_floor < 1e-12 && worst_pull < 6.0, detail);
}

void criterion_9_separability_verdicts() {
  bool grid_ok = true;
  double worst_crossing = 0.0;
  for (int dim = 2; dim <= 6; ++dim) {
    const double boundary = two_qudit_boundary(dim);
    for (int k = 0; k <= 50; ++k) {
      const double eps = k * 0.02;
      const auto verdict = classify_epsilon_mixture(dim, eps);
      const auto ppt = ppt_test(epsilon_mixture(dim, eps), dim, dim);
      const bool sep = verdict.verdict == Verdict::SeparableCertified;
      grid_ok = grid_ok && (sep == ppt.is_ppt);
    }
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      if (ppt_test(epsilon_mixture(dim, mid), dim, dim).min_eigenvalue >= 0.0)
        lo = mid;
      else
        hi = mid;
    }
    worst_crossing = std::max(worst_crossing, std::abs(0.5 * (lo + hi) - boundary));
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "grid agreement %s, crossing residual %.3e (< 1e-10)",
                grid_ok ? "exact" : "VIOLATED", worst_crossing);
  report(9, "separability verdicts vs PPT", grid_ok && worst_crossing < 1e-10,
         detail);
}

void criterion_10_bounds_and_projection() {
  bool order_ok = true;
  double worst_eps = 0.0;
  for (int dim = 2; dim <= 5; ++dim)
    for (int n = 2; n <= 4; ++n) {
      const auto [lo, hi] = neighborhood_bounds(dim, n);
      order_ok = order_ok && lo < hi;
      const double eps = 1.0 / (1.0 + std::pow(dim, n - 1));
      const double target = 1.0 / (1.0 + std::pow(2.0, n - 1));
      worst_eps = std::max(
          worst_eps, std::abs(epsilon_prime(dim, n, eps) - target) / target);
    }
  double worst_proj = 0.0;
  for (auto [dim, n] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
    for (double eps : {0.0, 0.15, 0.6, 1.0}) {
      const auto pj = project_to_qubits(epsilon_cat(dim, n, eps), dim, n);
      worst_proj = std::max(
          worst_proj, (pj.state - epsilon_cat(2, n, pj.eps_prime)).norm());
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "ordering %s, eps' rel %.3e (< 1e-12), projection residual %.3e (< 1e-12)",
                order_ok ? "ok" : "VIOLATED", worst_eps, worst_proj);
  report(10, "bound ordering and qubit projection",
         order_ok && worst_eps < 1e-12 && worst_proj < 1e-12, detail);
}

}  // namespace

int main() {
  criterion_1_generator_algebra();
  criterion_2_pure_state_norm();
  criterion_3_boundary_ensemble();
  criterion_4_coefficient_pattern();
  criterion_5_superoperator_calculus();
  criterion_6_haar_monte_carlo();
  criterion_7_dual_operators();
  criterion_8_quasi_floor();
  criterion_9_separability_verdicts();
  criterion_10_bounds_and_projection();
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
