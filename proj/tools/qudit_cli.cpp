#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "matrix_file.hpp"
#include "qudit/qudit.hpp"

namespace {

using qudit::tools::OrderedJson;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIndeterminate = 3;
constexpr int kExitNumericFailure = 4;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string label_string(const qudit::GeneratorLabel& lbl) {
  switch (lbl.kind) {
    case qudit::GeneratorKind::Diagonal:
      return "diag(" + std::to_string(lbl.a) + ")";
    case qudit::GeneratorKind::Symmetric:
      return "sym(" + std::to_string(lbl.a) + "," + std::to_string(lbl.b) + ")";
    case qudit::GeneratorKind::Antisymmetric:
      return "antisym(" + std::to_string(lbl.a) + "," + std::to_string(lbl.b) + ")";
  }
  return "?";
}

int run_basis(int dim, const std::string& out_path) {
  const qudit::GeneratorBasis basis = qudit::build_basis(dim);
  OrderedJson bundle;
  bundle["dim"] = dim;
  OrderedJson mats = OrderedJson::array();
  {
    OrderedJson m;
    m["label"] = "lambda0";
    m["dim_list"] = std::vector<int>{dim};
    m["data"] = qudit::tools::matrix_to_json(basis.lambda0());
    mats.push_back(std::move(m));
  }
  for (int j = 0; j < basis.size(); ++j) {
    OrderedJson m;
    m["label"] = label_string(basis.label(j));
    m["flat_index"] = j + 1;
    m["dim_list"] = std::vector<int>{dim};
    m["data"] = qudit::tools::matrix_to_json(basis.generator(j));
    mats.push_back(std::move(m));
  }
  bundle["matrices"] = std::move(mats);

  double max_residual = 0.0;
  for (int a = 0; a < dim * dim; ++a)
    for (int b = 0; b < dim * dim; ++b) {
      const qudit::Complex t =
          (basis.full_element(a) * basis.full_element(b)).trace();
      max_residual =
          std::max(max_residual, std::abs(t - (a == b ? 1.0 : 0.0)));
    }
  bundle["orthonormality_max_residual"] = max_residual;

  if (out_path.empty()) {
    std::cout << bundle.dump(2) << "\n";
  } else {
    qudit::tools::write_json_file(out_path, bundle);
    std::cout << "wrote " << out_path << "\n";
  }
  return kExitOk;
}

OrderedJson ensemble_certificate(const qudit::SeparabilityVerdict& v) {
  OrderedJson cert;
  cert["kind"] = qudit::to_string(v.certificate_kind);
  switch (v.certificate_kind) {
    case qudit::CertificateKind::ProductEnsemble: {
      OrderedJson terms = OrderedJson::array();
      for (const auto& t : v.ensemble) {
        OrderedJson term;
        term["weight"] = t.weight;
        OrderedJson sa = OrderedJson::array(), sb = OrderedJson::array();
        for (Eigen::Index i = 0; i < t.state_a.size(); ++i)
          sa.push_back(OrderedJson::array(
              {t.state_a(i).real(), t.state_a(i).imag()}));
        for (Eigen::Index i = 0; i < t.state_b.size(); ++i)
          sb.push_back(OrderedJson::array(
              {t.state_b(i).real(), t.state_b(i).imag()}));
        term["state_a"] = std::move(sa);
        term["state_b"] = std::move(sb);
        terms.push_back(std::move(term));
      }
      cert["terms"] = std::move(terms);
      break;
    }
    case qudit::CertificateKind::PptWitness:
      cert["min_eigenvalue"] = v.certificate_value;
      break;
    case qudit::CertificateKind::QuasiFloor:
      cert["floor_value"] = v.certificate_value;
      cert["boundary"] = v.boundary_used;
      break;
    case qudit::CertificateKind::BoundaryComparison:
      cert["eps_prime"] = v.certificate_value;
      cert["boundary"] = v.boundary_used;
      break;
    case qudit::CertificateKind::None:
      break;
  }
  return cert;
}

int run_classify(const std::string& kind, int dim, int n_parties, double eps,
                 const std::string& cert_out) {
  qudit::SeparabilityVerdict v;
  if (kind == "mixture") {
    v = qudit::classify_epsilon_mixture(dim, eps);
  } else if (kind == "cat") {
    v = qudit::classify_epsilon_cat(dim, n_parties, eps);
  } else {
    std::cerr << "unknown classify kind: " << kind << "\n";
    return kExitUsage;
  }
  OrderedJson record;
  record["verdict"] = qudit::to_string(v.verdict);
  record["boundary_used"] = v.boundary_used;
  record["certificate_kind"] = qudit::to_string(v.certificate_kind);
  if (!cert_out.empty() && v.certificate_kind != qudit::CertificateKind::None) {
    qudit::tools::write_json_file(cert_out, ensemble_certificate(v));
    record["certificate_path"] = cert_out;
  }
  std::cout << record.dump() << "\n";
  return v.verdict == qudit::Verdict::Indeterminate ? kExitIndeterminate : kExitOk;
}

struct Report {
  bool all_pass = true;
  void check(const std::string& name, double residual, double tol) {
    const bool ok = residual < tol;
    all_pass = all_pass && ok;
    std::cout << (ok ? "pass" : "FAIL") << " " << name
              << " residual=" << fmt(residual) << " tolerance=" << fmt(tol)
              << "\n";
  }
  void check_flag(const std::string& name, bool ok) {
    all_pass = all_pass && ok;
    std::cout << (ok ? "pass" : "FAIL") << " " << name << "\n";
  }
};

int run_verify_algebra(int dim) {
  Report rep;
  const qudit::GeneratorBasis basis = qudit::build_basis(dim);
  double ortho = 0.0;
  for (int a = 0; a < dim * dim; ++a)
    for (int b = 0; b < dim * dim; ++b)
      ortho = std::max(ortho,
                       std::abs((basis.full_element(a) * basis.full_element(b))
                                    .trace() -
                                qudit::Complex(a == b ? 1.0 : 0.0)));
  rep.check("orthonormality", ortho, qudit::kIdentityTol);

  const qudit::StructureConstants sc = qudit::structure_constants(basis);
  const int n = dim * dim - 1;
  double product_residual = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      qudit::Matrix rhs = qudit::Matrix::Identity(dim, dim) *
                          (j == k ? 1.0 / dim : 0.0);
      for (int l = 0; l < n; ++l)
        rhs += (sc.dval(j, k, l) + qudit::Complex(0, 1) * sc.fval(j, k, l)) *
               basis.generator(l);
      product_residual = std::max(
          product_residual,
          (basis.generator(j) * basis.generator(k) - rhs).norm());
    }
  rep.check("structure-constant-product-identity", product_residual,
            qudit::kIdentityTol);

  double norm_residual = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const qudit::Vector psi =
        qudit::haar_sample(dim, static_cast<std::uint64_t>(trial + 1));
    const qudit::BlochVector bv =
        qudit::bloch_expand(psi * psi.adjoint(), basis);
    norm_residual = std::max(
        norm_residual, std::abs(bv.c.squaredNorm() - dim * (dim - 1.0)));
  }
  rep.check("pure-state-bloch-norm", norm_residual, 1e-10);
  return rep.all_pass ? kExitOk : kExitNumericFailure;
}

int run_verify_ensemble(int dim) {
  Report rep;
  const auto terms = qudit::boundary_product_ensemble(dim);
  double total = 0.0;
  for (const auto& t : terms) total += t.weight;
  rep.check("ensemble-weight-normalization", std::abs(total - 1.0),
            qudit::kIdentityTol);
  const qudit::Matrix mix = qudit::assemble_product_ensemble(terms);
  const double boundary = qudit::two_qudit_boundary(dim);
  rep.check("boundary-ensemble-reconstruction",
            (mix - qudit::epsilon_mixture(dim, boundary)).norm(),
            qudit::kIdentityTol);

  const qudit::Vector psi = qudit::max_entangled(dim);
  qudit::Matrix closed = qudit::Matrix::Identity(dim * dim, dim * dim) /
                             static_cast<double>(dim * dim) +
                         (psi * psi.adjoint()) / static_cast<double>(dim);
  for (int a = 0; a < dim; ++a)
    closed(a * dim + a, a * dim + a) -= 1.0 / (dim * dim);
  rep.check("z-ensemble-closed-form",
            (qudit::z_ensemble_average(dim) - closed).norm(),
            qudit::kIdentityTol);
  return rep.all_pass ? kExitOk : kExitNumericFailure;
}

int run_verify_haar(int dim, std::int64_t samples, std::uint64_t seed) {
  Report rep;
  const auto mc = qudit::monte_carlo_g(dim, samples, seed);
  const qudit::Superoperator g = qudit::g_superoperator(dim);
  double worst_pull = 0.0;
  for (Eigen::Index r = 0; r < g.mat().rows(); ++r)
    for (Eigen::Index c = 0; c < g.mat().cols(); ++c) {
      const qudit::Complex diff = mc.estimate.mat()(r, c) - g.mat()(r, c);
      const double pull_re =
          std::abs(diff.real()) / (mc.stderr_re(r, c) + 1e-12);
      const double pull_im =
          std::abs(diff.imag()) / (mc.stderr_im(r, c) + 1e-12);
      worst_pull = std::max({worst_pull, pull_re, pull_im});
    }
  rep.check("g-monte-carlo-6sigma", worst_pull, 6.0);
  rep.check("g-estimate-sharp-invariance",
            (qudit::sharp(mc.estimate).mat() - mc.estimate.mat()).norm(),
            qudit::kIdentityTol);
  rep.check("g-estimate-lr-hermitian",
            (mc.estimate.mat() - mc.estimate.mat().adjoint()).norm(),
            qudit::kIdentityTol);
  return rep.all_pass ? kExitOk : kExitNumericFailure;
}

int run_verify_ppt(int dim) {
  Report rep;
  const double boundary = qudit::two_qudit_boundary(dim);
  bool grid_ok = true;
  for (int k = 0; k <= 50; ++k) {
    const double eps = k * 0.02;
    const auto r = qudit::ppt_test(qudit::epsilon_mixture(dim, eps), dim, dim);
    grid_ok = grid_ok && (r.is_ppt == (eps <= boundary + qudit::kIdentityTol));
  }
  rep.check_flag("ppt-grid-agreement", grid_ok);
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (qudit::ppt_test(qudit::epsilon_mixture(dim, mid), dim, dim)
            .min_eigenvalue >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  rep.check("ppt-zero-crossing", std::abs(0.5 * (lo + hi) - boundary), 1e-10);
  return rep.all_pass ? kExitOk : kExitNumericFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qudit entanglement numerics"};
  app.require_subcommand(1);

  int dim = 2;
  int n_parties = 2;
  double eps = 0.0;
  std::int64_t samples = 100000;
  std::uint64_t seed = 1;
  std::string out_path, cert_out, classify_kind, suite;

  auto* basis_cmd = app.add_subcommand("basis", "emit the SU(D) generator basis");
  basis_cmd->add_option("--dim", dim, "qudit dimension D")->required();
  basis_cmd->add_option("--out", out_path, "output path (stdout if omitted)");

  auto* classify_cmd =
      app.add_subcommand("classify", "separability verdict for a mixture family");
  classify_cmd->add_option("kind", classify_kind, "mixture|cat")->required();
  classify_cmd->add_option("--dim", dim, "qudit dimension D")->required();
  classify_cmd->add_option("--n", n_parties, "number of parties (cat)");
  classify_cmd->add_option("--eps", eps, "mixing weight")->required();
  classify_cmd->add_option("--cert-out", cert_out, "certificate output path");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "algebra|ensemble|haar|ppt")->required();
  verify_cmd->add_option("--dim", dim, "qudit dimension D")->required();
  verify_cmd->add_option("--n", n_parties, "number of parties");
  verify_cmd->add_option("--samples", samples, "Monte Carlo sample count");
  verify_cmd->add_option("--seed", seed, "Monte Carlo seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (basis_cmd->parsed()) return run_basis(dim, out_path);
    if (classify_cmd->parsed())
      return run_classify(classify_kind, dim, n_parties, eps, cert_out);
    if (verify_cmd->parsed()) {
      if (suite == "algebra") return run_verify_algebra(dim);
      if (suite == "ensemble") return run_verify_ensemble(dim);
      if (suite == "haar") return run_verify_haar(dim, samples, seed);
      if (suite == "ppt") return run_verify_ppt(dim);
      std::cerr << "unknown suite: " << suite << "\n";
      return kExitUsage;
    }
  } catch (const qudit::NumericalDegeneracyError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumericFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNumericFailure;
  }
  return kExitUsage;
}
