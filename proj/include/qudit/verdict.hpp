#ifndef QUDIT_VERDICT_HPP
#define QUDIT_VERDICT_HPP

#include <string>
#include <vector>

#include "qudit/states.hpp"

namespace qudit {

enum class Verdict { SeparableCertified, EntangledCertified, Indeterminate };

enum class CertificateKind {
  None,
  ProductEnsemble,     // explicit weighted product ensemble reconstructing the state
  PptWitness,          // negative partial-transpose eigenvalue
  BoundaryComparison,  // closed-form boundary exceeded
  QuasiFloor,          // analytic quasi-distribution floor is nonnegative
};

struct SeparabilityVerdict {
  Verdict verdict = Verdict::Indeterminate;
  CertificateKind certificate_kind = CertificateKind::None;
  double boundary_used = 0.0;
  // scalar payload: PPT eigenvalue, quasi-floor value, or corroborating eps'
  double certificate_value = 0.0;
  std::vector<ProductEnsembleTerm> ensemble;
};

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::SeparableCertified: return "separable-certified";
    case Verdict::EntangledCertified: return "entangled-certified";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

inline std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::None: return "none";
    case CertificateKind::ProductEnsemble: return "product-ensemble";
    case CertificateKind::PptWitness: return "ppt-witness";
    case CertificateKind::BoundaryComparison: return "boundary-comparison";
    case CertificateKind::QuasiFloor: return "quasi-floor";
  }
  return "none";
}

}  // namespace qudit

#endif  // QUDIT_VERDICT_HPP
