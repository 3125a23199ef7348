#pragma once

// Triangular CP factorizations A = U U^T (UL, U upper triangular) and
// A = C C^T (LU, C lower triangular).
//
// The almost principal 2x2 conditions are sufficient, not necessary: a
// refusal means "precondition failed", never "no triangular factor exists".
// Use brute_force_triangular_exists for impossibility.

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "incline/matrix.hpp"

namespace incline {

enum class TriangularMode { ul, lu };

std::string_view mode_name(TriangularMode mode);  // "UL" / "LU"

struct TriangularCertificate {
  TriangularMode mode;
  Matrix factor;
};

struct FactorResult {
  std::optional<TriangularCertificate> certificate;
  // almost principal submatrices with det+ < det-, when refused
  std::vector<AlmostPrincipal> violations;

  bool ok() const { return certificate.has_value(); }
};

// Needs CP (DomainError otherwise). Refuses with the left (resp. right)
// almost principal violations when the condition fails.
FactorResult ul_factor(const Matrix& a);
FactorResult lu_factor(const Matrix& a);

struct Dichotomy {
  // a11 a23 >= a12 a13,  a22 a13 >= a12 a23,  a33 a12 >= a13 a23
  std::array<bool, 3> inequalities{};
  TriangularCertificate certificate;
};

// 3x3 CP matrices over a totally ordered normal incline are LU or UL
// factorable. Prefers LU. Throws UsageError for other shapes or algebras and
// InternalError if fewer than two of the inequalities hold.
Dichotomy factor_3x3(const Matrix& a);

// Factor is triangular in the declared direction and factor factor^T = A.
// Throws UsageError on algebra mismatch.
bool verify_triangular(const Matrix& a, const TriangularCertificate& cert);

struct Tn2Result {
  std::optional<std::pair<TriangularCertificate, TriangularCertificate>> certificates;  // (LU, UL)
  Tn2Check tn2;

  bool ok() const { return certificates.has_value(); }
};

// Symmetric TN2 matrices over a normal incline are both LU and UL
// factorable. Refuses with the TN2 violations otherwise.
Tn2Result tn2_both(const Matrix& a);

}  // namespace incline
