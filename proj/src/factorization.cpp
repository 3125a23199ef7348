#include "incline/factorization.hpp"

#include "incline/cp.hpp"
#include "incline/errors.hpp"
#include "reduce.hpp"

namespace incline {

std::string_view mode_name(TriangularMode mode) { return mode == TriangularMode::ul ? "UL" : "LU"; }

namespace {

void require_cp_matrix(const Matrix& a, const char* op) {
  if (!a.is_square()) throw UsageError(std::string(op) + " needs a square matrix");
  if (!a.is_symmetric()) throw DomainError(std::string(op) + " needs a symmetric matrix");
  const auto verdict = is_cp(a);
  if (!verdict.cp) {
    throw DomainError(std::string(op) + ": matrix is not completely positive; principal 2x2 test fails at (" +
                      std::to_string(verdict.witness->first + 1) + ", " +
                      std::to_string(verdict.witness->second + 1) + ")");
  }
}

// D T_M where T_M keeps the unit diagonal and the normalized entries on one
// side of it. Zero-diagonal indices stay zero rows and columns.
Matrix scaled_triangle(const Matrix& a, TriangularMode mode) {
  const auto& alg = a.algebra();
  const auto red = detail::strip_zero_diagonal(a);
  const auto norm = normalize(red.sub);
  Matrix factor(alg, a.rows(), a.cols());
  const std::size_t r = red.kept.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const bool keep = i == j || (mode == TriangularMode::ul ? i < j : i > j);
      if (!keep) continue;
      factor.set(red.kept[i], red.kept[j], alg.mul(norm.scale[i], norm.core(i, j)));
    }
  }
  return factor;
}

FactorResult triangular(const Matrix& a, TriangularMode mode, const char* op) {
  require_cp_matrix(a, op);
  FactorResult result;
  result.violations = almost_principal_violations(a, mode == TriangularMode::ul ? Side::left : Side::right);
  if (!result.violations.empty()) return result;
  TriangularCertificate cert{mode, scaled_triangle(a, mode)};
  if (!verify_triangular(a, cert)) {
    throw InternalError(std::string(op) + ": triangular factor does not reproduce the matrix");
  }
  result.certificate = std::move(cert);
  return result;
}

}  // namespace

FactorResult ul_factor(const Matrix& a) { return triangular(a, TriangularMode::ul, "ul_factor"); }

FactorResult lu_factor(const Matrix& a) { return triangular(a, TriangularMode::lu, "lu_factor"); }

Dichotomy factor_3x3(const Matrix& a) {
  const auto& alg = a.algebra();
  if (a.rows() != 3 || a.cols() != 3) throw UsageError("factor_3x3 needs a 3x3 matrix");
  if (!alg.flags().totally_ordered || !alg.flags().normal) {
    throw UsageError("factor_3x3 needs a totally ordered normal incline; " + alg.name() + " is not");
  }
  require_cp_matrix(a, "factor_3x3");
  std::array<bool, 3> ineq = {
      alg.geq(alg.mul(a(0, 0), a(1, 2)), alg.mul(a(0, 1), a(0, 2))),
      alg.geq(alg.mul(a(1, 1), a(0, 2)), alg.mul(a(0, 1), a(1, 2))),
      alg.geq(alg.mul(a(2, 2), a(0, 1)), alg.mul(a(0, 2), a(1, 2))),
  };
  if (ineq[0] + ineq[1] + ineq[2] < 2) {
    throw InternalError("fewer than two of the 3x3 inequalities hold; the algebra flags are inconsistent");
  }
  // the first inequality is the right almost principal condition, the third
  // the left one
  auto result = ineq[0] ? lu_factor(a) : ul_factor(a);
  if (!result.ok()) throw InternalError("3x3 factorization refused although its inequality holds");
  return {ineq, std::move(*result.certificate)};
}

bool verify_triangular(const Matrix& a, const TriangularCertificate& cert) {
  const auto& f = cert.factor;
  if (f.algebra() != a.algebra()) {
    throw UsageError("certificate is over " + f.algebra().name() + " but the matrix is over " + a.algebra().name());
  }
  if (!a.is_square() || f.rows() != a.rows() || f.cols() != a.cols()) return false;
  const auto& alg = a.algebra();
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const bool wrong_side = cert.mode == TriangularMode::ul ? i > j : i < j;
      if (wrong_side && !alg.is_zero(f(i, j))) return false;
    }
  }
  return gram(f) == a;
}

Tn2Result tn2_both(const Matrix& a) {
  if (!a.is_square()) throw UsageError("tn2_both needs a square matrix");
  if (!a.is_symmetric()) throw DomainError("tn2_both needs a symmetric matrix");
  if (!a.algebra().flags().normal) throw UsageError("tn2_both needs a normal incline");
  Tn2Result result;
  result.tn2 = is_tn2(a);
  if (!result.tn2.holds) return result;
  auto lu = lu_factor(a);
  auto ul = ul_factor(a);
  if (!lu.ok() || !ul.ok()) throw InternalError("TN2 matrix refused a triangular factorization");
  result.certificates.emplace(std::move(*lu.certificate), std::move(*ul.certificate));
  return result;
}

}  // namespace incline
