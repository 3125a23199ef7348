#pragma once

// Complete positivity over normal inclines.
//
// A symmetric A is completely positive when A = B B^T for some B over the
// incline. Over a normal incline that happens exactly when every principal
// 2x2 block has a_ii a_jj >= a_ij^2, and then A = D M D with
// D = diag(sqrt a_ii) and M symmetric with unit diagonal. Both constructions
// here start from that normal form.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "incline/algebra.hpp"
#include "incline/matrix.hpp"

namespace incline {

struct CpVerdict {
  bool cp = false;
  // first (i, j), i < j, breaking the test; for the regular test this is the
  // first off-diagonal a_ij not below a_ii
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Principal 2x2 test. Throws DomainError for a non-symmetric matrix and
// UsageError for an algebra that is neither normal nor regular. Regular
// algebras not flagged normal go through is_cp_regular.
CpVerdict is_cp(const Matrix& a);

// Symmetric and diagonally dominant. Throws UsageError unless the algebra is
// regular.
CpVerdict is_cp_regular(const Matrix& a);

struct Normalization {
  std::vector<Value> scale;  // sqrt(a_ii)
  Matrix core;               // unit diagonal, m_ij = residual(a_ij, sqrt a_ii * sqrt a_jj)
};

// Throws DomainError when A is not CP.
Normalization normalize(const Matrix& a);
// entrywise scale_i * m_ij * scale_j
Matrix reassemble(const Normalization& norm);

// A = sum_j b_j b_j^T
struct CpDecomposition {
  Algebra algebra;
  std::size_t n = 0;
  std::vector<std::vector<Value>> factors;
  // construction order of the original indices; identity when no relabeling
  std::vector<std::size_t> permutation;
  // non-zero count per factor
  std::vector<std::size_t> supports;

  std::size_t rank() const { return factors.size(); }
  std::size_t max_support() const;
  // n x rank matrix whose columns are the factors
  Matrix as_matrix() const;
};

std::size_t support_of(const Algebra& alg, const std::vector<Value>& factor);

// One three-column block per pair k < l (a shared sqrt(m_kl) column plus
// unit columns at k and l), scaled by D. Duplicate and all-zero columns are
// dropped. Throws DomainError when A is not CP.
CpDecomposition pairwise_decompose(const Matrix& a);

// At most max{n, floor(n^2/4)} factors, each of support <= 3 once n >= 4.
// Needs a totally ordered normal algebra (UsageError otherwise) and a CP
// matrix (DomainError otherwise).
CpDecomposition djl_decompose(const Matrix& a);

// max{n, floor(n^2 / 4)}
std::size_t cp_rank_upper_bound(std::size_t n);

// gram of the factors equals A entrywise, supports are recorded correctly
// and the permutation (when present) is a permutation. Throws UsageError
// when the decomposition belongs to another algebra.
bool verify_decomposition(const Matrix& a, const CpDecomposition& dec);

}  // namespace incline
