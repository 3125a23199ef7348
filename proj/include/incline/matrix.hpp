#pragma once

// Dense matrices over an incline and the structural predicates used by the
// complete-positivity theory. All indices in this API are 0-based; JSON
// output and diagnostics convert to 1-based positions.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "incline/algebra.hpp"

namespace incline {

class Matrix {
 public:
  // rows x cols matrix filled with the algebra's zero
  Matrix(Algebra alg, std::size_t rows, std::size_t cols);
  Matrix(Algebra alg, std::size_t rows, std::size_t cols, std::vector<Value> entries);

  // Convenience for tests and examples: Matrix::parse(alg, {{"1", "1/2"}, ...})
  static Matrix parse(const Algebra& alg, std::initializer_list<std::initializer_list<std::string_view>> rows);
  static Matrix identity(const Algebra& alg, std::size_t n);

  const Algebra& algebra() const { return alg_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  const Value& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Value& v);

  Matrix transpose() const;
  // P A P^T where row i of the result is row order[i] of A
  Matrix permuted(const std::vector<std::size_t>& order) const;

  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Algebra alg_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Value> entries_;
};

// A strictly increasing list of 0-based positions.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> indices);
  explicit IndexSet(std::vector<std::size_t> indices);

  std::size_t size() const { return indices_.size(); }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  // e.g. "{2,3}" with 1-based positions
  std::string to_string() const;

  bool operator==(const IndexSet&) const = default;

 private:
  std::vector<std::size_t> indices_;
};

struct DetSplit {
  Value plus;
  Value minus;

  bool operator==(const DetSplit&) const = default;
};

// B B^T: entry (i, j) = sum_k b_ik * b_jk.
Matrix gram(const Matrix& b);
// A B over the incline
Matrix multiply(const Matrix& a, const Matrix& b);

inline constexpr std::size_t kDefaultFactorialCap = 8;

// Sum of permutation products over even (plus) and odd (minus) permutations.
// Throws ResourceError when the side exceeds `factorial_cap`.
DetSplit det_split(const Matrix& a, std::size_t factorial_cap = kDefaultFactorialCap);

Matrix submatrix(const Matrix& a, const IndexSet& rows, const IndexSet& cols);

enum class Side { left, right };

struct AlmostPrincipal {
  IndexSet rows;
  IndexSet cols;
  DetSplit det;
};

// Left: rows {i,k}, cols {j,k} with i, j < k, i != j.
// Right: rows {k,i}, cols {k,j} with i, j > k, i != j.
// Listed by k, then i, then j.
std::vector<AlmostPrincipal> enumerate_almost_principal_2x2(const Matrix& a, Side side);

// The almost principal 2x2 submatrices with det+ < det- (not >=).
std::vector<AlmostPrincipal> almost_principal_violations(const Matrix& a, Side side);

// First row i whose diagonal does not dominate the join of its off-diagonal
// entries; nullopt when the matrix is diagonally dominant.
std::optional<std::size_t> non_dominant_row(const Matrix& a);
bool is_diagonally_dominant(const Matrix& a);

struct Tn2Violation {
  std::size_t i, k;  // rows, i < k
  std::size_t j, l;  // cols, j < l
  DetSplit det;      // plus = a_ij a_kl, minus = a_il a_kj
};

struct Tn2Check {
  bool holds = true;
  // every violating (i, k, j, l), lexicographic
  std::vector<Tn2Violation> violations;

  const Tn2Violation* first() const { return violations.empty() ? nullptr : &violations.front(); }
};

Tn2Check is_tn2(const Matrix& a);

}  // namespace incline
