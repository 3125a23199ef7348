#include "incline/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "incline/errors.hpp"

namespace incline {

Matrix::Matrix(Algebra alg, std::size_t rows, std::size_t cols)
    : alg_(std::move(alg)), rows_(rows), cols_(cols), entries_(rows * cols, alg_.zero()) {}

Matrix::Matrix(Algebra alg, std::size_t rows, std::size_t cols, std::vector<Value> entries)
    : alg_(std::move(alg)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw UsageError("matrix needs " + std::to_string(rows_ * cols_) + " entries, got " +
                     std::to_string(entries_.size()));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!alg_.contains(entries_[k])) {
      throw UsageError("matrix entry (" + std::to_string(k / cols_ + 1) + ", " + std::to_string(k % cols_ + 1) +
                       ") is not an element of " + alg_.name());
    }
  }
}

Matrix Matrix::parse(const Algebra& alg, std::initializer_list<std::initializer_list<std::string_view>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<Value> entries;
  for (const auto& row : rows) {
    if (row.size() != c) throw UsageError("ragged matrix literal");
    for (auto lit : row) entries.push_back(alg.parse(lit));
  }
  return Matrix(alg, r, c, std::move(entries));
}

Matrix Matrix::identity(const Algebra& alg, std::size_t n) {
  Matrix m(alg, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, alg.one());
  return m;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

void Matrix::set(std::size_t i, std::size_t j, const Value& v) {
  if (i >= rows_ || j >= cols_) throw UsageError("matrix index out of range");
  if (!alg_.contains(v)) throw UsageError("value is not an element of " + alg_.name());
  entries_[i * cols_ + j] = v;
}

Matrix Matrix::transpose() const {
  Matrix t(alg_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::permuted(const std::vector<std::size_t>& order) const {
  if (!is_square() || order.size() != rows_) throw UsageError("permutation does not match the matrix side");
  std::vector<bool> seen(rows_, false);
  for (auto p : order) {
    if (p >= rows_ || seen[p]) throw UsageError("not a permutation");
    seen[p] = true;
  }
  Matrix out(alg_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.entries_[i * cols_ + j] = (*this)(order[i], order[j]);
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << alg_.format((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.alg_ == b.alg_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

// ---------------------------------------------------------------------------

IndexSet::IndexSet(std::initializer_list<std::size_t> indices) : IndexSet(std::vector<std::size_t>(indices)) {}

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  for (std::size_t k = 1; k < indices_.size(); ++k) {
    if (indices_[k - 1] >= indices_[k]) throw UsageError("index set must be strictly increasing");
  }
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(indices_[k] + 1);
  }
  return s + "}";
}

// ---------------------------------------------------------------------------

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.algebra() != b.algebra()) throw UsageError("matrices are over different algebras");
  if (a.cols() != b.rows()) throw UsageError("inner dimensions differ");
  const auto& alg = a.algebra();
  Matrix out(alg, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Value acc = alg.zero();
      for (std::size_t k = 0; k < a.cols(); ++k) acc = alg.add(acc, alg.mul(a(i, k), b(k, j)));
      out.set(i, j, acc);
    }
  }
  return out;
}

Matrix gram(const Matrix& b) {
  const auto& alg = b.algebra();
  const std::size_t n = b.rows();
  Matrix out(alg, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Value acc = alg.zero();
      for (std::size_t k = 0; k < b.cols(); ++k) acc = alg.add(acc, alg.mul(b(i, k), b(j, k)));
      out.set(i, j, acc);
      out.set(j, i, acc);
    }
  }
  return out;
}

DetSplit det_split(const Matrix& a, std::size_t factorial_cap) {
  if (!a.is_square()) throw UsageError("det_split needs a square matrix");
  const std::size_t n = a.rows();
  if (n > factorial_cap) {
    throw ResourceError("det_split: side " + std::to_string(n) + " exceeds the factorial cap " +
                        std::to_string(factorial_cap));
  }
  const auto& alg = a.algebra();
  DetSplit out{alg.zero(), alg.zero()};
  if (n == 0) {
    out.plus = alg.one();
    return out;
  }
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::size_t inversions = 0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) inversions += sigma[p] > sigma[q];
    }
    Value term = alg.one();
    for (std::size_t i = 0; i < n; ++i) term = alg.mul(term, a(i, sigma[i]));
    Value& slot = (inversions % 2 == 0) ? out.plus : out.minus;
    slot = alg.add(slot, term);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Matrix submatrix(const Matrix& a, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw UsageError("submatrix index sets differ in size");
  for (auto r : rows.indices()) {
    if (r >= a.rows()) throw UsageError("row index " + std::to_string(r + 1) + " is out of range");
  }
  for (auto c : cols.indices()) {
    if (c >= a.cols()) throw UsageError("column index " + std::to_string(c + 1) + " is out of range");
  }
  Matrix out(a.algebra(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.set(i, j, a(rows[i], cols[j]));
  }
  return out;
}

std::vector<AlmostPrincipal> enumerate_almost_principal_2x2(const Matrix& a, Side side) {
  if (!a.is_square()) throw UsageError("almost principal submatrices need a square matrix");
  const std::size_t n = a.rows();
  std::vector<AlmostPrincipal> out;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (side == Side::left && (i >= k || j >= k)) continue;
        if (side == Side::right && (i <= k || j <= k)) continue;
        IndexSet rows = side == Side::left ? IndexSet{i, k} : IndexSet{k, i};
        IndexSet cols = side == Side::left ? IndexSet{j, k} : IndexSet{k, j};
        DetSplit det = det_split(submatrix(a, rows, cols));
        out.push_back({std::move(rows), std::move(cols), std::move(det)});
      }
    }
  }
  return out;
}

std::vector<AlmostPrincipal> almost_principal_violations(const Matrix& a, Side side) {
  const auto& alg = a.algebra();
  std::vector<AlmostPrincipal> out;
  for (auto& apm : enumerate_almost_principal_2x2(a, side)) {
    if (!alg.geq(apm.det.plus, apm.det.minus)) out.push_back(std::move(apm));
  }
  return out;
}

std::optional<std::size_t> non_dominant_row(const Matrix& a) {
  if (!a.is_square()) throw UsageError("diagonal dominance needs a square matrix");
  const auto& alg = a.algebra();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Value off = alg.zero();
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j != i) off = alg.add(off, a(i, j));
    }
    if (!alg.leq(off, a(i, i))) return i;
  }
  return std::nullopt;
}

bool is_diagonally_dominant(const Matrix& a) { return !non_dominant_row(a).has_value(); }

Tn2Check is_tn2(const Matrix& a) {
  const auto& alg = a.algebra();
  Tn2Check check;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = i + 1; k < a.rows(); ++k) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t l = j + 1; l < a.cols(); ++l) {
          DetSplit det{alg.mul(a(i, j), a(k, l)), alg.mul(a(i, l), a(k, j))};
          if (!alg.geq(det.plus, det.minus)) {
            check.holds = false;
            check.violations.push_back({i, k, j, l, std::move(det)});
          }
        }
      }
    }
  }
  return check;
}

}  // namespace incline
