#include "incline/cp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "incline/errors.hpp"
#include "reduce.hpp"

namespace incline {

namespace detail {

Reduced strip_zero_diagonal(const Matrix& a) {
  const auto& alg = a.algebra();
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!alg.is_zero(a(i, i))) {
      kept.push_back(i);
      continue;
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!alg.is_zero(a(i, j))) {
        throw InternalError("row " + std::to_string(i + 1) + " has a zero diagonal but a non-zero entry");
      }
    }
  }
  IndexSet idx(kept);
  return {kept, submatrix(a, idx, idx)};
}

}  // namespace detail

namespace {

std::string pair_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
}

void require_square_symmetric(const Matrix& a, const char* op) {
  if (!a.is_square()) throw UsageError(std::string(op) + " needs a square matrix");
  if (!a.is_symmetric()) throw DomainError(std::string(op) + " needs a symmetric matrix");
}

void require_cp(const Matrix& a, const char* op) {
  const auto verdict = is_cp(a);
  if (!verdict.cp) {
    throw DomainError(std::string(op) + ": matrix is not completely positive; principal 2x2 test fails at " +
                      pair_text(verdict.witness->first, verdict.witness->second));
  }
}

// Builds factors of a unit-diagonal matrix. Factors are indexed by the
// positions of the matrix it was handed.
class DjlBuilder {
 public:
  explicit DjlBuilder(const Matrix& core) : alg_(core.algebra()), m_(core) {}

  void run() {
    std::vector<std::size_t> idx(m_.rows());
    std::iota(idx.begin(), idx.end(), 0);
    decompose(idx);
  }

  std::vector<std::vector<Value>> take_factors() { return std::move(factors_); }
  std::vector<std::size_t> take_order() { return std::move(order_); }

 private:
  using Entry = std::pair<std::size_t, Value>;

  const Value& at(std::size_t i, std::size_t j) const { return m_(i, j); }

  void emit(std::initializer_list<Entry> entries) {
    std::vector<Value> f(m_.rows(), alg_.zero());
    for (const auto& [pos, v] : entries) f[pos] = v;
    factors_.push_back(std::move(f));
  }

  void require_below(const Value& x, const Value& bound, const char* what) const {
    if (!alg_.leq(x, bound)) throw InternalError(std::string("support-3 construction: ") + what + " fails");
  }

  // Reorders idx so that idx[0], idx[2] hold the smallest off-diagonal entry
  // and idx[1] the largest remaining entry of row idx[0]. Ties go to the
  // lexicographically first position.
  std::vector<std::size_t> relabel(const std::vector<std::size_t>& idx) const {
    const std::size_t s = idx.size();
    std::size_t p = 0, q = 1;
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = 0; b < s; ++b) {
        if (a == b) continue;
        const auto& cand = at(idx[a], idx[b]);
        const auto& best = at(idx[p], idx[q]);
        if (cand != best && alg_.leq(cand, best)) {
          p = a;
          q = b;
        }
      }
    }
    std::size_t r = s;
    for (std::size_t c = 0; c < s; ++c) {
      if (c == p || c == q) continue;
      if (r == s) {
        r = c;
        continue;
      }
      const auto& cand = at(idx[p], idx[c]);
      const auto& best = at(idx[p], idx[r]);
      if (cand != best && alg_.leq(best, cand)) r = c;
    }
    std::vector<std::size_t> out = {idx[p], idx[r], idx[q]};
    for (std::size_t c = 0; c < s; ++c) {
      if (c != p && c != q && c != r) out.push_back(idx[c]);
    }
    return out;
  }

  void decompose(const std::vector<std::size_t>& idx) {
    const Value one = alg_.one();
    switch (idx.size()) {
      case 0:
        return;
      case 1:
        order_.push_back(idx[0]);
        emit({{idx[0], one}});
        return;
      case 2: {
        order_.insert(order_.end(), idx.begin(), idx.end());
        const auto x = idx[0], y = idx[1];
        emit({{x, one}, {y, at(x, y)}});
        emit({{y, one}});
        return;
      }
      case 3: {
        order_.insert(order_.end(), idx.begin(), idx.end());
        const auto x = idx[0], y = idx[1], z = idx[2];
        emit({{x, one}, {y, at(x, y)}});
        emit({{y, one}, {z, at(y, z)}});
        emit({{x, at(x, z)}, {z, one}});
        return;
      }
      default:
        break;
    }

    const auto v = relabel(idx);
    const auto i1 = v[0], i2 = v[1], i3 = v[2];
    require_below(alg_.mul(at(i1, i2), at(i1, i3)), at(i2, i3), "a12*a13 <= a23");

    // B1 and B2 fix the (1,1), (1,2), (1,3), (2,2), (2,3) entries.
    emit({{i1, one}, {i2, at(i1, i2)}, {i3, at(i1, i3)}});
    emit({{i2, one}, {i3, at(i2, i3)}});

    if (v.size() == 4) {
      order_.insert(order_.end(), v.begin(), v.end());
      const auto i4 = v[3];
      emit({{i3, one}, {i4, at(i3, i4)}});
      require_below(alg_.mul(at(i1, i4), at(i2, i4)), at(i1, i2), "a1i*a2i <= a12");
      emit({{i1, at(i1, i4)}, {i2, at(i2, i4)}, {i4, one}});
      return;
    }

    // B_i for every index past the third fixes (1,i), (2,i), (i,i).
    for (std::size_t t = 3; t < v.size(); ++t) {
      const auto it = v[t];
      require_below(alg_.mul(at(i1, it), at(i2, it)), at(i1, i2), "a1i*a2i <= a12");
      emit({{i1, at(i1, it)}, {i2, at(i2, it)}, {it, one}});
    }

    if (v.size() == 5) {
      order_.insert(order_.end(), v.begin(), v.end());
      const auto i4 = v[3], i5 = v[4];
      const auto& a34 = at(i3, i4);
      const auto& a35 = at(i3, i5);
      const auto& a45 = at(i4, i5);
      const bool a45_strictly_smallest = a45 != a34 && a45 != a35 && alg_.leq(a45, a34) && alg_.leq(a45, a35);
      if (!a45_strictly_smallest) {
        require_below(alg_.mul(a34, a35), a45, "a34*a35 <= a45");
        emit({{i3, one}, {i4, a34}, {i5, a35}});
        emit({{i4, a45}, {i5, one}});
      } else {
        emit({{i3, one}, {i4, a34}, {i5, a45}});
        emit({{i3, a35}, {i4, a45}, {i5, one}});
      }
      return;
    }

    order_.push_back(i1);
    order_.push_back(i2);
    decompose(std::vector<std::size_t>(v.begin() + 2, v.end()));
  }

  const Algebra& alg_;
  const Matrix& m_;
  std::vector<std::vector<Value>> factors_;
  std::vector<std::size_t> order_;
};

// Lifts factors of the reduced unit-diagonal problem back to the full index
// range, scaling entry t by scale[t].
CpDecomposition lift(const Matrix& a, const detail::Reduced& red, const std::vector<Value>& scale,
                     const std::vector<std::vector<Value>>& reduced_factors, const std::vector<std::size_t>& order) {
  const auto& alg = a.algebra();
  CpDecomposition dec{alg, a.rows(), {}, {}, {}};
  for (const auto& rf : reduced_factors) {
    std::vector<Value> f(a.rows(), alg.zero());
    for (std::size_t t = 0; t < rf.size(); ++t) f[red.kept[t]] = alg.mul(scale[t], rf[t]);
    if (support_of(alg, f) == 0) continue;
    if (std::find(dec.factors.begin(), dec.factors.end(), f) != dec.factors.end()) continue;
    dec.supports.push_back(support_of(alg, f));
    dec.factors.push_back(std::move(f));
  }
  for (auto t : order) dec.permutation.push_back(red.kept[t]);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (std::find(dec.permutation.begin(), dec.permutation.end(), i) == dec.permutation.end()) {
      dec.permutation.push_back(i);
    }
  }
  return dec;
}

}  // namespace

// ---------------------------------------------------------------------------

CpVerdict is_cp(const Matrix& a) {
  require_square_symmetric(a, "is_cp");
  const auto& alg = a.algebra();
  if (!alg.flags().normal) {
    if (alg.flags().regular) return is_cp_regular(a);
    throw UsageError("is_cp needs a normal or regular incline; " + alg.name() + " is neither");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.rows(); ++j) {
      if (!alg.geq(alg.mul(a(i, i), a(j, j)), alg.square(a(i, j)))) return {false, std::pair{i, j}};
    }
  }
  return {true, std::nullopt};
}

CpVerdict is_cp_regular(const Matrix& a) {
  const auto& alg = a.algebra();
  if (!alg.flags().regular) throw UsageError("is_cp_regular needs a regular incline; " + alg.name() + " is not");
  if (!a.is_square()) throw UsageError("is_cp_regular needs a square matrix");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.rows(); ++j) {
      if (a(i, j) != a(j, i)) return {false, std::pair{i, j}};
    }
  }
  const auto row = non_dominant_row(a);
  if (!row) return {true, std::nullopt};
  // in a lattice the row join is below a_ii iff every entry is
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (j != *row && !alg.leq(a(*row, j), a(*row, *row))) {
      return {false, std::pair{std::min(*row, j), std::max(*row, j)}};
    }
  }
  throw InternalError("diagonal dominance failed without an offending entry");
}

Normalization normalize(const Matrix& a) {
  require_cp(a, "normalize");
  const auto& alg = a.algebra();
  const std::size_t n = a.rows();
  Normalization norm{std::vector<Value>(n), Matrix::identity(alg, n)};
  for (std::size_t i = 0; i < n; ++i) norm.scale[i] = alg.sqrt(a(i, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Value m = alg.residual(a(i, j), alg.mul(norm.scale[i], norm.scale[j]));
      norm.core.set(i, j, m);
      norm.core.set(j, i, m);
    }
  }
  return norm;
}

Matrix reassemble(const Normalization& norm) {
  const auto& alg = norm.core.algebra();
  const std::size_t n = norm.core.rows();
  Matrix out(alg, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.set(i, j, alg.mul(alg.mul(norm.scale[i], norm.core(i, j)), norm.scale[j]));
    }
  }
  return out;
}

std::size_t support_of(const Algebra& alg, const std::vector<Value>& factor) {
  return static_cast<std::size_t>(
      std::count_if(factor.begin(), factor.end(), [&](const Value& v) { return !alg.is_zero(v); }));
}

std::size_t CpDecomposition::max_support() const {
  return supports.empty() ? 0 : *std::max_element(supports.begin(), supports.end());
}

Matrix CpDecomposition::as_matrix() const {
  Matrix b(algebra, n, factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) b.set(i, k, factors[k][i]);
  }
  return b;
}

CpDecomposition pairwise_decompose(const Matrix& a) {
  require_cp(a, "pairwise_decompose");
  const auto& alg = a.algebra();
  const auto red = detail::strip_zero_diagonal(a);
  const auto norm = normalize(red.sub);
  const std::size_t r = red.sub.rows();
  std::vector<std::vector<Value>> factors;
  auto unit = [&](std::size_t k) {
    std::vector<Value> f(r, alg.zero());
    f[k] = alg.one();
    return f;
  };
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = k + 1; l < r; ++l) {
      std::vector<Value> f(r, alg.zero());
      f[k] = f[l] = alg.sqrt(norm.core(k, l));
      factors.push_back(std::move(f));
      factors.push_back(unit(k));
      factors.push_back(unit(l));
    }
  }
  if (r == 1) factors.push_back(unit(0));
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  auto dec = lift(a, red, norm.scale, factors, order);
  if (!verify_decomposition(a, dec)) throw InternalError("pairwise decomposition does not reproduce the matrix");
  return dec;
}

CpDecomposition djl_decompose(const Matrix& a) {
  const auto& alg = a.algebra();
  if (!alg.flags().totally_ordered || !alg.flags().normal) {
    throw UsageError("djl_decompose needs a totally ordered normal incline; " + alg.name() + " is not");
  }
  require_cp(a, "djl_decompose");
  const auto red = detail::strip_zero_diagonal(a);
  const auto norm = normalize(red.sub);
  DjlBuilder builder(norm.core);
  builder.run();
  auto factors = builder.take_factors();
  auto order = builder.take_order();
  auto dec = lift(a, red, norm.scale, factors, order);
  if (!verify_decomposition(a, dec)) throw InternalError("support-3 decomposition does not reproduce the matrix");
  return dec;
}

std::size_t cp_rank_upper_bound(std::size_t n) { return std::max(n, n * n / 4); }

bool verify_decomposition(const Matrix& a, const CpDecomposition& dec) {
  if (dec.algebra != a.algebra()) {
    throw UsageError("decomposition is over " + dec.algebra.name() + " but the matrix is over " + a.algebra().name());
  }
  const auto& alg = a.algebra();
  if (!a.is_square() || dec.n != a.rows()) return false;
  if (dec.supports.size() != dec.factors.size()) return false;
  for (std::size_t k = 0; k < dec.factors.size(); ++k) {
    const auto& f = dec.factors[k];
    if (f.size() != dec.n) return false;
    if (!std::all_of(f.begin(), f.end(), [&](const Value& v) { return alg.contains(v); })) return false;
    if (dec.supports[k] != support_of(alg, f)) return false;
  }
  if (!dec.permutation.empty()) {
    auto sorted = dec.permutation;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i) return false;
    }
    if (sorted.size() != dec.n) return false;
  }
  return gram(dec.as_matrix()) == a;
}

}  // namespace incline
