#include "incline/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace incline {

// ---------------------------------------------------------------------------
// Generated subincline

Subincline generated_subincline(const Algebra& alg, const std::vector<Value>& values, SubinclineOptions opts) {
  std::set<Value> closure = {alg.zero(), alg.one()};
  for (const auto& v : values) {
    if (!alg.contains(v)) throw UsageError("generated_subincline: value is not an element of " + alg.name());
    closure.insert(v);
  }
  // regular carriers add nothing new beyond one round, so depth is moot
  const bool bounded = !alg.flags().regular;
  Subincline out;
  for (std::size_t round = 0;; ++round) {
    const std::vector<Value> cur(closure.begin(), closure.end());
    std::set<Value> fresh;
    auto offer = [&](Value v) {
      if (!closure.count(v)) fresh.insert(std::move(v));
    };
    for (std::size_t a = 0; a < cur.size(); ++a) {
      offer(alg.sqrt(cur[a]));
      for (std::size_t b = a; b < cur.size(); ++b) {
        offer(alg.add(cur[a], cur[b]));
        offer(alg.mul(cur[a], cur[b]));
        if (alg.leq(cur[a], cur[b])) offer(alg.residual(cur[a], cur[b]));
        if (alg.leq(cur[b], cur[a])) offer(alg.residual(cur[b], cur[a]));
      }
    }
    if (fresh.empty()) break;
    if (bounded && round >= opts.depth) {
      out.truncated = true;
      break;
    }
    closure.insert(fresh.begin(), fresh.end());
    if (closure.size() > opts.max_size) {
      out.truncated = true;
      break;
    }
  }
  out.elements.assign(closure.begin(), closure.end());
  return out;
}

Subincline matrix_subincline(const Matrix& a, SubinclineOptions opts) {
  std::vector<Value> entries;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) entries.push_back(a(i, j));
  }
  return generated_subincline(a.algebra(), entries, opts);
}

// ---------------------------------------------------------------------------
// Column search

namespace {

// Upper triangle (diagonal included) of a symmetric n x n matrix.
using Tri = std::vector<Value>;

class ColumnSearch {
 public:
  ColumnSearch(const Matrix& a, std::vector<Value> carrier, const SearchOptions& opts)
      : a_(a), alg_(a.algebra()), n_(a.rows()), opts_(opts) {
    if (!a.is_square()) throw UsageError("brute-force search needs a square matrix");
    if (n_ > opts.max_side) {
      throw ResourceError("brute-force search: side " + std::to_string(n_) + " exceeds the cap " +
                          std::to_string(opts.max_side));
    }
    std::set<Value> unique(carrier.begin(), carrier.end());
    for (const auto& v : unique) {
      if (!alg_.contains(v)) throw UsageError("carrier value is not an element of " + alg_.name());
    }
    unique.insert(alg_.zero());
    carrier_.assign(unique.begin(), unique.end());
    if (carrier_.size() > opts.max_carrier) {
      throw ResourceError("brute-force search: carrier of " + std::to_string(carrier_.size()) +
                          " elements exceeds the cap " + std::to_string(opts.max_carrier));
    }
    transcript_.carrier = carrier_;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) target_.push_back(a(i, j));
    }
  }

  SearchTranscript& transcript() { return transcript_; }
  std::size_t side() const { return n_; }

  void tick() {
    if (++transcript_.nodes_explored > opts_.node_budget) {
      throw SearchBudgetExceeded("brute-force search exceeded its budget of " + std::to_string(opts_.node_budget) +
                                     " nodes",
                                 transcript_);
    }
  }

  Tri zero_tri() const { return Tri(target_.size(), alg_.zero()); }

  Tri join(const Tri& x, const Tri& y) const {
    Tri out(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) out[t] = alg_.add(x[t], y[t]);
    return out;
  }

  bool below(const Tri& x, const Tri& y) const {
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (!alg_.leq(x[t], y[t])) return false;
    }
    return true;
  }

  const Tri& target() const { return target_; }

  Tri outer(const std::vector<Value>& b) const {
    Tri out;
    out.reserve(target_.size());
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) out.push_back(alg_.mul(b[i], b[j]));
    }
    return out;
  }

  struct Column {
    std::vector<Value> entries;
    Tri outer;
  };

  // Maximal admissible non-zero columns whose support lies in `allowed`.
  std::vector<Column> columns(const std::vector<bool>& allowed) {
    std::vector<Column> all;
    std::vector<Value> b(n_, alg_.zero());
    enumerate(0, allowed, b, all);
    std::vector<Column> maximal;
    for (std::size_t c = 0; c < all.size(); ++c) {
      bool dominated = false;
      for (std::size_t d = 0; d < all.size() && !dominated; ++d) {
        if (d == c) continue;
        if (!below(all[c].outer, all[d].outer)) continue;
        // equal outer products: keep the first
        dominated = all[c].outer != all[d].outer || d < c;
      }
      if (!dominated) maximal.push_back(all[c]);
    }
    return maximal;
  }

 private:
  void enumerate(std::size_t i, const std::vector<bool>& allowed, std::vector<Value>& b, std::vector<Column>& out) {
    tick();
    if (i == n_) {
      if (std::any_of(b.begin(), b.end(), [&](const Value& v) { return !alg_.is_zero(v); })) {
        out.push_back({b, outer(b)});
      }
      return;
    }
    if (!allowed[i]) {
      b[i] = alg_.zero();
      enumerate(i + 1, allowed, b, out);
      return;
    }
    for (const auto& v : carrier_) {
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        const Value& bj = j == i ? v : b[j];
        ok = alg_.leq(alg_.mul(v, bj), a_(i, j)) && alg_.leq(alg_.mul(v, bj), a_(j, i));
      }
      if (!ok) continue;
      b[i] = v;
      enumerate(i + 1, allowed, b, out);
    }
    b[i] = alg_.zero();
  }

  const Matrix& a_;
  const Algebra& alg_;
  std::size_t n_;
  SearchOptions opts_;
  std::vector<Value> carrier_;
  Tri target_;
  SearchTranscript transcript_;
};

class RankDfs {
 public:
  RankDfs(ColumnSearch& search, const std::vector<ColumnSearch::Column>& cols) : s_(search), cols_(cols) {
    suffix_.assign(cols.size() + 1, s_.zero_tri());
    for (std::size_t t = cols.size(); t-- > 0;) suffix_[t] = s_.join(suffix_[t + 1], cols[t].outer);
  }

  bool feasible() const { return suffix_[0] == s_.target(); }

  bool run(std::size_t width, std::vector<std::size_t>& chosen) {
    chosen.clear();
    return dfs(0, width, s_.zero_tri(), chosen);
  }

 private:
  bool dfs(std::size_t start, std::size_t remaining, const Tri& acc, std::vector<std::size_t>& chosen) {
    s_.tick();
    if (remaining == 0) return acc == s_.target();
    if (s_.join(acc, suffix_[start]) != s_.target()) return false;
    for (std::size_t c = start; c + remaining <= cols_.size(); ++c) {
      chosen.push_back(c);
      if (dfs(c + 1, remaining - 1, s_.join(acc, cols_[c].outer), chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  ColumnSearch& s_;
  const std::vector<ColumnSearch::Column>& cols_;
  std::vector<Tri> suffix_;
};

}  // namespace

CpRankSearch brute_force_cp_rank(const Matrix& a, const std::vector<Value>& carrier, SearchOptions opts) {
  ColumnSearch search(a, carrier, opts);
  const std::size_t n = search.side();
  CpRankSearch result;
  const auto cols = search.columns(std::vector<bool>(n, true));
  auto& tr = search.transcript();
  tr.candidate_columns = cols.size();
  RankDfs dfs(search, cols);
  tr.any_width_feasible = dfs.feasible();
  if (tr.any_width_feasible) {
    std::vector<std::size_t> chosen;
    const std::size_t limit = std::min(opts.max_width, cols.size());
    for (std::size_t k = 0; k <= limit; ++k) {
      tr.widths_tried.push_back(k);
      if (!dfs.run(k, chosen)) continue;
      Matrix b(a.algebra(), n, k);
      for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i = 0; i < n; ++i) b.set(i, c, cols[chosen[c]].entries[i]);
      }
      tr.found = true;
      tr.witness = std::move(b);
      result.rank = k;
      break;
    }
  }
  result.transcript = std::move(tr);
  return result;
}

CpRankSearch brute_force_cp_rank(const Matrix& a, SearchOptions opts, SubinclineOptions sub) {
  if (a.algebra().is_finite()) return brute_force_cp_rank(a, a.algebra().elements(), opts);
  const auto carrier = matrix_subincline(a, sub);
  auto result = brute_force_cp_rank(a, carrier.elements, opts);
  result.transcript.carrier_truncated = carrier.truncated;
  return result;
}

TriangularSearch brute_force_triangular_exists(const Matrix& a, TriangularMode mode,
                                               const std::vector<Value>& carrier, SearchOptions opts) {
  ColumnSearch search(a, carrier, opts);
  const std::size_t n = search.side();
  const auto& alg = a.algebra();

  // column k of an upper triangular factor lives on rows 0..k, of a lower
  // triangular one on rows k..n-1
  std::vector<std::vector<ColumnSearch::Column>> per_col(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<bool> allowed(n, false);
    for (std::size_t i = 0; i < n; ++i) allowed[i] = mode == TriangularMode::ul ? i <= k : i >= k;
    per_col[k] = search.columns(allowed);
    if (per_col[k].empty()) {
      std::vector<Value> zero(n, alg.zero());
      per_col[k].push_back({zero, search.outer(zero)});
    }
  }
  std::vector<Tri> suffix(n + 1, search.zero_tri());
  for (std::size_t k = n; k-- > 0;) {
    suffix[k] = suffix[k + 1];
    for (const auto& c : per_col[k]) suffix[k] = search.join(suffix[k], c.outer);
  }

  auto& tr = search.transcript();
  for (const auto& pc : per_col) tr.candidate_columns += pc.size();
  tr.widths_tried = {n};
  tr.any_width_feasible = suffix[0] == search.target();

  std::vector<std::size_t> chosen;
  auto dfs = [&](auto& self, std::size_t k, const Tri& acc) -> bool {
    search.tick();
    if (k == n) return acc == search.target();
    if (search.join(acc, suffix[k]) != search.target()) return false;
    for (std::size_t c = 0; c < per_col[k].size(); ++c) {
      chosen.push_back(c);
      if (self(self, k + 1, search.join(acc, per_col[k][c].outer))) return true;
      chosen.pop_back();
    }
    return false;
  };

  TriangularSearch result;
  if (tr.any_width_feasible && dfs(dfs, 0, search.zero_tri())) {
    Matrix f(alg, n, n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) f.set(i, k, per_col[k][chosen[k]].entries[i]);
    }
    tr.found = true;
    tr.witness = std::move(f);
    result.exists = true;
  }
  result.transcript = std::move(tr);
  return result;
}

TriangularSearch brute_force_triangular_exists(const Matrix& a, TriangularMode mode, SearchOptions opts,
                                               SubinclineOptions sub) {
  if (a.algebra().is_finite()) return brute_force_triangular_exists(a, mode, a.algebra().elements(), opts);
  const auto carrier = matrix_subincline(a, sub);
  auto result = brute_force_triangular_exists(a, mode, carrier.elements, opts);
  result.transcript.carrier_truncated = carrier.truncated;
  return result;
}

Matrix djl_tightness_witness(std::size_t n) {
  if (n < 4) throw UsageError("djl_tightness_witness needs n >= 4");
  const auto alg = Algebra::boolean();
  Matrix m(alg, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = (i + 1) % n;
    m.set(i, i, alg.one());
    m.set(i, next, alg.one());
    m.set(next, i, alg.one());
  }
  return m;
}

}  // namespace incline
