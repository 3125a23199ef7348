#pragma once

// Brute-force ground truth over finite carrier sets. Nothing in here relies
// on the CP theorems; it enumerates factor columns directly.
//
// Column pruning used by both searches:
//   * a column b is admissible for A iff b_i * b_j <= a_ij for all i, j;
//     any factor of A consists of admissible columns only.
//   * among admissible columns only those whose outer product is maximal
//     need to be tried: swapping a column for one that dominates it keeps
//     the sum below A and can only raise it.
//   * a branch is cut when the join of everything it can still add cannot
//     reach A.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "incline/algebra.hpp"
#include "incline/cp.hpp"
#include "incline/errors.hpp"
#include "incline/factorization.hpp"
#include "incline/matrix.hpp"

namespace incline {

struct SubinclineOptions {
  std::size_t depth = 1;       // closure rounds for infinite carriers
  std::size_t max_size = 512;  // stop growing past this many elements
};

struct Subincline {
  std::vector<Value> elements;  // storage order
  bool truncated = false;       // closure stopped before reaching a fixed point
};

// Smallest set containing `values`, 0 and 1 that is closed under +, *, sqrt
// and residual. Idempotent carriers always close; maxplus / maxtimes are
// iterated `depth` rounds and flagged truncated if still growing.
Subincline generated_subincline(const Algebra& alg, const std::vector<Value>& values, SubinclineOptions opts = {});

// Entries of A closed as above.
Subincline matrix_subincline(const Matrix& a, SubinclineOptions opts = {});

struct SearchOptions {
  std::size_t max_width = 8;
  std::uint64_t node_budget = 20'000'000;
  std::size_t max_carrier = 64;
  std::size_t max_side = 6;
};

struct SearchTranscript {
  std::vector<Value> carrier;
  bool carrier_truncated = false;
  std::vector<std::size_t> widths_tried;
  std::size_t candidate_columns = 0;
  // join of all admissible outer products equals A, i.e. some factorization
  // of unbounded width exists over the carrier
  bool any_width_feasible = false;
  bool found = false;
  std::optional<Matrix> witness;  // B with B B^T = A (or the triangular factor)
  std::uint64_t nodes_explored = 0;
};

// Carries the transcript gathered before the budget ran out.
class SearchBudgetExceeded : public ResourceError {
 public:
  SearchBudgetExceeded(const std::string& what, SearchTranscript partial)
      : ResourceError(what), partial_(std::move(partial)) {}
  const SearchTranscript& partial() const { return partial_; }

 private:
  SearchTranscript partial_;
};

struct CpRankSearch {
  std::optional<std::size_t> rank;
  SearchTranscript transcript;
};

// Smallest k <= max_width with B (n x k, entries in `carrier`) and
// B B^T = A. Widths are tried in increasing order and columns are chosen in
// canonical increasing order. Throws SearchBudgetExceeded past the node
// budget and ResourceError when the side or carrier exceeds its cap.
CpRankSearch brute_force_cp_rank(const Matrix& a, const std::vector<Value>& carrier, SearchOptions opts = {});
// Searches over the algebra's elements when finite, else over the
// generated subincline of A's entries (sound but possibly incomplete).
CpRankSearch brute_force_cp_rank(const Matrix& a, SearchOptions opts = {}, SubinclineOptions sub = {});

struct TriangularSearch {
  bool exists = false;
  SearchTranscript transcript;
};

// Decides whether a triangular factor in the given mode exists with entries
// in `carrier`; the witness is the factor itself.
TriangularSearch brute_force_triangular_exists(const Matrix& a, TriangularMode mode,
                                               const std::vector<Value>& carrier, SearchOptions opts = {});
TriangularSearch brute_force_triangular_exists(const Matrix& a, TriangularMode mode, SearchOptions opts = {},
                                               SubinclineOptions sub = {});

// Boolean n-cycle with loops: a_ii = 1, a_{i,i+1} = a_{i+1,i} = 1 (mod n).
Matrix djl_tightness_witness(std::size_t n);

}  // namespace incline
