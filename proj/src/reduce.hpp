#pragma once

#include <cstddef>
#include <vector>

#include "incline/matrix.hpp"

namespace incline::detail {

// The principal submatrix on indices with a non-zero diagonal. A CP matrix
// with a_ii = 0 has a zero row i, so nothing is lost by dropping it.
struct Reduced {
  std::vector<std::size_t> kept;
  Matrix sub;
};

// Throws InternalError if a zero-diagonal row carries a non-zero entry; call
// only after the CP test passed.
Reduced strip_zero_diagonal(const Matrix& a);

}  // namespace incline::detail
