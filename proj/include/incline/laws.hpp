#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "incline/algebra.hpp"

namespace incline {

enum class LawMode { exhaustive, sampled };

struct LawResult {
  std::string law;
  bool passed = true;
  std::uint64_t cases = 0;
  // (x, y, z) of the first failing tuple; empty when the law passed
  std::vector<Value> counterexample;
};

struct LawReport {
  std::string algebra;
  LawMode mode = LawMode::exhaustive;
  std::uint64_t tuples = 0;
  std::vector<LawResult> laws;

  bool all_passed() const;
  const LawResult* find(std::string_view law) const;
};

// Checks the incline axioms plus the properties the matrix theorems lean on:
// identities, order, product shrinking, unique multiplicative monotone square
// roots, the residual contract, the AG inequality and (x+y+z)^2 =
// x^2+y^2+z^2. Regularity and totality are checked when the algebra is
// flagged with them.
//
// Exhaustive mode walks every triple of a finite carrier and throws
// UsageError on an infinite one. Sampled mode draws `samples` triples from a
// generator seeded with `seed`.
LawReport check_axioms(const Algebra& alg, LawMode mode, std::uint64_t samples = 10000, std::uint64_t seed = 0);

}  // namespace incline
