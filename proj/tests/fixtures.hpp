#pragma once

// Matrices shared by several test files.

#include <random>

#include "incline/matrix.hpp"

namespace fixtures {

using incline::Algebra;
using incline::Matrix;

// UL-factorable although a left almost principal block fails
inline Matrix paper_a4() {
  return Matrix::parse(Algebra::maxmin(), {{"1", "0.25", "0.5", "0"},
                                           {"0.25", "0.75", "0.5", "0"},
                                           {"0.5", "0.5", "0.75", "0"},
                                           {"0", "0", "0", "0"}});
}

inline Matrix paper_u4() {
  return Matrix::parse(Algebra::maxmin(), {{"0", "1", "0", "0.5"},
                                           {"0", "0.25", "0.75", "0"},
                                           {"0", "0", "0.5", "0.75"},
                                           {"0", "0", "0", "0"}});
}

// LU-factorable, no upper triangular factor
inline Matrix paper_a3() {
  return Matrix::parse(Algebra::maxmin(), {{"0.75", "0", "0.25"}, {"0", "0.5", "0.5"}, {"0.25", "0.5", "1"}});
}

inline Matrix max_plus_rank_one() { return Matrix::parse(Algebra::maxplus(), {{"-4", "-5"}, {"-5", "-6"}}); }

// B B^T for a random n x k B: completely positive by construction
inline Matrix random_cp(const Algebra& alg, std::size_t n, std::size_t k, std::mt19937_64& rng,
                        std::uint32_t den = 12) {
  Matrix b(alg, n, k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) b.set(i, j, alg.sample(rng, den));
  }
  return incline::gram(b);
}

// symmetric with random entries; CP or not
inline Matrix random_symmetric(const Algebra& alg, std::size_t n, std::mt19937_64& rng, std::uint32_t den = 12) {
  Matrix a(alg, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto v = alg.sample(rng, den);
      a.set(i, j, v);
      a.set(j, i, v);
    }
  }
  return a;
}

// every symmetric n x n matrix over a finite carrier, in odometer order
template <class F>
void for_each_symmetric(const Algebra& alg, std::size_t n, F&& f) {
  const auto elems = alg.elements();
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  }
  std::vector<std::size_t> digit(cells.size(), 0);
  while (true) {
    Matrix a(alg, n, n);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      a.set(cells[c].first, cells[c].second, elems[digit[c]]);
      a.set(cells[c].second, cells[c].first, elems[digit[c]]);
    }
    f(a);
    std::size_t c = 0;
    while (c < digit.size() && ++digit[c] == elems.size()) digit[c++] = 0;
    if (c == digit.size()) return;
  }
}

}  // namespace fixtures
