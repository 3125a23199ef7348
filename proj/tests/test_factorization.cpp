#include <doctest.h>

#include <random>

#include "incline/cp.hpp"
#include "incline/errors.hpp"
#include "incline/factorization.hpp"
#include "fixtures.hpp"

using namespace incline;

namespace {

Matrix reversed(const Matrix& a) {
  std::vector<std::size_t> order(a.rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
  return a.permuted(order);
}

}  // namespace

TEST_CASE("ul_factor on a unit-diagonal matrix") {
  const auto mm = Algebra::maxmin();
  const auto a = Matrix::parse(mm, {{"1", "0.3", "0.2"}, {"0.3", "1", "0.4"}, {"0.2", "0.4", "1"}});
  const auto r = ul_factor(a);
  REQUIRE(r.ok());
  CHECK(r.certificate->mode == TriangularMode::ul);
  CHECK(r.certificate->factor == Matrix::parse(mm, {{"1", "0.3", "0.2"}, {"0", "1", "0.4"}, {"0", "0", "1"}}));
  CHECK(verify_triangular(a, *r.certificate));

  const auto lu = lu_factor(reversed(a));
  REQUIRE(lu.ok());
  CHECK(verify_triangular(reversed(a), *lu.certificate));
}

TEST_CASE("diagonal matrices factor as sqrt of the diagonal") {
  const auto mp = Algebra::maxplus();
  const auto a = Matrix::parse(mp, {{"-4", "-inf"}, {"-inf", "-1"}});
  const auto expect = Matrix::parse(mp, {{"-2", "-inf"}, {"-inf", "-1/2"}});
  CHECK(ul_factor(a).certificate->factor == expect);
  CHECK(lu_factor(a).certificate->factor == expect);
}

TEST_CASE("2x2 CP matrices factor both ways") {
  std::mt19937_64 rng(6);
  for (const auto& alg : {Algebra::maxmin(), Algebra::maxplus(), Algebra::maxtimes()}) {
    for (int t = 0; t < 30; ++t) {
      const auto a = fixtures::random_cp(alg, 2, 2, rng);
      CHECK(ul_factor(a).ok());
      CHECK(lu_factor(a).ok());
    }
  }
}

TEST_CASE("the 3x3 example is LU but refused as UL") {
  const auto a = fixtures::paper_a3();
  const auto lu = lu_factor(a);
  REQUIRE(lu.ok());
  CHECK(verify_triangular(a, *lu.certificate));
  const auto ul = ul_factor(a);
  CHECK_FALSE(ul.ok());
  CHECK_FALSE(ul.violations.empty());

  const auto d = factor_3x3(a);
  CHECK(d.certificate.mode == TriangularMode::lu);
  CHECK(d.inequalities[0]);
  CHECK(verify_triangular(a, d.certificate));
}

TEST_CASE("the 4x4 example: printed U verifies while ul_factor refuses") {
  const auto a = fixtures::paper_a4();
  const auto u = fixtures::paper_u4();
  CHECK(verify_triangular(a, {TriangularMode::ul, u}));
  CHECK_FALSE(verify_triangular(a, {TriangularMode::lu, u}));
  auto broken = u;
  broken.set(0, 1, a.algebra().zero());
  CHECK_FALSE(verify_triangular(a, {TriangularMode::ul, broken}));

  const auto r = ul_factor(a);
  CHECK_FALSE(r.ok());
  bool found = false;
  for (const auto& ap : r.violations) found = found || (ap.rows == IndexSet{1, 2} && ap.cols == IndexSet{0, 2});
  CHECK(found);

  const auto t = tn2_both(a);
  CHECK_FALSE(t.ok());
  CHECK_FALSE(t.tn2.holds);
}

TEST_CASE("factor_3x3 prefers LU and handles zero diagonals") {
  const auto mm = Algebra::maxmin();
  Matrix flat(mm, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) flat.set(i, j, mm.parse("2/3"));
  }
  const auto d = factor_3x3(flat);
  CHECK(d.certificate.mode == TriangularMode::lu);
  CHECK(d.inequalities == std::array<bool, 3>{true, true, true});
  CHECK(ul_factor(flat).ok());

  const auto z = Matrix::parse(mm, {{"0.5", "0", "0.25"}, {"0", "0", "0"}, {"0.25", "0", "1"}});
  CHECK(verify_triangular(z, factor_3x3(z).certificate));
  CHECK(ul_factor(z).ok());
  CHECK(lu_factor(z).ok());

  CHECK_THROWS_AS(factor_3x3(Matrix(mm, 2, 2)), UsageError);
  const auto d30 = Algebra::divisor_lattice(30);
  CHECK_THROWS_AS(factor_3x3(Matrix::identity(d30, 3)), UsageError);
  CHECK_THROWS_AS(factor_3x3(Matrix::parse(mm, {{"0.5", "0.8", "0"}, {"0.8", "1", "0"}, {"0", "0", "1"}})),
                  DomainError);
}

TEST_CASE("3x3 dichotomy on random matrices") {
  std::mt19937_64 rng(41);
  for (const auto& alg : {Algebra::maxmin(), Algebra::maxplus(), Algebra::maxtimes(), Algebra::chain(4)}) {
    CAPTURE(alg.name());
    for (int t = 0; t < 150; ++t) {
      const auto a = fixtures::random_cp(alg, 3, 1 + t % 4, rng);
      const auto d = factor_3x3(a);
      CHECK(d.inequalities[0] + d.inequalities[1] + d.inequalities[2] >= 2);
      CHECK(verify_triangular(a, d.certificate));
      CHECK((lu_factor(a).ok() || ul_factor(a).ok()));
    }
  }
}

TEST_CASE("almost principal conditions imply the factorization") {
  std::mt19937_64 rng(19);
  int ul_seen = 0, lu_seen = 0;
  for (const auto& alg : {Algebra::maxmin(), Algebra::maxplus(), Algebra::maxtimes()}) {
    for (int t = 0; t < 200; ++t) {
      const auto a = fixtures::random_cp(alg, 3 + t % 4, 1 + t % 3, rng);
      if (almost_principal_violations(a, Side::left).empty()) {
        ++ul_seen;
        const auto r = ul_factor(a);
        REQUIRE(r.ok());
        CHECK(verify_triangular(a, *r.certificate));
      }
      if (almost_principal_violations(a, Side::right).empty()) {
        ++lu_seen;
        const auto r = lu_factor(a);
        REQUIRE(r.ok());
        CHECK(verify_triangular(a, *r.certificate));
      }
    }
  }
  CHECK(ul_seen > 20);
  CHECK(lu_seen > 20);
}

TEST_CASE("reversal swaps left and right") {
  std::mt19937_64 rng(53);
  const auto mm = Algebra::maxmin();
  for (int t = 0; t < 200; ++t) {
    const auto a = fixtures::random_cp(mm, 4, 2 + t % 3, rng, 6);
    const auto ra = reversed(a);
    CHECK(almost_principal_violations(a, Side::left).empty() == almost_principal_violations(ra, Side::right).empty());
    CHECK(ul_factor(a).ok() == lu_factor(ra).ok());
  }
}

TEST_CASE("tn2_both") {
  const auto mm = Algebra::maxmin();
  Matrix ones(mm, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) ones.set(i, j, mm.one());
  }
  CHECK(tn2_both(ones).ok());

  const auto a = Matrix::parse(mm, {{"1", "0.5", "0.2"}, {"0.5", "0.5", "0.2"}, {"0.2", "0.2", "0.2"}});
  const auto r = tn2_both(a);
  REQUIRE(r.ok());
  CHECK(r.certificates->first.mode == TriangularMode::lu);
  CHECK(verify_triangular(a, r.certificates->first));
  CHECK(verify_triangular(a, r.certificates->second));
  CHECK_THROWS_AS(tn2_both(Matrix::parse(mm, {{"1", "0.5"}, {"0.25", "1"}})), DomainError);
}

TEST_CASE("verify_triangular rejects mismatches") {
  const auto a = fixtures::paper_a3();
  const auto cert = lu_factor(a).certificate;
  CHECK_THROWS_AS(verify_triangular(Matrix::identity(Algebra::maxplus(), 3), *cert), UsageError);
  CHECK_FALSE(verify_triangular(Matrix::identity(Algebra::maxmin(), 2), *cert));
}
