#include <doctest.h>

#include "incline/errors.hpp"
#include "incline/laws.hpp"

using namespace incline;

TEST_CASE("finite carriers pass exhaustively") {
  for (const auto& alg : {Algebra::boolean(), Algebra::chain(3), Algebra::chain(5), Algebra::divisor_lattice(30),
                          Algebra::divisor_lattice(12)}) {
    CAPTURE(alg.name());
    const auto r = check_axioms(alg, LawMode::exhaustive);
    CHECK(r.all_passed());
    const auto k = alg.elements().size();
    CHECK(r.tuples == k * k * k);
  }
}

TEST_CASE("infinite carriers pass sampled") {
  for (const auto& alg : {Algebra::maxmin(), Algebra::maxplus(), Algebra::maxtimes()}) {
    CAPTURE(alg.name());
    const auto r = check_axioms(alg, LawMode::sampled, 3000, 11);
    CHECK(r.all_passed());
    for (const char* law : {"sqrt-multiplicative", "sqrt-monotone", "residual-contract", "ag-property",
                            "sum-of-squares"}) {
      REQUIRE(r.find(law) != nullptr);
      CHECK(r.find(law)->passed);
    }
  }
}

TEST_CASE("regularity is only checked when flagged") {
  CHECK(check_axioms(Algebra::boolean(), LawMode::exhaustive).find("regular-idempotent") != nullptr);
  CHECK(check_axioms(Algebra::maxplus(), LawMode::sampled, 100, 1).find("regular-idempotent") == nullptr);
}

TEST_CASE("exhaustive on an infinite carrier is refused") {
  CHECK_THROWS_AS(check_axioms(Algebra::maxmin(), LawMode::exhaustive), UsageError);
}

TEST_CASE("a corrupted meet entry is caught with a witness") {
  auto base = Algebra::divisor_lattice(30);
  const auto* t = base.lattice_tables();
  auto meet = t->meet;
  // meet(6, 10) should be 2; make it 1
  const auto idx = [&](const char* n) {
    for (std::uint32_t i = 0; i < t->names.size(); ++i) {
      if (t->names[i] == n) return i;
    }
    return 0u;
  };
  meet[idx("6")][idx("10")] = idx("1");
  meet[idx("10")][idx("6")] = idx("1");
  const auto broken = Algebra::lattice_unchecked(t->names, t->join, meet);
  const auto r = check_axioms(broken, LawMode::exhaustive);
  CHECK_FALSE(r.all_passed());
  const auto* dist = r.find("distributive");
  REQUIRE(dist != nullptr);
  CHECK_FALSE(dist->passed);
  REQUIRE(dist->counterexample.size() == 3);
  const auto& [x, y, z] = std::tie(dist->counterexample[0], dist->counterexample[1], dist->counterexample[2]);
  CHECK(broken.mul(x, broken.add(y, z)) != broken.add(broken.mul(x, y), broken.mul(x, z)));
}

TEST_CASE("sampled reports are deterministic per seed") {
  const auto a = check_axioms(Algebra::maxplus(), LawMode::sampled, 500, 3);
  const auto b = check_axioms(Algebra::maxplus(), LawMode::sampled, 500, 3);
  REQUIRE(a.laws.size() == b.laws.size());
  for (std::size_t i = 0; i < a.laws.size(); ++i) {
    CHECK(a.laws[i].law == b.laws[i].law);
    CHECK(a.laws[i].cases == b.laws[i].cases);
  }
}
