#include "incline/laws.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "incline/errors.hpp"

namespace incline {

bool LawReport::all_passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.passed; });
}

const LawResult* LawReport::find(std::string_view law) const {
  for (const auto& r : laws) {
    if (r.law == law) return &r;
  }
  return nullptr;
}

namespace {

using Check = std::function<bool(const Algebra&, const Value&, const Value&, const Value&)>;

struct Law {
  std::string name;
  Check holds;
};

std::vector<Law> law_table(const Algebra& alg) {
  std::vector<Law> laws = {
      {"oplus-idempotent", [](const Algebra& a, const Value& x, const Value&, const Value&) {
         return a.add(x, x) == x;
       }},
      {"oplus-commutative", [](const Algebra& a, const Value& x, const Value& y, const Value&) {
         return a.add(x, y) == a.add(y, x);
       }},
      {"oplus-associative", [](const Algebra& a, const Value& x, const Value& y, const Value& z) {
         return a.add(a.add(x, y), z) == a.add(x, a.add(y, z));
       }},
      {"otimes-commutative", [](const Algebra& a, const Value& x, const Value& y, const Value&) {
         return a.mul(x, y) == a.mul(y, x);
       }},
      {"otimes-associative", [](const Algebra& a, const Value& x, const Value& y, const Value& z) {
         return a.mul(a.mul(x, y), z) == a.mul(x, a.mul(y, z));
       }},
      {"distributive", [](const Algebra& a, const Value& x, const Value& y, const Value& z) {
         return a.mul(x, a.add(y, z)) == a.add(a.mul(x, y), a.mul(x, z));
       }},
      {"absorption", [](const Algebra& a, const Value& x, const Value& y, const Value&) {
         return a.add(x, a.mul(x, y)) == x;
       }},
      {"zero-identity", [](const Algebra& a, const Value& x, const Value&, const Value&) {
         return a.add(a.zero(), x) == x && a.mul(a.zero(), x) == a.zero();
       }},
      {"one-identity", [](const Algebra& a, const Value& x, const Value&, const Value&) {
         return a.mul(a.one(), x) == x && a.add(a.one(), x) == a.one();
       }},
      {"partial-order", [](const Algebra& a, const Value& x, const Value& y, const Value& z) {
         if (a.leq(x, y) && a.leq(y, x) && x != y) return false;
         if (a.leq(x, y) && a.leq(y, z) && !a.leq(x, z)) return false;
         return true;
       }},
      {"product-below", [](const Algebra& a, const Value& x, const Value& y, const Value&) {
         const Value p = a.mul(x, y);
         return a.leq(p, x) && a.leq(p, y);
       }},
      {"sqrt-square", [](const Algebra& a, const Value& x, const Value&, const Value&) {
         return a.square(a.sqrt(x)) == x;
       }},
      {"sqrt-unique", [](const Algebra& a, const Value& x, const Value&, const Value&) {
         // x is a square root of x*x, so it must be the square root
         return a.sqrt(a.square(x)) == x;
       }},
      {"sqrt-multiplicative", [](const Algebra& a, const Value& x, const Value& y, const Value&) {
         return a.sqrt(a.mul(x, y)) == a.mul(a.sqrt(x), a.sqrt(y));
       }},
      {"sqrt-monotone", [](const Algebra& a, const Value& x, const Value& y, const Value&) {
         // x*y <= x always, so this pair is comparable even in a lattice
         if (!a.leq(a.sqrt(a.mul(x, y)), a.sqrt(x))) return false;
         return !a.leq(x, y) || a.leq(a.sqrt(x), a.sqrt(y));
       }},
      {"residual-contract", [](const Algebra& a, const Value& x, const Value& y, const Value&) {
         const Value below = a.mul(x, y);
         const Value z = a.residual(below, y);
         if (!a.contains(z) || a.mul(y, z) != below) return false;
         if (a.leq(x, y)) {
           const Value w = a.residual(x, y);
           return a.contains(w) && a.mul(y, w) == x;
         }
         return true;
       }},
      {"ag-property", [](const Algebra& a, const Value& x, const Value& y, const Value&) {
         return a.leq(a.mul(x, y), a.add(a.square(x), a.square(y)));
       }},
      {"sum-of-squares", [](const Algebra& a, const Value& x, const Value& y, const Value& z) {
         const Value lhs = a.square(a.add(a.add(x, y), z));
         const Value rhs = a.add(a.add(a.square(x), a.square(y)), a.square(z));
         return lhs == rhs;
       }},
  };
  if (alg.flags().regular) {
    laws.push_back({"regular-idempotent", [](const Algebra& a, const Value& x, const Value&, const Value&) {
                      return a.mul(x, x) == x;
                    }});
  }
  if (alg.flags().totally_ordered) {
    laws.push_back({"total-order", [](const Algebra& a, const Value& x, const Value& y, const Value&) {
                      return a.leq(x, y) || a.leq(y, x);
                    }});
  }
  return laws;
}

void record(const Algebra& alg, const std::vector<Law>& laws, std::vector<LawResult>& results, const Value& x,
            const Value& y, const Value& z) {
  for (std::size_t i = 0; i < laws.size(); ++i) {
    auto& r = results[i];
    ++r.cases;
    if (!r.passed) continue;
    bool ok = false;
    try {
      ok = laws[i].holds(alg, x, y, z);
    } catch (const DomainError&) {
      // a residual refusing a pair the order says is comparable
      ok = false;
    }
    if (!ok) {
      r.passed = false;
      r.counterexample = {x, y, z};
    }
  }
}

}  // namespace

LawReport check_axioms(const Algebra& alg, LawMode mode, std::uint64_t samples, std::uint64_t seed) {
  if (mode == LawMode::exhaustive && !alg.is_finite()) {
    throw UsageError("exhaustive law checking needs a finite carrier; " + alg.name() + " is infinite");
  }
  const auto laws = law_table(alg);
  LawReport report;
  report.algebra = alg.name();
  report.mode = mode;
  std::vector<LawResult> results(laws.size());
  for (std::size_t i = 0; i < laws.size(); ++i) results[i].law = laws[i].name;

  if (mode == LawMode::exhaustive) {
    const auto all = alg.elements();
    for (const auto& x : all) {
      for (const auto& y : all) {
        for (const auto& z : all) {
          record(alg, laws, results, x, y, z);
          ++report.tuples;
        }
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
      // odd draws use tiny denominators so ties and equal pairs show up
      const std::uint32_t den = (s % 2 == 0) ? 1000 : 4;
      const Value x = alg.sample(rng, den);
      const Value y = alg.sample(rng, den);
      const Value z = alg.sample(rng, den);
      record(alg, laws, results, x, y, z);
      ++report.tuples;
    }
  }
  report.laws = std::move(results);
  return report;
}

}  // namespace incline
