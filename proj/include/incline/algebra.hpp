#pragma once

// Incline algebras: idempotent-addition semirings where x + (x * y) = x.
//
// Six carriers are built in:
//   boolean   {0, 1} with or / and
//   maxmin    rationals in [0, 1] with max / min
//   maxplus   rationals in [-inf, 0] with max / +
//   maxtimes  values (1/2)^t stored by their exponent t >= 0, plus zero
//   chain     the k-element chain {0, 1/(k-1), ..., 1} with max / min
//   lattice   a finite distributive lattice given by join / meet tables
//
// Everything is exact. Values and algebras are immutable once built.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace incline {

using Rational = mpq_class;

enum class Kind : std::uint8_t { boolean, maxmin, maxplus, maxtimes, chain, lattice };

std::string_view kind_name(Kind kind);

// One element of a carrier. The payload meaning depends on the kind:
//   boolean / chain / lattice  -> index()
//   maxmin / maxplus           -> rational()
//   maxtimes                   -> rational() is the exponent t of (1/2)^t
// is_bottom() marks -inf in maxplus and the zero of maxtimes.
class Value {
 public:
  Value() = default;

  static Value boolean(bool bit);
  static Value maxmin(Rational q);
  static Value maxplus(Rational q);
  static Value maxplus_bottom();
  static Value maxtimes_exponent(Rational t);
  static Value maxtimes_zero();
  static Value chain(std::uint32_t index);
  static Value lattice(std::uint32_t node);

  Kind kind() const { return kind_; }
  bool is_bottom() const { return bottom_; }
  std::uint32_t index() const { return index_; }
  const Rational& rational() const { return q_; }

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

  // Storage order, used for sets and deterministic listings. It is not the
  // incline order; use Algebra::leq for that.
  friend bool operator<(const Value& a, const Value& b);

 private:
  Kind kind_ = Kind::boolean;
  bool bottom_ = false;
  std::uint32_t index_ = 0;
  Rational q_{0};
};

struct Flags {
  bool totally_ordered = false;
  bool regular = false;
  bool normal = false;
};

// Join/meet tables of a finite lattice, indexed by node id.
struct LatticeTables {
  std::vector<std::string> names;
  std::vector<std::vector<std::uint32_t>> join;
  std::vector<std::vector<std::uint32_t>> meet;
  std::uint32_t bottom = 0;
  std::uint32_t top = 0;

  bool operator==(const LatticeTables&) const = default;
};

class Algebra {
 public:
  static Algebra boolean();
  static Algebra maxmin();
  static Algebra maxplus();
  static Algebra maxtimes();
  static Algebra chain(std::size_t size);

  // Validates the tables: square and sized to `names`, a lattice (idempotent,
  // commutative, associative, absorptive), distributive, bounded. Throws
  // UsageError naming the first failing law and a witness triple.
  static Algebra lattice(std::vector<std::string> names,
                         std::vector<std::vector<std::uint32_t>> join,
                         std::vector<std::vector<std::uint32_t>> meet);

  // Same, but only shape and bounds are checked. Meant for law-checking
  // deliberately broken tables.
  static Algebra lattice_unchecked(std::vector<std::string> names,
                                   std::vector<std::vector<std::uint32_t>> join,
                                   std::vector<std::vector<std::uint32_t>> meet);

  // The lattice of positive divisors of n under lcm / gcd.
  static Algebra divisor_lattice(std::uint32_t n);

  Kind kind() const { return kind_; }
  const Flags& flags() const { return flags_; }
  std::size_t chain_size() const { return chain_size_; }
  const LatticeTables* lattice_tables() const { return lattice_.get(); }
  std::string name() const;

  Value zero() const;
  Value one() const;

  bool contains(const Value& x) const;

  Value add(const Value& x, const Value& y) const;
  Value mul(const Value& x, const Value& y) const;
  Value square(const Value& x) const { return mul(x, x); }
  bool leq(const Value& x, const Value& y) const;
  bool geq(const Value& x, const Value& y) const { return leq(y, x); }
  bool is_zero(const Value& x) const { return x == zero(); }

  // The unique c with c * c = x.
  Value sqrt(const Value& x) const;

  // Some z with y * z = x, for x <= y. Canonical choices:
  //   maxmin / chain / lattice: z = x
  //   maxplus:  z = x - y (z = 1 when y = -inf)
  //   maxtimes: exponent difference (z = 1 when y = 0)
  //   boolean:  z = x when y = 1, z = 1 when y = 0
  // Throws DomainError when x is not below y.
  Value residual(const Value& x, const Value& y) const;

  bool is_finite() const;
  // All elements in storage order; finite carriers only.
  std::vector<Value> elements() const;

  // Draws a value. Rationals have numerator and denominator bounded by
  // max_denominator; finite carriers draw uniformly.
  Value sample(std::mt19937_64& rng, std::uint32_t max_denominator = 1000) const;

  // Literal syntax: boolean "0"/"1"; maxmin and chain "p/q" (or a decimal);
  // maxplus "p/q" <= 0 or "-inf"; maxtimes "pow:p/q" or "0"; lattice
  // element names.
  Value parse(std::string_view literal) const;
  std::string format(const Value& x) const;

  friend bool operator==(const Algebra& a, const Algebra& b);
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

 private:
  Algebra(Kind kind, Flags flags) : kind_(kind), flags_(flags) {}

  void require_member(const Value& x) const;

  Kind kind_;
  Flags flags_;
  std::size_t chain_size_ = 0;
  std::shared_ptr<const LatticeTables> lattice_;
};

// Exact rational parsing: "p", "p/q", "-p/q", or a finite decimal "0.25".
bool parse_rational(std::string_view text, Rational& out);
std::string format_rational(const Rational& q);

}  // namespace incline
