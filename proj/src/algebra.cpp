#include "incline/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <tuple>

#include "incline/errors.hpp"

namespace incline {

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::boolean:
      return "boolean";
    case Kind::maxmin:
      return "maxmin";
    case Kind::maxplus:
      return "maxplus";
    case Kind::maxtimes:
      return "maxtimes";
    case Kind::chain:
      return "chain";
    case Kind::lattice:
      return "lattice";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Value

Value Value::boolean(bool bit) {
  Value v;
  v.kind_ = Kind::boolean;
  v.index_ = bit ? 1 : 0;
  return v;
}

Value Value::maxmin(Rational q) {
  Value v;
  v.kind_ = Kind::maxmin;
  v.q_ = std::move(q);
  v.q_.canonicalize();
  return v;
}

Value Value::maxplus(Rational q) {
  Value v;
  v.kind_ = Kind::maxplus;
  v.q_ = std::move(q);
  v.q_.canonicalize();
  return v;
}

Value Value::maxplus_bottom() {
  Value v;
  v.kind_ = Kind::maxplus;
  v.bottom_ = true;
  return v;
}

Value Value::maxtimes_exponent(Rational t) {
  Value v;
  v.kind_ = Kind::maxtimes;
  v.q_ = std::move(t);
  v.q_.canonicalize();
  return v;
}

Value Value::maxtimes_zero() {
  Value v;
  v.kind_ = Kind::maxtimes;
  v.bottom_ = true;
  return v;
}

Value Value::chain(std::uint32_t index) {
  Value v;
  v.kind_ = Kind::chain;
  v.index_ = index;
  return v;
}

Value Value::lattice(std::uint32_t node) {
  Value v;
  v.kind_ = Kind::lattice;
  v.index_ = node;
  return v;
}

bool operator==(const Value& a, const Value& b) {
  if (a.kind_ != b.kind_ || a.bottom_ != b.bottom_ || a.index_ != b.index_) {
    return false;
  }
  // bottom payloads are always the default rational
  return a.q_ == b.q_;
}

bool operator<(const Value& a, const Value& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (a.bottom_ != b.bottom_) return a.bottom_;
  if (a.index_ != b.index_) return a.index_ < b.index_;
  return a.q_ < b.q_;
}

// ---------------------------------------------------------------------------
// Rational literals

bool parse_rational(std::string_view text, Rational& out) {
  if (text.empty()) return false;
  bool negative = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) return false;
  auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return false;
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) return false;
    value = Rational(n, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) return false;
    mpz_class n(std::string(whole) + std::string(frac), 10);
    mpz_class d = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) d *= 10;
    value = Rational(n, d);
  } else {
    if (!all_digits(body)) return false;
    value = Rational(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  out = negative ? Rational(-value) : value;
  return true;
}

std::string format_rational(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---------------------------------------------------------------------------
// Lattice tables

namespace {

std::string lattice_witness(const LatticeTables& t, std::string_view law, std::uint32_t x, std::uint32_t y,
                            std::uint32_t z) {
  std::ostringstream os;
  os << "lattice tables violate " << law << " at (" << t.names[x] << ", " << t.names[y] << ", " << t.names[z]
     << ")";
  return os.str();
}

// Checks table shape and locates the bounds. Returns tables ready for use.
LatticeTables shape_lattice(std::vector<std::string> names, std::vector<std::vector<std::uint32_t>> join,
                            std::vector<std::vector<std::uint32_t>> meet) {
  const std::size_t k = names.size();
  if (k == 0) throw UsageError("lattice must have at least one element");
  if (join.size() != k || meet.size() != k) throw UsageError("lattice tables must be " + std::to_string(k) + "x" + std::to_string(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (join[i].size() != k || meet[i].size() != k) {
      throw UsageError("lattice table row " + std::to_string(i) + " has the wrong length");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (join[i][j] >= k || meet[i][j] >= k) {
        throw UsageError("lattice table entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is out of range");
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (names[i] == names[j]) throw UsageError("duplicate lattice element name '" + names[i] + "'");
    }
  }

  LatticeTables t{std::move(names), std::move(join), std::move(meet), 0, 0};
  auto find_bound = [&](bool want_bottom) -> std::uint32_t {
    for (std::uint32_t b = 0; b < k; ++b) {
      bool ok = true;
      for (std::uint32_t x = 0; x < k && ok; ++x) ok = t.join[b][x] == (want_bottom ? x : b);
      if (ok) return b;
    }
    throw UsageError(want_bottom ? "lattice has no least element" : "lattice has no greatest element");
  };
  t.bottom = find_bound(true);
  t.top = find_bound(false);
  return t;
}

void validate_lattice(const LatticeTables& t) {
  const auto k = static_cast<std::uint32_t>(t.names.size());
  const auto& J = t.join;
  const auto& M = t.meet;
  for (std::uint32_t x = 0; x < k; ++x) {
    if (J[x][x] != x) throw UsageError(lattice_witness(t, "join idempotence", x, x, x));
    if (M[x][x] != x) throw UsageError(lattice_witness(t, "meet idempotence", x, x, x));
    for (std::uint32_t y = 0; y < k; ++y) {
      if (J[x][y] != J[y][x]) throw UsageError(lattice_witness(t, "join commutativity", x, y, y));
      if (M[x][y] != M[y][x]) throw UsageError(lattice_witness(t, "meet commutativity", x, y, y));
      if (J[x][M[x][y]] != x) throw UsageError(lattice_witness(t, "absorption x+(x*y)=x", x, y, y));
      if (M[x][J[x][y]] != x) throw UsageError(lattice_witness(t, "absorption x*(x+y)=x", x, y, y));
    }
  }
  for (std::uint32_t x = 0; x < k; ++x) {
    for (std::uint32_t y = 0; y < k; ++y) {
      for (std::uint32_t z = 0; z < k; ++z) {
        if (J[J[x][y]][z] != J[x][J[y][z]]) throw UsageError(lattice_witness(t, "join associativity", x, y, z));
        if (M[M[x][y]][z] != M[x][M[y][z]]) throw UsageError(lattice_witness(t, "meet associativity", x, y, z));
        if (M[x][J[y][z]] != J[M[x][y]][M[x][z]]) throw UsageError(lattice_witness(t, "distributivity", x, y, z));
      }
    }
  }
  if (M[t.bottom][t.top] != t.bottom) throw UsageError("lattice bounds are inconsistent with meet");
}

bool lattice_is_chain(const LatticeTables& t) {
  const auto k = static_cast<std::uint32_t>(t.names.size());
  for (std::uint32_t x = 0; x < k; ++x) {
    for (std::uint32_t y = 0; y < k; ++y) {
      if (t.join[x][y] != x && t.join[x][y] != y) return false;
    }
  }
  return true;
}

Rational uniform_rational(std::mt19937_64& rng, std::uint32_t max_den, bool allow_above_one) {
  std::uniform_int_distribution<std::uint32_t> den_dist(1, std::max<std::uint32_t>(1, max_den));
  const std::uint32_t den = den_dist(rng);
  const std::uint32_t num_max = allow_above_one ? std::max<std::uint32_t>(1, max_den) : den;
  std::uniform_int_distribution<std::uint32_t> num_dist(0, num_max);
  Rational q(num_dist(rng), den);
  q.canonicalize();
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// Algebra construction

Algebra Algebra::boolean() { return Algebra(Kind::boolean, {true, true, true}); }
Algebra Algebra::maxmin() { return Algebra(Kind::maxmin, {true, true, true}); }
Algebra Algebra::maxplus() { return Algebra(Kind::maxplus, {true, false, true}); }
Algebra Algebra::maxtimes() { return Algebra(Kind::maxtimes, {true, false, true}); }

Algebra Algebra::chain(std::size_t size) {
  if (size < 2) throw UsageError("chain size must be at least 2");
  if (size > (1u << 30)) throw UsageError("chain size is too large");
  Algebra a(Kind::chain, {true, true, true});
  a.chain_size_ = size;
  return a;
}

Algebra Algebra::lattice(std::vector<std::string> names, std::vector<std::vector<std::uint32_t>> join,
                         std::vector<std::vector<std::uint32_t>> meet) {
  auto tables = shape_lattice(std::move(names), std::move(join), std::move(meet));
  validate_lattice(tables);
  Algebra a(Kind::lattice, {lattice_is_chain(tables), true, true});
  a.lattice_ = std::make_shared<const LatticeTables>(std::move(tables));
  return a;
}

Algebra Algebra::lattice_unchecked(std::vector<std::string> names, std::vector<std::vector<std::uint32_t>> join,
                                   std::vector<std::vector<std::uint32_t>> meet) {
  auto tables = shape_lattice(std::move(names), std::move(join), std::move(meet));
  Algebra a(Kind::lattice, {lattice_is_chain(tables), true, true});
  a.lattice_ = std::make_shared<const LatticeTables>(std::move(tables));
  return a;
}

Algebra Algebra::divisor_lattice(std::uint32_t n) {
  if (n == 0) throw UsageError("divisor lattice needs n >= 1");
  std::vector<std::uint32_t> divisors;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }
  const auto k = divisors.size();
  auto node_of = [&](std::uint32_t d) {
    return static_cast<std::uint32_t>(std::find(divisors.begin(), divisors.end(), d) - divisors.begin());
  };
  std::vector<std::string> names;
  std::vector<std::vector<std::uint32_t>> join(k, std::vector<std::uint32_t>(k));
  std::vector<std::vector<std::uint32_t>> meet(k, std::vector<std::uint32_t>(k));
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(std::to_string(divisors[i]));
    for (std::size_t j = 0; j < k; ++j) {
      join[i][j] = node_of(std::lcm(divisors[i], divisors[j]));
      meet[i][j] = node_of(std::gcd(divisors[i], divisors[j]));
    }
  }
  return lattice(std::move(names), std::move(join), std::move(meet));
}

std::string Algebra::name() const {
  switch (kind_) {
    case Kind::chain:
      return "chain(" + std::to_string(chain_size_) + ")";
    case Kind::lattice:
      return "lattice(" + std::to_string(lattice_->names.size()) + ")";
    default:
      return std::string(kind_name(kind_));
  }
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == Kind::chain) return a.chain_size_ == b.chain_size_;
  if (a.kind_ == Kind::lattice) return a.lattice_ == b.lattice_ || *a.lattice_ == *b.lattice_;
  return true;
}

// ---------------------------------------------------------------------------
// Carrier membership

Value Algebra::zero() const {
  switch (kind_) {
    case Kind::boolean:
      return Value::boolean(false);
    case Kind::maxmin:
      return Value::maxmin(0);
    case Kind::maxplus:
      return Value::maxplus_bottom();
    case Kind::maxtimes:
      return Value::maxtimes_zero();
    case Kind::chain:
      return Value::chain(0);
    case Kind::lattice:
      return Value::lattice(lattice_->bottom);
  }
  return {};
}

Value Algebra::one() const {
  switch (kind_) {
    case Kind::boolean:
      return Value::boolean(true);
    case Kind::maxmin:
      return Value::maxmin(1);
    case Kind::maxplus:
      return Value::maxplus(0);
    case Kind::maxtimes:
      return Value::maxtimes_exponent(0);
    case Kind::chain:
      return Value::chain(static_cast<std::uint32_t>(chain_size_ - 1));
    case Kind::lattice:
      return Value::lattice(lattice_->top);
  }
  return {};
}

bool Algebra::contains(const Value& x) const {
  if (x.kind() != kind_) return false;
  switch (kind_) {
    case Kind::boolean:
      return x.index() <= 1 && !x.is_bottom();
    case Kind::maxmin:
      return !x.is_bottom() && x.rational() >= 0 && x.rational() <= 1;
    case Kind::maxplus:
      return x.is_bottom() || x.rational() <= 0;
    case Kind::maxtimes:
      return x.is_bottom() || x.rational() >= 0;
    case Kind::chain:
      return !x.is_bottom() && x.index() < chain_size_;
    case Kind::lattice:
      return !x.is_bottom() && x.index() < lattice_->names.size();
  }
  return false;
}

void Algebra::require_member(const Value& x) const {
  if (!contains(x)) {
    throw UsageError("value of kind " + std::string(kind_name(x.kind())) + " is not an element of " + name());
  }
}

// ---------------------------------------------------------------------------
// Operations

Value Algebra::add(const Value& x, const Value& y) const {
  require_member(x);
  require_member(y);
  switch (kind_) {
    case Kind::boolean:
      return Value::boolean(x.index() | y.index());
    case Kind::maxmin:
      return x.rational() >= y.rational() ? x : y;
    case Kind::maxplus:
      if (x.is_bottom()) return y;
      if (y.is_bottom()) return x;
      return x.rational() >= y.rational() ? x : y;
    case Kind::maxtimes:
      if (x.is_bottom()) return y;
      if (y.is_bottom()) return x;
      return x.rational() <= y.rational() ? x : y;
    case Kind::chain:
      return x.index() >= y.index() ? x : y;
    case Kind::lattice:
      return Value::lattice(lattice_->join[x.index()][y.index()]);
  }
  return {};
}

Value Algebra::mul(const Value& x, const Value& y) const {
  require_member(x);
  require_member(y);
  switch (kind_) {
    case Kind::boolean:
      return Value::boolean(x.index() & y.index());
    case Kind::maxmin:
      return x.rational() <= y.rational() ? x : y;
    case Kind::maxplus:
      if (x.is_bottom() || y.is_bottom()) return Value::maxplus_bottom();
      return Value::maxplus(x.rational() + y.rational());
    case Kind::maxtimes:
      if (x.is_bottom() || y.is_bottom()) return Value::maxtimes_zero();
      return Value::maxtimes_exponent(x.rational() + y.rational());
    case Kind::chain:
      return x.index() <= y.index() ? x : y;
    case Kind::lattice:
      return Value::lattice(lattice_->meet[x.index()][y.index()]);
  }
  return {};
}

bool Algebra::leq(const Value& x, const Value& y) const { return add(x, y) == y; }

Value Algebra::sqrt(const Value& x) const {
  require_member(x);
  switch (kind_) {
    case Kind::maxplus:
      if (x.is_bottom()) return x;
      return Value::maxplus(x.rational() / 2);
    case Kind::maxtimes:
      if (x.is_bottom()) return x;
      return Value::maxtimes_exponent(x.rational() / 2);
    default:
      // regular carriers: every element is its own square root
      return x;
  }
}

Value Algebra::residual(const Value& x, const Value& y) const {
  if (!leq(x, y)) {
    throw DomainError("residual(" + format(x) + ", " + format(y) + "): first argument is not below the second");
  }
  switch (kind_) {
    case Kind::boolean:
      return y.index() == 1 ? x : one();
    case Kind::maxplus:
      if (y.is_bottom()) return one();
      if (x.is_bottom()) return x;
      return Value::maxplus(x.rational() - y.rational());
    case Kind::maxtimes:
      if (y.is_bottom()) return one();
      if (x.is_bottom()) return x;
      return Value::maxtimes_exponent(x.rational() - y.rational());
    default:
      return x;
  }
}

bool Algebra::is_finite() const {
  return kind_ == Kind::boolean || kind_ == Kind::chain || kind_ == Kind::lattice;
}

std::vector<Value> Algebra::elements() const {
  std::vector<Value> out;
  switch (kind_) {
    case Kind::boolean:
      out = {Value::boolean(false), Value::boolean(true)};
      break;
    case Kind::chain:
      for (std::uint32_t i = 0; i < chain_size_; ++i) out.push_back(Value::chain(i));
      break;
    case Kind::lattice:
      for (std::uint32_t i = 0; i < lattice_->names.size(); ++i) out.push_back(Value::lattice(i));
      break;
    default:
      throw UsageError(name() + " is an infinite carrier");
  }
  return out;
}

Value Algebra::sample(std::mt19937_64& rng, std::uint32_t max_denominator) const {
  if (is_finite()) {
    auto all = elements();
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
  }
  // one draw in twenty lands on an identity to exercise the edge cases
  std::uniform_int_distribution<int> edge(0, 19);
  const int e = edge(rng);
  if (e == 0) return zero();
  if (e == 1) return one();
  switch (kind_) {
    case Kind::maxmin:
      return Value::maxmin(uniform_rational(rng, max_denominator, false));
    case Kind::maxplus:
      return Value::maxplus(-uniform_rational(rng, max_denominator, true));
    case Kind::maxtimes:
      return Value::maxtimes_exponent(uniform_rational(rng, max_denominator, true));
    default:
      return zero();
  }
}

// ---------------------------------------------------------------------------
// Literals

Value Algebra::parse(std::string_view literal) const {
  auto fail = [&]() -> UsageError {
    return UsageError("'" + std::string(literal) + "' is not a valid " + name() + " literal");
  };
  Rational q;
  switch (kind_) {
    case Kind::boolean:
      if (literal == "0") return Value::boolean(false);
      if (literal == "1") return Value::boolean(true);
      throw fail();
    case Kind::maxmin:
      if (!parse_rational(literal, q) || q < 0 || q > 1) throw fail();
      return Value::maxmin(q);
    case Kind::maxplus:
      if (literal == "-inf") return Value::maxplus_bottom();
      if (!parse_rational(literal, q) || q > 0) throw fail();
      return Value::maxplus(q);
    case Kind::maxtimes:
      if (literal == "0") return Value::maxtimes_zero();
      if (literal.substr(0, 4) != "pow:" || !parse_rational(literal.substr(4), q) || q < 0) throw fail();
      return Value::maxtimes_exponent(q);
    case Kind::chain: {
      if (!parse_rational(literal, q) || q < 0 || q > 1) throw fail();
      Rational scaled = q * static_cast<unsigned long>(chain_size_ - 1);
      scaled.canonicalize();
      if (scaled.get_den() != 1) throw fail();
      return Value::chain(static_cast<std::uint32_t>(scaled.get_num().get_ui()));
    }
    case Kind::lattice:
      for (std::uint32_t i = 0; i < lattice_->names.size(); ++i) {
        if (lattice_->names[i] == literal) return Value::lattice(i);
      }
      throw fail();
  }
  throw fail();
}

std::string Algebra::format(const Value& x) const {
  require_member(x);
  switch (kind_) {
    case Kind::boolean:
      return x.index() ? "1" : "0";
    case Kind::maxmin:
      return format_rational(x.rational());
    case Kind::maxplus:
      return x.is_bottom() ? "-inf" : format_rational(x.rational());
    case Kind::maxtimes:
      return x.is_bottom() ? "0" : "pow:" + format_rational(x.rational());
    case Kind::chain: {
      Rational q(x.index(), static_cast<unsigned long>(chain_size_ - 1));
      q.canonicalize();
      return format_rational(q);
    }
    case Kind::lattice:
      return lattice_->names[x.index()];
  }
  return "?";
}

}  // namespace incline
