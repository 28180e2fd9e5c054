#pragma once

// Exact scalars: arbitrary-precision rationals and integers modulo a prime.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace wha {

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / q_));
  }

  // "p/q" or "p", lowest terms, positive denominator.
  std::string to_string() const { return q_.get_str(); }

  static Rational parse(std::string_view text);

  std::size_t hash() const {
    return std::hash<std::string>{}(q_.get_str(16));
  }

 private:
  mpq_class q_{0};
};

namespace detail {

inline bool is_decimal_integer(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!detail::is_decimal_integer(num) ||
      (slash != std::string_view::npos && !detail::is_decimal_integer(den)))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den[0] == '+' ? den.substr(1) : den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

// Integer modulo a prime p < 2^32. A value built from a plain integer carries
// no modulus until it meets a bound value; such "unbound" values only ever hold
// small literals (0, ±1, ...), so mixed arithmetic reduces them on contact.
class ModP {
 public:
  ModP() = default;
  ModP(long v) : raw_(v) {}  // NOLINT(google-explicit-constructor)
  ModP(int v) : raw_(v) {}   // NOLINT(google-explicit-constructor)
  ModP(std::int64_t v, std::uint32_t p) : p_(p), raw_(reduce(v, p)) {
    if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
  }

  std::uint32_t modulus() const { return p_; }
  bool bound() const { return p_ != 0; }
  std::int64_t value() const { return raw_; }

  bool is_zero() const { return raw_ == 0; }
  bool is_one() const { return raw_ == 1; }

  ModP& operator+=(const ModP& o) { return combine(o, [](auto a, auto b, auto p) { return (a + b) % p; }, [](auto a, auto b) { return a + b; }); }
  ModP& operator-=(const ModP& o) { return combine(o, [](auto a, auto b, auto p) { return (a + p - b) % p; }, [](auto a, auto b) { return a - b; }); }
  ModP& operator*=(const ModP& o) { return combine(o, [](auto a, auto b, auto p) { return (a * b) % p; }, [](auto a, auto b) { return a * b; }); }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }
  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  ModP operator-() const {
    ModP r = *this;
    r.raw_ = bound() ? (raw_ == 0 ? 0 : p_ - raw_) : -raw_;
    return r;
  }

  friend bool operator==(const ModP& a, const ModP& b) {
    if (a.p_ == b.p_) return a.raw_ == b.raw_;
    if (a.bound() && b.bound()) return false;
    std::uint32_t p = a.bound() ? a.p_ : b.p_;
    return reduce(a.raw_, p) == reduce(b.raw_, p);
  }

  ModP inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (!bound()) {
      if (raw_ == 1 || raw_ == -1) return *this;
      throw std::domain_error("inverse of an integer literal with no modulus");
    }
    // Extended Euclid on (raw_, p_).
    std::int64_t t = 0, new_t = 1, r = p_, new_r = raw_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
      std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
    }
    return ModP(t, p_);
  }

  std::string to_string() const { return std::to_string(raw_); }

  std::size_t hash() const { return std::hash<std::int64_t>{}(raw_) ^ (std::size_t{p_} << 1); }

 private:
  static std::int64_t reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
  }

  template <class Bound, class Free>
  ModP& combine(const ModP& o, Bound bound_op, Free free_op) {
    if (bound() && o.bound() && p_ != o.p_) throw std::domain_error("mixed moduli");
    if (!bound() && !o.bound()) {
      raw_ = free_op(raw_, o.raw_);
      return *this;
    }
    std::uint32_t p = bound() ? p_ : o.p_;
    auto a = static_cast<std::uint64_t>(reduce(raw_, p));
    auto b = static_cast<std::uint64_t>(reduce(o.raw_, p));
    p_ = p;
    raw_ = static_cast<std::int64_t>(bound_op(a, b, std::uint64_t{p}));
    return *this;
  }

  std::uint32_t p_ = 0;
  std::int64_t raw_ = 0;
};

template <class K>
concept FieldScalar = std::regular<K> && requires(K a, const K& b) {
  { a += b } -> std::same_as<K&>;
  { a -= b } -> std::same_as<K&>;
  { a *= b } -> std::same_as<K&>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { b.is_zero() } -> std::same_as<bool>;
  { b.inverse() } -> std::same_as<K>;
  { b.to_string() } -> std::same_as<std::string>;
  K(1);
};

template <class K>
inline constexpr bool is_rational_v = std::is_same_v<K, Rational>;

inline bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Descriptor of the base field; owns scalar construction, parsing and canonical text.
template <class K>
struct Field;

template <>
struct Field<Rational> {
  Rational from_int(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  Rational from_fraction(std::int64_t num, std::int64_t den) const { return Rational(num, den); }
  Rational parse(std::string_view s) const { return Rational::parse(s); }
  Rational normalize(const Rational& x) const { return x; }
  std::string format(const Rational& x) const { return x.to_string(); }
  std::string name() const { return "Q"; }
  std::uint32_t characteristic() const { return 0; }
  friend bool operator==(const Field&, const Field&) { return true; }
};

template <>
struct Field<ModP> {
  explicit Field(std::uint32_t prime = 2) : p(prime) {
    if (!is_prime_u32(prime)) throw std::invalid_argument("Fp modulus " + std::to_string(prime) + " is not prime");
  }
  std::uint32_t p;

  ModP from_int(std::int64_t v) const { return ModP(v, p); }
  ModP from_fraction(std::int64_t num, std::int64_t den) const {
    ModP d(den, p);
    if (d.is_zero()) throw std::domain_error("denominator vanishes mod " + std::to_string(p));
    return ModP(num, p) / d;
  }
  ModP parse(std::string_view s) const {
    if (!detail::is_decimal_integer(s) || s[0] == '-' || s[0] == '+')
      throw std::invalid_argument("malformed residue '" + std::string(s) + "'");
    mpz_class v(std::string(s), 10);
    if (v >= p) throw std::invalid_argument("residue '" + std::string(s) + "' not in [0, p)");
    return ModP(v.get_si(), p);
  }
  ModP normalize(const ModP& x) const { return ModP(x.value(), p); }
  std::string format(const ModP& x) const { return normalize(x).to_string(); }
  std::string name() const { return "Fp:" + std::to_string(p); }
  std::uint32_t characteristic() const { return p; }
  friend bool operator==(const Field& a, const Field& b) { return a.p == b.p; }
};

}  // namespace wha

template <>
struct std::hash<wha::Rational> {
  std::size_t operator()(const wha::Rational& r) const { return r.hash(); }
};
