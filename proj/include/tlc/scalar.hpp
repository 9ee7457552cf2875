#ifndef TLC_SCALAR_HPP
#define TLC_SCALAR_HPP

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tlc {

/// Characteristic of a base field; 0 means the rationals.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  std::string to_string() const {
    return characteristic == 0 ? std::string("QQ")
                               : "FF " + std::to_string(characteristic);
  }
};

inline bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Exact rational number backed by GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT: integer literals are scalars
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational from_integer(long n, const Rational&) { return Rational(n); }
  static Rational one(const FieldSpec&) { return Rational(1); }
  static FieldSpec spec_of(const Rational&) { return {}; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  const mpq_class& value() const { return v_; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

  std::string to_string() const { return v_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_.get_str();
  }

 private:
  mpq_class v_;
};

/// Residue modulo a prime chosen at run time. Every value carries its modulus;
/// mixing moduli is a logic error and throws.
class PrimeField {
 public:
  PrimeField() = default;
  PrimeField(long n, std::uint32_t p) : p_(p) {
    if (p_ == 0) throw std::invalid_argument("prime field needs a modulus");
    long r = n % static_cast<long>(p_);
    if (r < 0) r += p_;
    v_ = static_cast<std::uint32_t>(r);
  }

  static PrimeField from_integer(long n, const PrimeField& like) { return {n, like.p_}; }
  static PrimeField one(const FieldSpec& s) { return {1, s.characteristic}; }
  static FieldSpec spec_of(const PrimeField& x) { return {x.p_}; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  PrimeField inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero");
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return PrimeField(static_cast<long>(x0), p_);
  }

  PrimeField operator-() const {
    PrimeField r = *this;
    r.v_ = v_ == 0 ? 0 : p_ - v_;
    return r;
  }
  PrimeField& operator+=(const PrimeField& o) {
    check(o);
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  PrimeField& operator-=(const PrimeField& o) { return *this += -o; }
  PrimeField& operator*=(const PrimeField& o) {
    check(o);
    v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % p_);
    return *this;
  }
  PrimeField& operator/=(const PrimeField& o) { return *this *= o.inverse(); }
  friend PrimeField operator+(PrimeField a, const PrimeField& b) { return a += b; }
  friend PrimeField operator-(PrimeField a, const PrimeField& b) { return a -= b; }
  friend PrimeField operator*(PrimeField a, const PrimeField& b) { return a *= b; }
  friend PrimeField operator/(PrimeField a, const PrimeField& b) { return a /= b; }
  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.v_ == b.v_ && (a.p_ == b.p_ || a.p_ == 0 || b.p_ == 0);
  }

  /// Symmetric representative, so -1 prints as -1 rather than p-1.
  std::string to_string() const {
    long s = v_ > p_ / 2 ? static_cast<long>(v_) - static_cast<long>(p_) : v_;
    return std::to_string(s);
  }
  friend std::ostream& operator<<(std::ostream& os, const PrimeField& x) {
    return os << x.to_string();
  }

 private:
  void check(const PrimeField& o) {
    if (p_ == 0) p_ = o.p_;
    if (o.p_ != 0 && o.p_ != p_) throw std::logic_error("modulus mismatch");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

template <class F>
concept FieldScalar = std::regular<F> && requires(F a, const F& b, long n, FieldSpec s) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.inverse() } -> std::same_as<F>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.to_string() } -> std::same_as<std::string>;
  { F::from_integer(n, b) } -> std::same_as<F>;
  { F::one(s) } -> std::same_as<F>;
  { F::spec_of(b) } -> std::same_as<FieldSpec>;
};

static_assert(FieldScalar<Rational>);
static_assert(FieldScalar<PrimeField>);

/// Parses "3", "-7", "3/4" into a scalar of the given field.
template <FieldScalar F>
F parse_scalar(const std::string& text, const FieldSpec& spec) {
  const F unit = F::one(spec);
  auto slash = text.find('/');
  auto to_long = [&](const std::string& s) {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad scalar: " + text);
    return v;
  };
  if (slash == std::string::npos) return F::from_integer(to_long(text), unit);
  F num = F::from_integer(to_long(text.substr(0, slash)), unit);
  F den = F::from_integer(to_long(text.substr(slash + 1)), unit);
  if (den.is_zero()) throw std::domain_error("zero denominator: " + text);
  return num / den;
}

}  // namespace tlc

#endif  // TLC_SCALAR_HPP
