#ifndef TLC_EXTENDED_INT_HPP
#define TLC_EXTENDED_INT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tlc {

/// Integer extended by +inf and -inf. inf of the empty set is +inf and sup of
/// the empty set is -inf, which is how grade and cd of degenerate modules are
/// reported.
class ExtendedInt {
 public:
  enum class Kind : std::uint8_t { minus_infinity, finite, plus_infinity };

  constexpr ExtendedInt() = default;
  constexpr ExtendedInt(long v) : kind_(Kind::finite), v_(v) {}  // NOLINT

  static constexpr ExtendedInt plus_infinity() { return ExtendedInt(Kind::plus_infinity); }
  static constexpr ExtendedInt minus_infinity() { return ExtendedInt(Kind::minus_infinity); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_plus_infinity() const { return kind_ == Kind::plus_infinity; }
  constexpr bool is_minus_infinity() const { return kind_ == Kind::minus_infinity; }

  long value() const {
    if (!is_finite()) throw std::logic_error("value() of an infinite ExtendedInt");
    return v_;
  }

  friend ExtendedInt operator+(const ExtendedInt& a, const ExtendedInt& b) {
    if ((a.is_plus_infinity() && b.is_minus_infinity()) ||
        (a.is_minus_infinity() && b.is_plus_infinity()))
      throw std::domain_error("indeterminate sum +inf + -inf");
    if (!a.is_finite()) return a;
    if (!b.is_finite()) return b;
    return ExtendedInt(a.v_ + b.v_);
  }
  ExtendedInt& operator+=(const ExtendedInt& o) { return *this = *this + o; }

  friend constexpr bool operator==(const ExtendedInt& a, const ExtendedInt& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.v_ == b.v_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtendedInt& a, const ExtendedInt& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::finite) return std::strong_ordering::equal;
    return a.v_ <=> b.v_;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::plus_infinity: return "+inf";
      case Kind::minus_infinity: return "-inf";
      default: return std::to_string(v_);
    }
  }

  /// Inverse of to_string.
  static ExtendedInt parse(const std::string& s) {
    if (s == "+inf" || s == "inf") return plus_infinity();
    if (s == "-inf") return minus_infinity();
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad extended integer: " + s);
    return ExtendedInt(v);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedInt& x) {
    return os << x.to_string();
  }

 private:
  constexpr explicit ExtendedInt(Kind k) : kind_(k) {}

  Kind kind_ = Kind::finite;
  long v_ = 0;
};

}  // namespace tlc

#endif  // TLC_EXTENDED_INT_HPP
