#ifndef TLC_MONOMIAL_HPP
#define TLC_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlc {

/// Upper bound on the number of variables of any ring.
inline constexpr std::size_t kMaxVariables = 10;

/// Bit set of variable indices.
using VarSet = std::uint32_t;

inline int popcount(VarSet s) { return __builtin_popcount(s); }

/// Exponent vector with non-negative entries. Entries beyond the ambient
/// ring's variable count are zero.
class Monomial {
 public:
  using Exponents = std::array<std::uint16_t, kMaxVariables>;

  Monomial() = default;
  explicit Monomial(std::span<const int> exps) {
    if (exps.size() > kMaxVariables) throw std::out_of_range("too many variables");
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) throw std::invalid_argument("negative exponent");
      e_[i] = static_cast<std::uint16_t>(exps[i]);
    }
    refresh();
  }
  Monomial(std::initializer_list<int> exps)
      : Monomial(std::span<const int>(exps.begin(), exps.size())) {}

  static Monomial variable(std::size_t i, int power = 1) {
    Monomial m;
    m.e_.at(i) = static_cast<std::uint16_t>(power);
    m.refresh();
    return m;
  }

  int operator[](std::size_t i) const { return e_[i]; }
  int degree() const { return static_cast<int>(degree_); }
  /// Variables with a positive exponent.
  VarSet support() const { return support_; }
  bool is_one() const { return degree_ == 0; }
  const Exponents& exponents() const { return e_; }

  void set(std::size_t i, int value) {
    if (value < 0) throw std::invalid_argument("negative exponent");
    e_.at(i) = static_cast<std::uint16_t>(value);
    refresh();
  }

  bool divides(const Monomial& o) const {
    if ((support_ & ~o.support_) != 0 || degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    r.refresh();
    return r;
  }

  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (b.e_[i] > a.e_[i]) throw std::domain_error("monomial division is not exact");
      r.e_[i] = a.e_[i] - b.e_[i];
    }
    r.refresh();
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.refresh();
    return r;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    r.refresh();
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    return (a.support_ & b.support_) == 0;
  }

  /// The squarefree monomial on the support.
  Monomial radical() const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.e_[i] = e_[i] > 0 ? 1 : 0;
    r.refresh();
    return r;
  }

  /// Moves exponent i to position i + offset (used by ring joins).
  Monomial shifted(std::size_t offset) const {
    Monomial r;
    for (std::size_t i = 0; i + offset < kMaxVariables; ++i) r.e_[i + offset] = e_[i];
    for (std::size_t i = kMaxVariables - offset; i < kMaxVariables; ++i)
      if (e_[i] != 0) throw std::out_of_range("shift exceeds variable capacity");
    r.refresh();
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  /// Lexicographic on exponents; a canonical total order for containers.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : e_) h = (h ^ x) * 1099511628211ULL;
    return h;
  }

  /// Renders with the given variable names; "1" for the unit monomial.
  std::string to_string(const std::vector<std::string>& names) const {
    std::string out;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (e_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += i < names.size() ? names[i] : "v" + std::to_string(i);
      if (e_[i] > 1) out += '^' + std::to_string(e_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  void refresh() {
    degree_ = 0;
    support_ = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      degree_ += e_[i];
      if (e_[i] != 0) support_ |= VarSet{1} << i;
    }
  }

  Exponents e_{};
  std::uint32_t degree_ = 0;
  VarSet support_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Z^n degree of a Laurent monomial. The coarse degree is the entry sum.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::vector<int> v) : v_(std::move(v)) {}
  explicit Multidegree(std::size_t n) : v_(n, 0) {}

  std::size_t size() const { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  int& operator[](std::size_t i) { return v_[i]; }
  int total() const { return std::accumulate(v_.begin(), v_.end(), 0); }
  const std::vector<int>& values() const { return v_; }

  /// Concatenation, for degrees over a joined ring.
  friend Multidegree concat(const Multidegree& a, const Multidegree& b) {
    std::vector<int> v = a.v_;
    v.insert(v.end(), b.v_.begin(), b.v_.end());
    return Multidegree(std::move(v));
  }

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> v_;
};

}  // namespace tlc

#endif  // TLC_MONOMIAL_HPP
