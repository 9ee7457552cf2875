#ifndef TLC_HILBERT_HPP
#define TLC_HILBERT_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlc/extended_int.hpp"
#include "tlc/monomial.hpp"

namespace tlc {

/// Laurent polynomial in t with integer coefficients.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(int exponent, std::int64_t coeff = 1) {
    LaurentPolynomial p;
    if (coeff != 0) {
      p.low_ = exponent;
      p.c_ = {coeff};
    }
    return p;
  }
  static LaurentPolynomial one() { return monomial(0); }

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int e) const {
    if (e < low_ || e > high()) return 0;
    return c_[static_cast<std::size_t>(e - low_)];
  }
  std::int64_t at_one() const {
    std::int64_t s = 0;
    for (auto x : c_) s += x;
    return s;
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return combine(a, b, 1);
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return combine(a, b, -1);
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPolynomial r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  LaurentPolynomial shifted(int s) const {
    LaurentPolynomial r = *this;
    if (!r.is_zero()) r.low_ += s;
    return r;
  }

  /// (1 - t)^k.
  static LaurentPolynomial one_minus_t_power(int k) {
    LaurentPolynomial r = one();
    LaurentPolynomial f;
    f.low_ = 0;
    f.c_ = {1, -1};
    for (int i = 0; i < k; ++i) r = r * f;
    return r;
  }

  /// Exact division by (1 - t); requires value at t = 1 to be zero.
  LaurentPolynomial divided_by_one_minus_t() const {
    if (at_one() != 0) throw std::domain_error("not divisible by 1 - t");
    // p = (1 - t) q  <=>  q_k = sum_{j <= k} p_j
    LaurentPolynomial q;
    if (is_zero()) return q;
    q.low_ = low_;
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
      run += c_[i];
      q.c_.push_back(run);
    }
    q.trim();
    return q;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.low_ == b.low_);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      std::int64_t c = c_[i];
      if (c == 0) continue;
      int e = low_ + static_cast<int>(i);
      std::int64_t a = c < 0 ? -c : c;
      if (first) s += c < 0 ? "-" : "";
      else s += c < 0 ? " - " : " + ";
      first = false;
      if (e == 0) s += std::to_string(a);
      else {
        if (a != 1) s += std::to_string(a) + "*";
        s += "t";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  static LaurentPolynomial combine(const LaurentPolynomial& a, const LaurentPolynomial& b, int sign) {
    if (b.is_zero()) return a;
    if (a.is_zero()) {
      LaurentPolynomial r = b;
      for (auto& x : r.c_) x *= sign;
      return r;
    }
    LaurentPolynomial r;
    r.low_ = std::min(a.low_, b.low_);
    int hi = std::max(a.high(), b.high());
    r.c_.assign(static_cast<std::size_t>(hi - r.low_ + 1), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[static_cast<std::size_t>(a.low_ - r.low_) + i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[static_cast<std::size_t>(b.low_ - r.low_) + i] += sign * b.c_[i];
    r.trim();
    return r;
  }
  void trim() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    low_ += static_cast<int>(lead);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  int low_ = 0;
  std::vector<std::int64_t> c_;
};

/// numerator / (1 - t)^denominator_exponent.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(LaurentPolynomial numerator, int denominator_exponent)
      : num_(std::move(numerator)), den_(denominator_exponent) {}

  const LaurentPolynomial& numerator() const { return num_; }
  int denominator_exponent() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Numerator coprime to 1 - t, with the matching pole order.
  std::pair<LaurentPolynomial, int> reduced() const {
    LaurentPolynomial p = num_;
    int d = den_;
    while (!p.is_zero() && d > 0 && p.at_one() == 0) {
      p = p.divided_by_one_minus_t();
      --d;
    }
    return {p, d};
  }

  /// Pole order at t = 1, i.e. the Krull dimension; -inf for the zero series.
  ExtendedInt pole_order() const {
    if (is_zero()) return ExtendedInt::minus_infinity();
    auto [p, d] = reduced();
    if (p.at_one() == 0) throw std::logic_error("Hilbert numerator vanishes at 1 beyond the denominator");
    return d;
  }

  /// Coefficient of t^degree in the series expansion.
  std::int64_t coefficient(int degree) const {
    auto [p, d] = reduced();
    std::int64_t total = 0;
    for (int e = p.low(); e <= p.high() && !p.is_zero(); ++e) {
      std::int64_t c = p.coeff(e);
      if (c == 0) continue;
      total += c * multichoose(d, degree - e);
    }
    return total;
  }

  /// Same rational function (common denominators compared exactly).
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    int k = std::max(a.den_, b.den_);
    return a.num_ * LaurentPolynomial::one_minus_t_power(k - a.den_) ==
           b.num_ * LaurentPolynomial::one_minus_t_power(k - b.den_);
  }
  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
    int k = std::max(a.den_, b.den_);
    return {a.num_ * LaurentPolynomial::one_minus_t_power(k - a.den_) +
                b.num_ * LaurentPolynomial::one_minus_t_power(k - b.den_),
            k};
  }
  friend HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
    int k = std::max(a.den_, b.den_);
    return {a.num_ * LaurentPolynomial::one_minus_t_power(k - a.den_) -
                b.num_ * LaurentPolynomial::one_minus_t_power(k - b.den_),
            k};
  }
  friend HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b) {
    return {a.num_ * b.num_, a.den_ + b.den_};
  }
  HilbertSeries shifted(int s) const { return {num_.shifted(s), den_}; }

  std::string to_string() const {
    auto [p, d] = reduced();
    std::string s = "(" + p.to_string() + ")";
    if (d > 0) s += "/(1-t)^" + std::to_string(d);
    return s;
  }

 private:
  /// Number of monomials of degree k in d variables.
  static std::int64_t multichoose(int d, int k) {
    if (k < 0) return 0;
    if (d == 0) return k == 0 ? 1 : 0;
    // C(k + d - 1, d - 1)
    std::int64_t r = 1;
    for (int i = 1; i < d; ++i) r = r * (k + i) / i;
    return r;
  }

  LaurentPolynomial num_;
  int den_ = 0;
};

namespace detail {

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

inline LaurentPolynomial k_polynomial_rec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return LaurentPolynomial::one();
  // Base case: pairwise coprime generators give a product.
  bool pairwise_coprime = true;
  VarSet seen = 0;
  for (const auto& g : gens) {
    if (g.is_one()) return {};
    if (seen & g.support()) pairwise_coprime = false;
    seen |= g.support();
  }
  if (pairwise_coprime) {
    LaurentPolynomial r = LaurentPolynomial::one();
    for (const auto& g : gens) r = r * (LaurentPolynomial::one() - LaurentPolynomial::monomial(g.degree()));
    return r;
  }
  // Pivot on the variable shared by most generators, at its median exponent.
  int best = -1, best_count = 0;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    int count = 0;
    for (const auto& g : gens) count += g[v] > 0;
    if (count > best_count) {
      best_count = count;
      best = static_cast<int>(v);
    }
  }
  std::vector<int> exps;
  for (const auto& g : gens)
    if (g[static_cast<std::size_t>(best)] > 0) exps.push_back(g[static_cast<std::size_t>(best)]);
  std::sort(exps.begin(), exps.end());
  int e = exps[exps.size() / 2];
  if (e == exps.back() && exps.front() < e) e = exps.front();
  Monomial pivot = Monomial::variable(static_cast<std::size_t>(best), e);
  // K(R/I) = K(R/(I + p)) + t^deg p * K(R/(I : p))
  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(g / gcd(g, pivot));
  return k_polynomial_rec(std::move(with_pivot)) +
         k_polynomial_rec(std::move(colon)).shifted(pivot.degree());
}

}  // namespace detail

/// K-polynomial (Hilbert numerator over (1-t)^n) of R/(gens).
inline LaurentPolynomial k_polynomial(const std::vector<Monomial>& gens) {
  return detail::k_polynomial_rec(gens);
}

/// Hilbert series of R/(gens) over a ring with n variables.
inline HilbertSeries monomial_quotient_series(const std::vector<Monomial>& gens, std::size_t nvars) {
  return {k_polynomial(gens), static_cast<int>(nvars)};
}

}  // namespace tlc

#endif  // TLC_HILBERT_HPP
