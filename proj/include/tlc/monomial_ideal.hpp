#ifndef TLC_MONOMIAL_IDEAL_HPP
#define TLC_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlc/hilbert.hpp"
#include "tlc/monomial.hpp"

namespace tlc {

/// Monomial ideal in n variables, stored by its minimal generators.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : n_(nvars) {
    if (nvars > kMaxVariables) throw std::invalid_argument("too many variables");
    for (const auto& g : gens)
      for (std::size_t j = nvars; j < kMaxVariables; ++j)
        if (g[j] != 0) throw std::invalid_argument("generator uses a variable outside the ring");
    gens_ = detail::minimalize(std::move(gens));
    std::sort(gens_.begin(), gens_.end());
  }

  static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars, {}); }
  static MonomialIdeal unit(std::size_t nvars) { return MonomialIdeal(nvars, {Monomial()}); }
  /// Prime generated by the variables in s.
  static MonomialIdeal prime(std::size_t nvars, VarSet s) {
    std::vector<Monomial> g;
    for (std::size_t j = 0; j < nvars; ++j)
      if (s >> j & 1u) g.push_back(Monomial::variable(j));
    return MonomialIdeal(nvars, std::move(g));
  }
  static MonomialIdeal maximal(std::size_t nvars) { return prime(nvars, (VarSet{1} << nvars) - 1); }

  std::size_t nvars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }
  bool contains(const MonomialIdeal& o) const {
    return std::all_of(o.gens_.begin(), o.gens_.end(), [&](const Monomial& g) { return contains(g); });
  }

  friend MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
    check(a, b);
    std::vector<Monomial> g = a.gens_;
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return MonomialIdeal(a.n_, std::move(g));
  }
  friend MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
    check(a, b);
    std::vector<Monomial> g;
    for (const auto& x : a.gens_)
      for (const auto& y : b.gens_) g.push_back(x * y);
    return MonomialIdeal(a.n_, std::move(g));
  }
  friend MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
    check(a, b);
    std::vector<Monomial> g;
    for (const auto& x : a.gens_)
      for (const auto& y : b.gens_) g.push_back(lcm(x, y));
    return MonomialIdeal(a.n_, std::move(g));
  }
  /// (this : m).
  MonomialIdeal colon(const Monomial& m) const {
    std::vector<Monomial> g;
    for (const auto& x : gens_) g.push_back(x / gcd(x, m));
    return MonomialIdeal(n_, std::move(g));
  }
  /// (this : o) = intersection over the generators of o.
  MonomialIdeal colon(const MonomialIdeal& o) const {
    check(*this, o);
    MonomialIdeal r = unit(n_);
    for (const auto& m : o.gens_) r = intersection(r, colon(m));
    return r;
  }
  MonomialIdeal radical() const {
    std::vector<Monomial> g;
    for (const auto& x : gens_) g.push_back(x.radical());
    return MonomialIdeal(n_, std::move(g));
  }
  /// Variables in some generator.
  VarSet support() const {
    VarSet s = 0;
    for (const auto& g : gens_) s |= g.support();
    return s;
  }
  /// Per-variable largest exponent among the generators.
  std::vector<int> max_exponents() const {
    std::vector<int> d(n_, 0);
    for (const auto& g : gens_)
      for (std::size_t j = 0; j < n_; ++j) d[j] = std::max(d[j], g[j]);
    return d;
  }
  /// Image in a ring with `total` variables, this ring's variables placed at `offset`.
  MonomialIdeal embedded(std::size_t total, std::size_t offset) const {
    if (offset + n_ > total) throw std::invalid_argument("embedding out of range");
    std::vector<Monomial> g;
    for (const auto& x : gens_) g.push_back(x.shifted(offset));
    return MonomialIdeal(total, std::move(g));
  }

  HilbertSeries quotient_series() const { return monomial_quotient_series(gens_, n_); }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += gens_[i].to_string(names);
    }
    return s + ")";
  }

 private:
  static void check(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("monomial ideals over different rings");
  }

  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// A primary monomial ideal with radical the prime on `prime`.
struct PrimaryComponent {
  MonomialIdeal ideal;
  VarSet prime = 0;
  /// Krull dimension of R / prime.
  int dim = 0;
};

namespace detail {

inline void irreducible_split(const MonomialIdeal& j, std::vector<MonomialIdeal>& out) {
  for (const auto& g : j.generators()) {
    if (popcount(g.support()) <= 1) continue;
    std::size_t v = static_cast<std::size_t>(__builtin_ctz(g.support()));
    Monomial u = Monomial::variable(v, g[v]);
    Monomial rest = g / u;
    std::vector<Monomial> others;
    for (const auto& h : j.generators())
      if (!(h == g)) others.push_back(h);
    auto with = [&](const Monomial& m) {
      auto o = others;
      o.push_back(m);
      return MonomialIdeal(j.nvars(), std::move(o));
    };
    irreducible_split(with(u), out);
    irreducible_split(with(rest), out);
    return;
  }
  out.push_back(j);
}

}  // namespace detail

/// Irredundant decomposition of a monomial ideal into irreducible (pure power)
/// components.
inline std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& j) {
  if (j.is_unit()) throw std::invalid_argument("unit ideal has no decomposition");
  std::vector<MonomialIdeal> all;
  detail::irreducible_split(j, all);
  std::vector<MonomialIdeal> out;
  for (std::size_t a = 0; a < all.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < all.size() && !redundant; ++b) {
      if (a == b) continue;
      // Drop a if it contains another component (ties keep the first copy).
      if (all[a].contains(all[b]) && (!all[b].contains(all[a]) || b < a)) redundant = true;
    }
    if (!redundant) out.push_back(all[a]);
  }
  return out;
}

/// Irredundant primary decomposition, components ordered by prime.
inline std::vector<PrimaryComponent> primary_decomposition_monomial(const MonomialIdeal& j) {
  std::map<VarSet, MonomialIdeal> by_prime;
  for (const auto& q : irreducible_decomposition(j)) {
    VarSet p = q.support();
    auto it = by_prime.find(p);
    if (it == by_prime.end()) by_prime.emplace(p, q);
    else it->second = intersection(it->second, q);
  }
  std::vector<PrimaryComponent> out;
  for (auto& [p, q] : by_prime)
    out.push_back({q, p, static_cast<int>(j.nvars()) - popcount(p)});
  return out;
}

/// Ass(R/J) as variable sets, sorted.
inline std::vector<VarSet> associated_primes(const MonomialIdeal& j) {
  std::vector<VarSet> out;
  if (j.is_unit()) return out;
  for (const auto& c : primary_decomposition_monomial(j)) out.push_back(c.prime);
  return out;
}

/// Ass(K/J) for monomial J ⊆ K: the union of Ass(R/(J : g)) over the
/// generators g of K outside J.
inline std::vector<VarSet> associated_primes(const MonomialIdeal& k, const MonomialIdeal& j) {
  std::vector<VarSet> out;
  for (const auto& g : k.generators()) {
    if (j.contains(g)) continue;
    for (VarSet p : associated_primes(j.colon(g))) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::string prime_to_string(VarSet p, const std::vector<std::string>& names) {
  std::string s = "(";
  bool first = true;
  for (std::size_t j = 0; j < names.size(); ++j)
    if (p >> j & 1u) {
      if (!first) s += ",";
      s += names[j];
      first = false;
    }
  return s == "(" ? "(0)" : s + ")";
}

}  // namespace tlc

#endif  // TLC_MONOMIAL_IDEAL_HPP
