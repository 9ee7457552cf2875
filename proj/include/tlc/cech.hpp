#ifndef TLC_CECH_HPP
#define TLC_CECH_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tlc/extended_int.hpp"
#include "tlc/monomial_ideal.hpp"
#include "tlc/scalar.hpp"

namespace tlc {

/// Rank of a dense matrix over F by Gaussian elimination.
template <FieldScalar F>
int matrix_rank(std::vector<std::vector<F>> rows) {
  int rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < ncols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    F inv = p[c].inverse();
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      F f = rows[r][c] * inv;
      for (std::size_t k = c; k < ncols; ++k) rows[r][k] -= f * p[k];
    }
    ++rank;
  }
  return rank;
}

/// Per-variable intervals [-1, D_j]; every multidegree is equivalent to its clamp.
class WitnessBox {
 public:
  WitnessBox() = default;
  explicit WitnessBox(std::vector<int> upper) : upper_(std::move(upper)) {}

  /// D_j = largest exponent of x_j among the generators, or 1 if x_j is absent.
  static WitnessBox of(const std::vector<const MonomialIdeal*>& ideals, std::size_t nvars) {
    std::vector<int> d(nvars, 0);
    for (const auto* i : ideals) {
      auto e = i->max_exponents();
      for (std::size_t j = 0; j < nvars; ++j) d[j] = std::max(d[j], e[j]);
    }
    for (auto& x : d)
      if (x == 0) x = 1;
    return WitnessBox(std::move(d));
  }

  std::size_t nvars() const { return upper_.size(); }
  const std::vector<int>& upper() const { return upper_; }
  std::size_t size() const {
    std::size_t s = 1;
    for (int d : upper_) s *= static_cast<std::size_t>(d + 2);
    return s;
  }
  Multidegree clamp(const Multidegree& a) const {
    Multidegree c(nvars());
    for (std::size_t j = 0; j < nvars(); ++j) c[j] = std::min(std::max(a[j], -1), upper_[j]);
    return c;
  }
  void for_each(const std::function<void(const Multidegree&)>& f) const {
    Multidegree a(nvars());
    for (std::size_t j = 0; j < nvars(); ++j) a[j] = -1;
    for (;;) {
      f(a);
      std::size_t j = 0;
      while (j < nvars() && a[j] == upper_[j]) a[j++] = -1;
      if (j == nvars()) return;
      ++a[j];
    }
  }

  /// Number of multidegrees with total degree `d` that clamp to `b`; nullopt
  /// when infinite.
  std::optional<long> fibre_count(const Multidegree& b, int d) const {
    int fixed = 0, neg = 0, up = 0, up_base = 0;
    for (std::size_t j = 0; j < nvars(); ++j) {
      if (b[j] == -1) ++neg;
      else if (b[j] == upper_[j]) {
        ++up;
        up_base += upper_[j];
      } else fixed += b[j];
    }
    int rest = d - fixed;
    if (neg > 0 && up > 0) return std::nullopt;
    if (neg > 0) {
      int s = -rest;  // sum of `neg` positive parts
      return s < neg ? 0 : binomial(s - 1, neg - 1);
    }
    if (up > 0) {
      int s = rest - up_base;
      return s < 0 ? 0 : binomial(s + up - 1, up - 1);
    }
    return rest == 0 ? 1 : 0;
  }

 private:
  static long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }

  std::vector<int> upper_;
};

/// Multigraded local cohomology H^t_I(K/J) for monomial ideals J ⊆ K, from the
/// Čech complex on the variable supports of the radical of I. Each term of the
/// complex is 0 or 1 dimensional in a fixed multidegree.
template <FieldScalar F>
class CechCohomology {
 public:
  CechCohomology(const MonomialIdeal& i, const MonomialIdeal& k, const MonomialIdeal& j, FieldSpec field)
      : n_(i.nvars()), unit_ideal_(i.is_unit()), k_(k), j_(j), one_(F::one(field)) {
    if (k.nvars() != n_ || j.nvars() != n_) throw std::invalid_argument("Čech data over different rings");
    if (!k.contains(j)) throw std::invalid_argument("subquotient needs J inside K");
    for (const auto& g : i.radical().generators()) supports_.push_back(g.support());
    box_ = WitnessBox::of({&k_, &j_}, n_);
  }

  /// Cohomology of R/J.
  CechCohomology(const MonomialIdeal& i, const MonomialIdeal& j, FieldSpec field)
      : CechCohomology(i, MonomialIdeal::unit(i.nvars()), j, field) {}

  std::size_t nvars() const { return n_; }
  /// Length of the Čech complex; H^t vanishes above it.
  int length() const { return static_cast<int>(supports_.size()); }
  const WitnessBox& box() const { return box_; }
  bool module_is_zero() const { return j_.contains(k_); }

  /// dim H^t_I(M)_a for t = 0..length().
  const std::vector<int>& cohomology(const Multidegree& a) {
    auto key = pattern(a);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(std::move(key), compute(a)).first->second;
  }

  int piece(int t, const Multidegree& a) {
    if (t < 0 || t > length() || unit_ideal_) return 0;
    return cohomology(a)[static_cast<std::size_t>(t)];
  }

  /// Cohomological degrees with a nonzero piece somewhere in the box.
  std::vector<bool> nonvanishing() {
    if (!nonvanishing_) {
      std::vector<bool> nz(static_cast<std::size_t>(length()) + 1, false);
      if (!unit_ideal_ && !module_is_zero())
        box_.for_each([&](const Multidegree& a) {
          const auto& h = cohomology(a);
          for (std::size_t t = 0; t < h.size(); ++t)
            if (h[t] != 0) nz[t] = true;
        });
      nonvanishing_ = nz;
    }
    return *nonvanishing_;
  }

  /// Least t with H^t_I(M) != 0; +inf if none.
  ExtendedInt grade() {
    auto nz = nonvanishing();
    for (std::size_t t = 0; t < nz.size(); ++t)
      if (nz[t]) return static_cast<long>(t);
    return ExtendedInt::plus_infinity();
  }
  /// Greatest t with H^t_I(M) != 0; -inf if none.
  ExtendedInt cd() {
    auto nz = nonvanishing();
    for (std::size_t t = nz.size(); t-- > 0;)
      if (nz[t]) return static_cast<long>(t);
    return ExtendedInt::minus_infinity();
  }

  /// Whether H^t_I(M) has only finitely many nonzero pieces. For I the
  /// irrelevant ideal this is finite generation.
  bool finite_length(int t) {
    bool finite = true;
    box_.for_each([&](const Multidegree& a) {
      if (!finite || piece(t, a) == 0) return;
      for (std::size_t j = 0; j < n_; ++j)
        if (a[j] == -1 || a[j] == box_.upper()[j]) finite = false;
    });
    return finite;
  }

  /// Sum of dim H^t_I(M)_a over multidegrees of total degree d.
  long graded_dimension(int t, int d) {
    long total = 0;
    box_.for_each([&](const Multidegree& a) {
      int h = piece(t, a);
      if (h == 0) return;
      auto c = box_.fibre_count(a, d);
      if (!c) throw std::domain_error("infinitely many pieces in one total degree");
      total += h * *c;
    });
    return total;
  }

 private:
  using Key = std::vector<VarSet>;

  static VarSet big(const Monomial& g, const Multidegree& a, std::size_t n) {
    VarSet s = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (g[j] > a[j]) s |= VarSet{1} << j;
    return s;
  }

  Key pattern(const Multidegree& a) const {
    Key key;
    VarSet neg = 0;
    for (std::size_t j = 0; j < n_; ++j)
      if (a[j] < 0) neg |= VarSet{1} << j;
    key.push_back(neg);
    for (const auto& g : k_.generators()) key.push_back(big(g, a, n_));
    key.push_back(~VarSet{0});
    for (const auto& h : j_.generators()) key.push_back(big(h, a, n_));
    return key;
  }

  /// x^a spans (K/J)[U^{-1}]_a.
  bool alive(VarSet u, const Multidegree& a) const {
    for (std::size_t j = 0; j < n_; ++j)
      if (a[j] < 0 && !(u >> j & 1u)) return false;
    bool in_k = false;
    for (const auto& g : k_.generators())
      if ((big(g, a, n_) & ~u) == 0) {
        in_k = true;
        break;
      }
    if (!in_k) return false;
    for (const auto& h : j_.generators())
      if ((big(h, a, n_) & ~u) == 0) return false;
    return true;
  }

  std::vector<int> compute(const Multidegree& a) const {
    const int s = length();
    std::vector<int> h(static_cast<std::size_t>(s) + 1, 0);
    if (unit_ideal_) return h;
    // Alive index sets T by size, with their positions.
    std::vector<std::vector<unsigned>> by_size(static_cast<std::size_t>(s) + 1);
    for (unsigned t = 0; t < (1u << s); ++t) {
      VarSet u = 0;
      for (int k = 0; k < s; ++k)
        if (t >> k & 1u) u |= supports_[static_cast<std::size_t>(k)];
      if (alive(u, a)) by_size[static_cast<std::size_t>(popcount(t))].push_back(t);
    }
    std::vector<int> ranks(static_cast<std::size_t>(s) + 1, 0);  // rank of d^t : C^t -> C^{t+1}
    for (int t = 0; t < s; ++t) {
      const auto& src = by_size[static_cast<std::size_t>(t)];
      const auto& dst = by_size[static_cast<std::size_t>(t) + 1];
      if (src.empty() || dst.empty()) continue;
      std::map<unsigned, std::size_t> row_of;
      for (std::size_t r = 0; r < dst.size(); ++r) row_of[dst[r]] = r;
      std::vector<std::vector<F>> m(dst.size(), std::vector<F>(src.size(), F::from_integer(0, one_)));
      for (std::size_t c = 0; c < src.size(); ++c)
        for (int k = 0; k < s; ++k) {
          if (src[c] >> k & 1u) continue;
          auto it = row_of.find(src[c] | (1u << k));
          if (it == row_of.end()) continue;
          int below = popcount(src[c] & ((1u << k) - 1));
          m[it->second][c] = below % 2 ? -one_ : one_;
        }
      ranks[static_cast<std::size_t>(t)] = matrix_rank(std::move(m));
    }
    for (int t = 0; t <= s; ++t) {
      int dim = static_cast<int>(by_size[static_cast<std::size_t>(t)].size());
      dim -= ranks[static_cast<std::size_t>(t)];
      if (t > 0) dim -= ranks[static_cast<std::size_t>(t) - 1];
      h[static_cast<std::size_t>(t)] = dim;
    }
    return h;
  }

  std::size_t n_;
  bool unit_ideal_;
  MonomialIdeal k_, j_;
  F one_;
  std::vector<VarSet> supports_;
  WitnessBox box_;
  std::map<Key, std::vector<int>> cache_;
  std::optional<std::vector<bool>> nonvanishing_;
};

/// (grade, cd) of I on R/J; (+inf, -inf) when I is the unit ideal or J is.
template <FieldScalar F = Rational>
std::pair<ExtendedInt, ExtendedInt> grade_cd_monomial(const MonomialIdeal& i, const MonomialIdeal& j,
                                                      FieldSpec field = {}) {
  CechCohomology<F> c(i, j, field);
  return {c.grade(), c.cd()};
}

/// (grade, cd) of I on the subquotient K/J.
template <FieldScalar F = Rational>
std::pair<ExtendedInt, ExtendedInt> grade_cd_monomial(const MonomialIdeal& i, const MonomialIdeal& k,
                                                      const MonomialIdeal& j, FieldSpec field = {}) {
  CechCohomology<F> c(i, k, j, field);
  return {c.grade(), c.cd()};
}

/// Least t with H^t_m(K/J) not finitely generated; +inf if none.
template <FieldScalar F = Rational>
ExtendedInt finiteness_dim_cech(const MonomialIdeal& k, const MonomialIdeal& j, FieldSpec field = {}) {
  CechCohomology<F> c(MonomialIdeal::maximal(k.nvars()), k, j, field);
  if (c.module_is_zero()) return ExtendedInt::plus_infinity();
  for (int t = 0; t <= c.length(); ++t)
    if (!c.finite_length(t)) return static_cast<long>(t);
  return ExtendedInt::plus_infinity();
}

}  // namespace tlc

#endif  // TLC_CECH_HPP
