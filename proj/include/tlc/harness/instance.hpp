#ifndef TLC_HARNESS_INSTANCE_HPP
#define TLC_HARNESS_INSTANCE_HPP

#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tlc/invariants.hpp"
#include "tlc/tensor.hpp"

namespace tlc::harness {

/// Ideal text "(g1, g2, ...)" over the given names; "(0)" for the zero ideal.
inline std::string ideal_text(const MonomialIdeal& i, const std::vector<std::string>& names) {
  if (i.is_zero()) return "(0)";
  if (i.is_unit()) return "(1)";
  return i.to_string(names);
}

/// Two factor rings, an ideal of each, and a module over each. The modules are
/// R/J_L and R'/J_N whenever `left_ideal` / `right_ideal` are set.
template <FieldScalar F>
struct Instance {
  std::string label;
  RingPtr<F> a, b;
  MonomialIdeal i, j;
  ModulePresentation<F> l, n;
  std::optional<MonomialIdeal> left_ideal, right_ideal;

  bool monomial() const { return left_ideal.has_value() && right_ideal.has_value(); }
  bool irrelevant() const {
    return i == MonomialIdeal::maximal(a->nvars()) && j == MonomialIdeal::maximal(b->nvars());
  }

  /// Declarations in session syntax; replayable by the command-line tool.
  std::string serialize() const {
    std::string s;
    s += "ring A = " + a->to_string() + ";\n";
    s += "ring B = " + b->to_string() + ";\n";
    s += "ideal I = " + ideal_text(i, a->names()) + " in A;\n";
    s += "ideal J = " + ideal_text(j, b->names()) + " in B;\n";
    s += module_text("L", "A", "JL", l, left_ideal, a);
    s += module_text("N", "B", "JN", n, right_ideal, b);
    return s;
  }

  /// FNV-1a of the serialization, as 16 hex digits.
  std::string digest() const {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : serialize()) {
      h ^= c;
      h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

 private:
  static std::string module_text(const std::string& name, const std::string& ring, const std::string& ideal_name,
                                 const ModulePresentation<F>& m, const std::optional<MonomialIdeal>& mi,
                                 const RingPtr<F>& r) {
    if (mi) return "ideal " + ideal_name + " = " + ideal_text(*mi, r->names()) + " in " + ring + ";\nmodule " + name +
                  " = " + ring + "/" + ideal_name + ";\n";
    return "module " + name + " = " + presentation_text(m, ring) + ";\n";
  }

 public:
  /// coker(A, [twists], [[col], ...]) form of a general presentation.
  static std::string presentation_text(const ModulePresentation<F>& m, const std::string& ring) {
    std::string s = "coker(" + ring + ", [";
    for (std::size_t c = 0; c < m.num_generators(); ++c) {
      if (c) s += ", ";
      s += std::to_string(m.generators().degree(c));
    }
    s += "], [";
    for (std::size_t k = 0; k < m.relations().cols(); ++k) {
      if (k) s += ", ";
      s += "[";
      for (std::size_t r = 0; r < m.num_generators(); ++r) {
        if (r) s += ", ";
        s += m.relations().entry(r, k).to_string();
      }
      s += "]";
    }
    return s + "])";
  }
};

template <FieldScalar F>
Instance<F> make_instance(std::string label, RingPtr<F> a, RingPtr<F> b, MonomialIdeal i, MonomialIdeal j,
                          MonomialIdeal jl, MonomialIdeal jn) {
  Instance<F> inst;
  inst.label = std::move(label);
  inst.l = ModulePresentation<F>::cyclic(a, jl.generators());
  inst.n = ModulePresentation<F>::cyclic(b, jn.generators());
  inst.a = std::move(a);
  inst.b = std::move(b);
  inst.i = std::move(i);
  inst.j = std::move(j);
  inst.left_ideal = std::move(jl);
  inst.right_ideal = std::move(jn);
  return inst;
}

inline std::vector<std::string> variable_names(const std::string& stem, std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t k = 1; k <= n; ++k) v.push_back(stem + std::to_string(k));
  return v;
}

enum class IdealModel { irrelevant, monomial, mixed };

struct RandomModelParams {
  std::size_t min_vars = 1, max_vars = 3;  // per factor
  int max_exponent = 3;
  std::size_t min_gens = 1, max_gens = 4;
  IdealModel ideals = IdealModel::irrelevant;
  std::uint64_t seed = 1;
};

/// Draws from a 64-bit Mersenne twister with plain modular reduction, so
/// streams are identical on every standard library.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1)); }
  int between(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return (rng_() & 1u) != 0; }

 private:
  std::mt19937_64 rng_;
};

/// Proper monomial ideal with gens in [min_gens, max_gens]; the monomial 1 is redrawn.
inline MonomialIdeal random_monomial_ideal(Draw& d, std::size_t nvars, const RandomModelParams& p) {
  std::size_t k = d.between(p.min_gens, p.max_gens);
  std::vector<Monomial> gens;
  while (gens.size() < k) {
    Monomial m;
    for (std::size_t v = 0; v < nvars; ++v) m.set(v, d.between(0, p.max_exponent));
    if (!m.is_one()) gens.push_back(m);
  }
  return MonomialIdeal(nvars, std::move(gens));
}

template <FieldScalar F>
std::vector<Instance<F>> random_instances(const RandomModelParams& p, std::size_t count, FieldSpec field = {}) {
  if (p.max_vars > 5 || p.max_exponent > 3 || p.max_gens > 4 || p.min_vars < 1 || p.min_vars > p.max_vars ||
      p.min_gens > p.max_gens)
    throw std::invalid_argument("random model parameters outside desk scale");
  Draw d(p.seed);
  std::vector<Instance<F>> out;
  for (std::size_t c = 0; c < count; ++c) {
    std::size_t na = d.between(p.min_vars, p.max_vars), nb = d.between(p.min_vars, p.max_vars);
    auto a = make_ring<F>(field, variable_names("x", na));
    auto b = make_ring<F>(field, variable_names("y", nb));
    auto pick_ideal = [&](std::size_t n) {
      bool max = p.ideals == IdealModel::irrelevant || (p.ideals == IdealModel::mixed && d.coin());
      return max ? MonomialIdeal::maximal(n) : random_monomial_ideal(d, n, p);
    };
    MonomialIdeal i = pick_ideal(na), j = pick_ideal(nb);
    MonomialIdeal jl = random_monomial_ideal(d, na, p), jn = random_monomial_ideal(d, nb, p);
    out.push_back(make_instance<F>("r" + std::to_string(p.seed) + "-" + std::to_string(c), a, b, i, j, jl, jn));
  }
  return out;
}

/// Random cyclic monomial modules over a single ring.
inline std::vector<MonomialIdeal> random_cyclic_ideals(const RandomModelParams& p, std::size_t count) {
  Draw d(p.seed);
  std::vector<MonomialIdeal> out;
  for (std::size_t c = 0; c < count; ++c) {
    std::size_t n = d.between(p.min_vars, p.max_vars);
    out.push_back(random_monomial_ideal(d, n, p));
  }
  return out;
}

}  // namespace tlc::harness

#endif  // TLC_HARNESS_INSTANCE_HPP
