#ifndef TLC_HARNESS_SUITE_HPP
#define TLC_HARNESS_SUITE_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlc/harness/checks.hpp"

namespace tlc::harness {

inline MonomialIdeal parse_monomials(std::size_t n, const std::vector<std::vector<int>>& gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) {
    Monomial m;
    for (std::size_t v = 0; v < g.size() && v < n; ++v) m.set(v, g[v]);
    ms.push_back(m);
  }
  return MonomialIdeal(n, std::move(ms));
}

/// L = k[x1,x2]/(x1^2, x1x2), N = k[y1,y2]/(y1), at the irrelevant ideals.
template <FieldScalar F>
Instance<F> example_instance(FieldSpec field = {}) {
  auto a = make_ring<F>(field, variable_names("x", 2));
  auto b = make_ring<F>(field, variable_names("y", 2));
  return make_instance<F>("example-3.7", a, b, MonomialIdeal::maximal(2), MonomialIdeal::maximal(2),
                          parse_monomials(2, {{2, 0}, {1, 1}}), parse_monomials(2, {{1, 0}}));
}

/// Unit ideals and zero modules.
template <FieldScalar F>
std::vector<Instance<F>> degenerate_instances(FieldSpec field = {}) {
  struct Spec {
    std::size_t na, nb;
    std::vector<std::vector<int>> i, j, jl, jn;  // {{0...}} is the unit ideal; {} is maximal for i, j
  };
  const std::vector<int> one2{0, 0}, one1{0};
  const std::vector<Spec> specs = {
      {2, 2, {one2}, {}, {{2, 0}, {1, 1}}, {{1, 0}}},
      {2, 2, {}, {one2}, {{2, 0}, {1, 1}}, {{1, 0}}},
      {2, 2, {one2}, {one2}, {{2, 0}, {1, 1}}, {{1, 0}}},
      {2, 2, {one2}, {{1, 0}}, {{1, 1}}, {{0, 2}}},
      {2, 2, {}, {}, {one2}, {{1, 0}}},
      {2, 2, {}, {}, {one2}, {one2}},
      {2, 2, {one2}, {}, {one2}, {{1, 1}}},
      {2, 2, {{1, 0}}, {one2}, {{0, 1}}, {{1, 1}}},
      {1, 1, {one1}, {{1}}, {{2}}, {{3}}},
      {2, 2, {{0, 1}}, {{2, 0}}, {one2}, {{1, 1}}},
      {3, 1, {{0, 0, 0}}, {}, {{1, 1, 0}, {0, 1, 1}}, {{2}}},
      {1, 2, {{1}}, {one2}, {{1}}, {{2, 0}, {0, 2}}},
  };
  std::vector<Instance<F>> out;
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const auto& s = specs[k];
    auto a = make_ring<F>(field, variable_names("x", s.na));
    auto b = make_ring<F>(field, variable_names("y", s.nb));
    auto ideal = [](std::size_t n, const std::vector<std::vector<int>>& g) {
      return g.empty() ? MonomialIdeal::maximal(n) : parse_monomials(n, g);
    };
    out.push_back(make_instance<F>("degenerate-" + std::to_string(k + 1), a, b, ideal(s.na, s.i), ideal(s.nb, s.j),
                                   parse_monomials(s.na, s.jl), parse_monomials(s.nb, s.jn)));
  }
  return out;
}

/// The worked example as eight exact comparisons against its published values.
template <FieldScalar F>
std::vector<CheckReport> check_example(bool mutate = false, FieldSpec field = {}) {
  Workspace<F> ws(example_instance<F>(field));
  auto rb = builder("example-3.7", ws, mutate);
  auto& pl = ws.profile_left();
  auto& pn = ws.profile_right();
  auto& pt = ws.profile_tensor();
  auto cl = cm_class_m(pl), cn = cm_class_m(pn), ct = cm_class_m(pt);
  auto yes = [](bool b) { return std::string(b ? "true" : "false"); };
  rb.compare("L-depth", pl.depth(), "AB", ExtendedInt(0), "published");
  rb.compare("L-dim", krull_dim(ws.instance().l), "hilbert", ExtendedInt(1), "published");
  rb.compare("L-f", pl.finiteness_dim(), "duality", ExtendedInt(1), "published");
  rb.compare("L-class", "CM=" + yes(cl.cohen_macaulay) + " seqCM=" + yes(ws.seq_left().sequentially_cm),
             "AB+hilbert, filtration", std::string("CM=false seqCM=true"), "published");
  rb.compare("N-class",
             "CM=" + yes(cn.cohen_macaulay) + " dim=" + krull_dim(ws.instance().n).to_string() +
                 " f=" + pn.finiteness_dim().to_string() + " seqCM=" + yes(ws.seq_right().sequentially_cm),
             "AB+hilbert, duality, filtration", std::string("CM=true dim=1 f=1 seqCM=true"), "published");
  rb.compare("T-dim", krull_dim(ws.tensor()), "hilbert:join", ExtendedInt(2), "published");
  auto fsum = pl.finiteness_dim() + pn.finiteness_dim();
  rb.compare("T-f", std::vector<long>{pt.finiteness_dim().value(), fsum.value()}, "duality:join, duality:factors",
             std::vector<long>{1, 2}, "published", "f(T) differs from f(L) + f(N)");
  rb.compare("T-class", "genCM=" + yes(ct.generalized_cm) + " seqCM=" + yes(ws.seq_tensor().sequentially_cm),
             "duality:join, filtration:join", std::string("genCM=false seqCM=true"), "published");
  return rb.take();
}

/// Checks applied to every instance of a suite.
enum CheckSet : unsigned {
  kThm26 = 1u << 0,
  kCorner = 1u << 1,
  kKunneth = 1u << 2,
  kCor33 = 1u << 3,
  kProp34 = 1u << 4,
  kThm46 = 1u << 5,
  kFact44 = 1u << 6,
  kAllChecks = 0x7fu,
};

template <FieldScalar F>
std::vector<CheckReport> run_checks(Instance<F> inst, unsigned set, bool mutate = false) {
  Workspace<F> ws(std::move(inst));
  std::vector<CheckReport> out;
  auto add = [&](std::vector<CheckReport> v) {
    for (auto& r : v) out.push_back(std::move(r));
  };
  if (set & kThm26) add(check_grade_cd_additivity(ws, mutate));
  if (set & kCorner) add(check_corner_isomorphisms(ws, mutate));
  if (set & kKunneth) add(check_kunneth(ws, mutate));
  if (set & kCor33) add(check_finiteness_formula(ws, mutate));
  if (set & kProp34) add(check_cm_equivalences(ws, mutate));
  if (set & kThm46) add(check_seqCM_equivalence(ws, mutate));
  if (set & kFact44) add(check_associated_primes(ws, mutate));
  return out;
}

/// Reports of the example and of every check on the degenerate instances.
template <FieldScalar F>
std::vector<CheckReport> golden_reports(bool mutate = false, FieldSpec field = {}) {
  auto out = check_example<F>(mutate, field);
  for (auto& inst : degenerate_instances<F>(field))
    for (auto& r : run_checks<F>(std::move(inst), kAllChecks, mutate)) out.push_back(std::move(r));
  return out;
}

struct SuiteParams {
  std::uint64_t seed = 1;
  /// 0 selects the suite default.
  std::size_t count = 0;
  FieldSpec field{};
  bool mutate = false;
};

struct SuiteInfo {
  std::string id;
  std::size_t default_count;
  std::string description;
};

inline const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> c = {
      {"example-3.7", 1, "worked example against its published values"},
      {"golden", 13, "all checks on the example and the degenerate instances"},
      {"thm-2.6-random-200", 200, "grade/cd additivity on random monomial pairs plus degenerate instances"},
      {"oracle-agreement", 200, "depth, dim, f and seq-CM through independent backends"},
      {"cor-3.3-random", 100, "f of the tensor at the irrelevant ideal"},
      {"prop-3.4-random", 100, "CM and generalized CM transfer"},
      {"thm-4.6-random", 100, "sequential CM transfer and the tensored filtration"},
      {"fact-4.4-random", 100, "associated primes of tensors and filtration quotients"},
      {"kunneth-small", 25, "Ext and Tor Hilbert series convolution"},
      {"corner-random", 25, "corner and base-change pieces of local cohomology"},
  };
  return c;
}

inline const SuiteInfo& suite_info(const std::string& id) {
  for (const auto& s : suite_catalog())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown suite id '" + id + "'");
}

/// Runs a suite, writing each report to the sink in a fixed order, then the
/// summary line.
template <FieldScalar F>
Summary run_suite_in(const std::string& id, const SuiteParams& p, ReportSink& sink,
                     std::vector<CheckReport>* keep = nullptr) {
  const SuiteInfo& info = suite_info(id);
  const std::size_t count = p.count ? p.count : info.default_count;
  Summary sum;
  auto emit = [&](std::vector<CheckReport> v) {
    for (auto& r : v) {
      sum.add(r);
      sink.write(r);
      if (keep) keep->push_back(std::move(r));
    }
  };
  RandomModelParams rp;
  rp.seed = p.seed;
  auto random_run = [&](IdealModel model, std::size_t max_vars, unsigned set) {
    rp.ideals = model;
    rp.max_vars = max_vars;
    for (auto& inst : random_instances<F>(rp, count, p.field)) emit(run_checks<F>(std::move(inst), set, p.mutate));
  };
  if (id == "example-3.7") {
    emit(check_example<F>(p.mutate, p.field));
  } else if (id == "golden") {
    emit(golden_reports<F>(p.mutate, p.field));
  } else if (id == "thm-2.6-random-200") {
    random_run(IdealModel::monomial, 3, kThm26);
    for (auto& inst : degenerate_instances<F>(p.field)) emit(run_checks<F>(std::move(inst), kThm26, p.mutate));
  } else if (id == "oracle-agreement") {
    rp.max_vars = 3;
    std::size_t c = 0;
    for (const auto& j : random_cyclic_ideals(rp, count)) {
      auto ring = make_ring<F>(p.field, variable_names("x", j.nvars()));
      emit(check_oracle_agreement<F>(ring, j, "c" + std::to_string(p.seed) + "-" + std::to_string(c++), p.mutate));
    }
  } else if (id == "cor-3.3-random") {
    random_run(IdealModel::irrelevant, 3, kCor33);
  } else if (id == "prop-3.4-random") {
    random_run(IdealModel::irrelevant, 3, kProp34);
  } else if (id == "thm-4.6-random") {
    random_run(IdealModel::mixed, 3, kThm46 | kFact44);
  } else if (id == "fact-4.4-random") {
    random_run(IdealModel::mixed, 3, kFact44);
  } else if (id == "kunneth-small") {
    random_run(IdealModel::mixed, 2, kKunneth);
  } else if (id == "corner-random") {
    random_run(IdealModel::mixed, 3, kCorner | kThm26);
  }
  sink.write_summary(id, sum);
  return sum;
}

/// Dispatches on the field: rationals for characteristic 0, else a prime field.
inline Summary run_suite(const std::string& id, const SuiteParams& p, ReportSink& sink,
                         std::vector<CheckReport>* keep = nullptr) {
  if (p.field.characteristic == 0) return run_suite_in<Rational>(id, p, sink, keep);
  return run_suite_in<PrimeField>(id, p, sink, keep);
}

}  // namespace tlc::harness

#endif  // TLC_HARNESS_SUITE_HPP
