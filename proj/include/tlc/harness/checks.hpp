#ifndef TLC_HARNESS_CHECKS_HPP
#define TLC_HARNESS_CHECKS_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlc/harness/instance.hpp"
#include "tlc/harness/report.hpp"

namespace tlc::harness {

inline std::string chain_text(const MonomialFiltration& f, const std::vector<std::string>& names) {
  std::string s = ideal_text(f.base, names);
  for (const auto& st : f.steps) s += " < " + ideal_text(st.ideal, names);
  return s;
}

inline std::vector<std::string> prime_strings(const std::vector<VarSet>& ps, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (VarSet p : ps) out.push_back(prime_to_string(p, names));
  std::sort(out.begin(), out.end());
  return out;
}

/// Lazily computed objects of one instance, shared by all checks on it.
template <FieldScalar F>
class Workspace {
 public:
  explicit Workspace(Instance<F> inst) : inst_(std::move(inst)), join_(join_rings(inst_.a, inst_.b)) {}

  const Instance<F>& instance() const { return inst_; }
  const RingJoin<F>& join() const { return join_; }
  FieldSpec field() const { return inst_.a->field(); }
  std::size_t left_vars() const { return inst_.a->nvars(); }
  std::size_t total_vars() const { return join_.joined->nvars(); }

  const ModulePresentation<F>& tensor() {
    if (!tensor_) tensor_ = tensor_modules(inst_.l, inst_.n, join_).module;
    return *tensor_;
  }
  /// I ⊗ B + A ⊗ J.
  MonomialIdeal script_i() const { return tensor_ideal(inst_.i, inst_.j, join_); }
  /// The defining ideal of L ⊗ N when both factors are cyclic monomial.
  MonomialIdeal tensor_module_ideal() const {
    return join_.embed_left(*inst_.left_ideal) + join_.embed_right(*inst_.right_ideal);
  }

  CechCohomology<F>& cech_left() { return cached(cech_l_, inst_.i, *inst_.left_ideal); }
  CechCohomology<F>& cech_right() { return cached(cech_r_, inst_.j, *inst_.right_ideal); }
  CechCohomology<F>& cech_tensor() { return cached(cech_t_, script_i(), tensor_module_ideal()); }

  DualityProfile<F>& profile_left() { return cached(prof_l_, inst_.l); }
  DualityProfile<F>& profile_right() { return cached(prof_r_, inst_.n); }
  DualityProfile<F>& profile_tensor() { return cached(prof_t_, tensor()); }

  const SeqCmVerdict& seq_left() { return cached(seq_l_, inst_.i, *inst_.left_ideal); }
  const SeqCmVerdict& seq_right() { return cached(seq_r_, inst_.j, *inst_.right_ideal); }
  const SeqCmVerdict& seq_tensor() { return cached(seq_t_, script_i(), tensor_module_ideal()); }

 private:
  CechCohomology<F>& cached(std::unique_ptr<CechCohomology<F>>& slot, const MonomialIdeal& i,
                            const MonomialIdeal& j) {
    if (!slot) slot = std::make_unique<CechCohomology<F>>(i, j, field());
    return *slot;
  }
  DualityProfile<F>& cached(std::unique_ptr<DualityProfile<F>>& slot, const ModulePresentation<F>& m) {
    if (!slot) slot = std::make_unique<DualityProfile<F>>(m);
    return *slot;
  }
  const SeqCmVerdict& cached(std::optional<SeqCmVerdict>& slot, const MonomialIdeal& i, const MonomialIdeal& j) {
    if (!slot) slot = is_seqCM_wrt<F>(i, j, field());
    return *slot;
  }

  Instance<F> inst_;
  RingJoin<F> join_;
  std::optional<ModulePresentation<F>> tensor_;
  std::unique_ptr<CechCohomology<F>> cech_l_, cech_r_, cech_t_;
  std::unique_ptr<DualityProfile<F>> prof_l_, prof_r_, prof_t_;
  std::optional<SeqCmVerdict> seq_l_, seq_r_, seq_t_;
};

template <FieldScalar F>
ReportBuilder builder(const std::string& theorem, Workspace<F>& ws, bool mutate) {
  const auto& inst = ws.instance();
  return ReportBuilder(theorem, inst.label, inst.digest(), inst.serialize(), mutate);
}

/// grade and cd additivity, the one-sided versions, and the IL != L criterion.
template <FieldScalar F>
std::vector<CheckReport> check_grade_cd_additivity(Workspace<F>& ws, bool mutate = false) {
  auto rb = builder("thm2.6", ws, mutate);
  const auto& inst = ws.instance();
  if (!inst.monomial()) {
    rb.skip("grade", "needs cyclic monomial factors");
    return rb.take();
  }
  auto& cl = ws.cech_left();
  auto& cn = ws.cech_right();
  auto& ct = ws.cech_tensor();
  rb.compare("grade", ct.grade(), "cech:join", cl.grade() + cn.grade(), "cech:factors");
  rb.compare("cd", ct.cd(), "cech:join", cl.cd() + cn.cd(), "cech:factors");
  const auto& join = ws.join();
  const MonomialIdeal jt = ws.tensor_module_ideal();
  CechCohomology<F> left_only(join.embed_left(inst.i), jt, ws.field());
  CechCohomology<F> right_only(join.embed_right(inst.j), jt, ws.field());
  if (!inst.right_ideal->is_unit()) {
    rb.compare("cor2.4a-grade", left_only.grade(), "cech:join", cl.grade(), "cech:left");
    rb.compare("cor2.4a-cd", left_only.cd(), "cech:join", cl.cd(), "cech:left");
  } else {
    rb.skip("cor2.4a-grade", "N is zero");
  }
  if (!inst.left_ideal->is_unit()) {
    rb.compare("cor2.4b-grade", right_only.grade(), "cech:join", cn.grade(), "cech:right");
    rb.compare("cor2.4b-cd", right_only.cd(), "cech:join", cn.cd(), "cech:right");
  } else {
    rb.skip("cor2.4b-grade", "L is zero");
  }
  bool tensor_proper = !(ws.script_i() + jt).is_unit();
  bool factors_proper = !(inst.i + *inst.left_ideal).is_unit() && !(inst.j + *inst.right_ideal).is_unit();
  rb.compare("rem2.3", tensor_proper, "ideal-sum:join", factors_proper, "ideal-sum:factors");
  return rb.take();
}

/// Multigraded pieces of H_𝓘(L⊗N) against products of factor pieces: the
/// corner indices, and the one-sided base change for every index.
template <FieldScalar F>
std::vector<CheckReport> check_corner_isomorphisms(Workspace<F>& ws, bool mutate = false) {
  auto rb = builder("prop2.5", ws, mutate);
  const auto& inst = ws.instance();
  if (!inst.monomial()) {
    rb.skip("corner-grade", "needs cyclic monomial factors");
    return rb.take();
  }
  const std::size_t na = ws.left_vars(), nt = ws.total_vars();
  const auto& join = ws.join();
  const MonomialIdeal jt = ws.tensor_module_ideal();
  auto& cl = ws.cech_left();
  auto& cn = ws.cech_right();
  auto& ct = ws.cech_tensor();
  auto split = [&](const Multidegree& c) {
    std::vector<int> a(c.values().begin(), c.values().begin() + static_cast<long>(na));
    std::vector<int> b(c.values().begin() + static_cast<long>(na), c.values().end());
    return std::make_pair(Multidegree(a), Multidegree(b));
  };
  // dim of (R/J)_c: c >= 0 and x^c outside J.
  auto module_piece = [](const MonomialIdeal& j, const Multidegree& c) {
    Monomial m;
    for (std::size_t v = 0; v < c.size(); ++v) {
      if (c[v] < 0) return 0L;
      m.set(v, c[v]);
    }
    return j.contains(m) ? 0L : 1L;
  };
  const WitnessBox box = WitnessBox::of({&jt}, nt);
  bool proper = !(inst.i + *inst.left_ideal).is_unit() && !(inst.j + *inst.right_ideal).is_unit();
  if (!proper) {
    rb.skip("corner-grade", "IL = L or JN = N");
    rb.skip("corner-cd", "IL = L or JN = N");
  } else {
    for (int which = 0; which < 2; ++which) {
      long tl = (which == 0 ? cl.grade() : cl.cd()).value();
      long tn = (which == 0 ? cn.grade() : cn.cd()).value();
      std::vector<long> lhs, rhs;
      box.for_each([&](const Multidegree& c) {
        auto [ca, cb] = split(c);
        lhs.push_back(ct.piece(static_cast<int>(tl + tn), c));
        rhs.push_back(static_cast<long>(cl.piece(static_cast<int>(tl), ca)) * cn.piece(static_cast<int>(tn), cb));
      });
      rb.compare(which == 0 ? "corner-grade" : "corner-cd", lhs, "cech:join", rhs, "cech:factors",
                 "index " + std::to_string(tl + tn) + " over " + std::to_string(box.size()) + " box points");
    }
  }
  CechCohomology<F> left_only(join.embed_left(inst.i), jt, ws.field());
  CechCohomology<F> right_only(join.embed_right(inst.j), jt, ws.field());
  std::vector<long> la, ra, lb, rbv;
  box.for_each([&](const Multidegree& c) {
    auto [ca, cb] = split(c);
    for (int t = 0; t <= left_only.length(); ++t) {
      la.push_back(left_only.piece(t, c));
      ra.push_back(cl.piece(t, ca) * module_piece(*inst.right_ideal, cb));
    }
    for (int t = 0; t <= right_only.length(); ++t) {
      lb.push_back(right_only.piece(t, c));
      rbv.push_back(module_piece(*inst.left_ideal, ca) * cn.piece(t, cb));
    }
  });
  rb.compare("lem2.2a", la, "cech:join", ra, "cech:left x module:right");
  rb.compare("lem2.2b", lb, "cech:join", rbv, "module:left x cech:right");
  return rb.take();
}

namespace detail {

inline std::vector<std::string> series_list(const std::vector<HilbertSeries>& v) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(std::to_string(i) + ":" + (v[i].is_zero() ? std::string("0") : v[i].to_string()));
  return out;
}

inline std::vector<HilbertSeries> convolve(const std::vector<HilbertSeries>& a, const std::vector<HilbertSeries>& b,
                                           std::size_t top, int nvars) {
  std::vector<HilbertSeries> out;
  for (std::size_t i = 0; i <= top; ++i) {
    HilbertSeries s({}, nvars);
    for (std::size_t p = 0; p <= i; ++p)
      if (p < a.size() && i - p < b.size()) s = s + a[p] * b[i - p];
    out.push_back(s);
  }
  return out;
}

template <FieldScalar F>
std::vector<HilbertSeries> series_of(const ExtTorTable<F>& t) {
  std::vector<HilbertSeries> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t[i].hilbert_series());
  return out;
}

}  // namespace detail

/// Hilbert series of Ext and Tor over the join against the convolution of the
/// factor series, with second arguments L2 over A and N2 over B.
template <FieldScalar F>
std::vector<CheckReport> check_kunneth(Workspace<F>& ws, const ModulePresentation<F>& l2,
                                       const ModulePresentation<F>& n2, bool mutate = false) {
  auto rb = builder("kunneth", ws, mutate);
  const auto& inst = ws.instance();
  const std::size_t na = inst.a->nvars(), nb = inst.b->nvars(), top = na + nb;
  const int nt = static_cast<int>(top);
  auto t2 = tensor_modules(l2, n2, ws.join()).module;
  const auto& t = ws.tensor();
  auto ext_l = ext_table(inst.l, l2, static_cast<int>(na));
  auto ext_n = ext_table(inst.n, n2, static_cast<int>(nb));
  auto ext_t = ext_table(t, t2, nt);
  rb.compare("ext", detail::series_list(detail::series_of(ext_t)), "ext:join",
             detail::series_list(detail::convolve(detail::series_of(ext_l), detail::series_of(ext_n), top, nt)),
             "ext:factors");
  auto tor_l = tor_table(inst.l, l2, static_cast<int>(na));
  auto tor_n = tor_table(inst.n, n2, static_cast<int>(nb));
  auto tor_t = tor_table(t, t2, nt);
  rb.compare("tor", detail::series_list(detail::series_of(tor_t)), "tor:join",
             detail::series_list(detail::convolve(detail::series_of(tor_l), detail::series_of(tor_n), top, nt)),
             "tor:factors");
  return rb.take();
}

/// Second arguments A/I and B/J.
template <FieldScalar F>
std::vector<CheckReport> check_kunneth(Workspace<F>& ws, bool mutate = false) {
  const auto& inst = ws.instance();
  auto l2 = ModulePresentation<F>::cyclic(inst.a, inst.i.generators());
  auto n2 = ModulePresentation<F>::cyclic(inst.b, inst.j.generators());
  return check_kunneth(ws, l2, n2, mutate);
}

/// f of the tensor at the irrelevant ideal against the min-formula, plus depth
/// and dimension additivity.
template <FieldScalar F>
std::vector<CheckReport> check_finiteness_formula(Workspace<F>& ws, bool mutate = false) {
  auto rb = builder("cor3.3", ws, mutate);
  if (!ws.instance().irrelevant()) {
    rb.skip("f-min", "f is computed only at the irrelevant ideals");
    return rb.take();
  }
  auto& pl = ws.profile_left();
  auto& pn = ws.profile_right();
  auto& pt = ws.profile_tensor();
  ExtendedInt rhs = std::min(pl.depth() + pn.finiteness_dim(), pl.finiteness_dim() + pn.depth());
  rb.compare("f-min", pt.finiteness_dim(), "duality:join", rhs, "duality+AB:factors");
  rb.compare("cor2.9a-depth", pt.depth(), "AB:join", pl.depth() + pn.depth(), "AB:factors");
  rb.compare("cor2.9b-dim", krull_dim(ws.tensor()), "hilbert:join",
             krull_dim(ws.instance().l) + krull_dim(ws.instance().n), "hilbert:factors");
  if (pt.dim() >= ExtendedInt(1))
    rb.compare("f-le-dim", pt.finiteness_dim() <= pt.dim(), "duality:join", true, "bound");
  return rb.take();
}

/// CM transfer under tensoring; the generalized-CM equivalence and the f-sum
/// at the irrelevant ideal.
template <FieldScalar F>
std::vector<CheckReport> check_cm_equivalences(Workspace<F>& ws, bool mutate = false) {
  auto rb = builder("prop3.4", ws, mutate);
  const auto& inst = ws.instance();
  if (inst.monomial()) {
    bool proper = !(inst.i + *inst.left_ideal).is_unit() && !(inst.j + *inst.right_ideal).is_unit();
    if (proper) {
      auto& cl = ws.cech_left();
      auto& cn = ws.cech_right();
      auto& ct = ws.cech_tensor();
      rb.compare("cor2.7", ct.grade() == ct.cd(), "cech:join", cl.grade() == cl.cd() && cn.grade() == cn.cd(),
                 "cech:factors");
    } else {
      rb.skip("cor2.7", "IL = L or JN = N");
    }
  }
  if (!inst.irrelevant()) {
    rb.skip("gen-iff-cm", "f is computed only at the irrelevant ideals");
    return rb.take();
  }
  auto cl = cm_class_m(ws.profile_left());
  auto cn = cm_class_m(ws.profile_right());
  auto ct = cm_class_m(ws.profile_tensor());
  if (!(cl.dim >= ExtendedInt(1) && cn.dim >= ExtendedInt(1))) {
    rb.skip("gen-iff-cm", "a factor has dimension below 1");
    return rb.take();
  }
  rb.compare("gen-iff-cm", ct.generalized_cm, "duality:join", ct.cohen_macaulay, "AB+hilbert:join");
  rb.compare("cm-iff-factors", ct.cohen_macaulay, "AB+hilbert:join", cl.cohen_macaulay && cn.cohen_macaulay,
             "AB+hilbert:factors");
  if (ct.cohen_macaulay)
    rb.compare("f-sum", ct.finiteness, "duality:join", cl.finiteness + cn.finiteness, "duality:factors");
  else
    rb.skip("f-sum", "tensor not CM");
  return rb.take();
}

/// Sequential CM transfer, the tensored filtration, and the f-sum for
/// positive grades.
template <FieldScalar F>
std::vector<CheckReport> check_seqCM_equivalence(Workspace<F>& ws, bool mutate = false) {
  auto rb = builder("thm4.6", ws, mutate);
  const auto& inst = ws.instance();
  if (!inst.monomial()) {
    rb.skip("equivalence", "needs cyclic monomial factors");
    return rb.take();
  }
  const auto& sl = ws.seq_left();
  const auto& sn = ws.seq_right();
  const auto& st = ws.seq_tensor();
  const auto& names = ws.join().joined->names();
  rb.compare("equivalence", st.sequentially_cm, "filtration:join", sl.sequentially_cm && sn.sequentially_cm,
             "filtration:factors");
  if (inst.i.is_unit() || inst.j.is_unit()) {
    rb.skip("lemma4.5-chain", "unit ideal: every cd is -inf");
  } else {
    auto chain = tensor_filtration(sl.filtration, sn.filtration, ws.join());
    rb.compare("lemma4.5-chain", chain_text(chain, names), "tensored filtrations",
               chain_text(st.filtration, names), "filtration:join",
               "lengths " + std::to_string(sl.filtration.length()) + "," + std::to_string(sn.filtration.length()) +
                   "; cd-sum chain " +
                   (tensor_filtration_by_cd(sl.filtration, sn.filtration, ws.join()).same_chain(st.filtration)
                        ? "agrees"
                        : "differs"));
  }
  const MonomialIdeal jt = ws.tensor_module_ideal();
  auto one_sided = is_seqCM_wrt<F>(ws.join().embed_left(inst.i), jt, ws.field());
  rb.compare("cor4.7", one_sided.sequentially_cm, "filtration:join", sl.sequentially_cm, "filtration:left");
  if (inst.irrelevant()) {
    rb.compare("duality-agrees", cm_class_m(ws.profile_tensor()).sequentially_cm, "duality:join",
               st.sequentially_cm, "filtration:join");
    auto& pl = ws.profile_left();
    auto& pn = ws.profile_right();
    if (sl.sequentially_cm && sn.sequentially_cm && pl.depth() > ExtendedInt(0) && pn.depth() > ExtendedInt(0))
      rb.compare("prop4.10-f", ws.profile_tensor().finiteness_dim(), "duality:join",
                 pl.finiteness_dim() + pn.finiteness_dim(), "duality:factors");
    else
      rb.skip("prop4.10-f", "needs seq-CM factors of positive depth");
  }
  return rb.take();
}

namespace detail {

/// Per step: Ass(D_k / D_{k-1}) against the primes of Ass(M) with cd = cd(D_k).
template <FieldScalar F>
std::pair<std::vector<std::string>, std::vector<std::string>> filtration_ass(
    const MonomialIdeal& i, const MonomialFiltration& f, const std::vector<std::string>& names, FieldSpec field) {
  std::vector<std::string> lhs, rhs;
  auto ass = associated_primes(f.base);
  auto cds = prime_cds<F>(i, ass, field);
  for (std::size_t k = 1; k <= f.length(); ++k) {
    std::string tag = "D" + std::to_string(k) + ":";
    auto q = prime_strings(associated_primes(f.ideal(k), f.ideal(k - 1)), names);
    std::vector<VarSet> sel;
    for (VarSet p : ass)
      if (cds.at(p) == f.steps[k - 1].cd) sel.push_back(p);
    auto e = prime_strings(sel, names);
    lhs.push_back(tag + render(Side(q)));
    rhs.push_back(tag + render(Side(e)));
  }
  return {lhs, rhs};
}

}  // namespace detail

/// Ass of the tensor against sums of factor primes, and the filtration
/// quotient formula on all three dimension filtrations.
template <FieldScalar F>
std::vector<CheckReport> check_associated_primes(Workspace<F>& ws, bool mutate = false) {
  auto rb = builder("fact4.4", ws, mutate);
  const auto& inst = ws.instance();
  if (!inst.monomial()) {
    rb.skip("ass-sum", "needs cyclic monomial factors");
    return rb.take();
  }
  const auto& names = ws.join().joined->names();
  auto ass_t = associated_primes(ws.tensor_module_ideal());
  std::vector<VarSet> sums;
  const std::size_t na = ws.left_vars();
  for (VarSet p : associated_primes(*inst.left_ideal))
    for (VarSet q : associated_primes(*inst.right_ideal)) sums.push_back(p | (q << na));
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  rb.compare("ass-sum", prime_strings(ass_t, names), "decomposition:join", prime_strings(sums, names),
             "decomposition:factors");
  auto [ll, lr] = detail::filtration_ass<F>(inst.i, ws.seq_left().filtration, inst.a->names(), ws.field());
  rb.compare("fact4.2-L", ll, "subquotient-ass", lr, "prime-cd selection");
  auto [nl, nr] = detail::filtration_ass<F>(inst.j, ws.seq_right().filtration, inst.b->names(), ws.field());
  rb.compare("fact4.2-N", nl, "subquotient-ass", nr, "prime-cd selection");
  auto [tl, tr] = detail::filtration_ass<F>(ws.script_i(), ws.seq_tensor().filtration, names, ws.field());
  rb.compare("fact4.2-T", tl, "subquotient-ass", tr, "prime-cd selection");
  return rb.take();
}

/// depth, dim, f, seq-CM and graded local duality for R/J at the irrelevant
/// ideal through the resolution, Ext and Čech backends.
template <FieldScalar F>
std::vector<CheckReport> check_oracle_agreement(const RingPtr<F>& ring, const MonomialIdeal& j,
                                                const std::string& label, bool mutate = false) {
  const std::size_t n = ring->nvars();
  std::string text = "ring A = " + ring->to_string() + ";\nideal JL = " + ideal_text(j, ring->names()) +
                     " in A;\nmodule L = A/JL;\n";
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(h));
  ReportBuilder rb("oracle", label, digest, text, mutate);
  auto m = ModulePresentation<F>::cyclic(ring, j.generators());
  DualityProfile<F> prof(m);
  const auto maximal = MonomialIdeal::maximal(n);
  CechCohomology<F> cech(maximal, j, ring->field());
  rb.compare("depth-ext", prof.depth(), "AB", grade_via_ext(irrelevant_ideal(ring), m), "ext-vanishing");
  rb.compare("depth-cech", prof.depth(), "AB", cech.grade(), "cech");
  rb.compare("dim-cech", krull_dim(m), "hilbert", cech.cd(), "cech");
  rb.compare("f-cech", prof.finiteness_dim(), "duality", finiteness_dim_cech<F>(MonomialIdeal::unit(n), j, ring->field()),
             "cech");
  auto cls = cm_class_m(prof);
  rb.compare("seqcm-filtration", cls.sequentially_cm, "duality",
             j.is_unit() ? true : is_seqCM_wrt<F>(maximal, j, ring->field()).sequentially_cm, "filtration");
  if (!prof.is_zero_module()) {
    rb.compare("auslander-buchsbaum", prof.depth() + prof.resolution().projective_dimension(), "AB",
               ExtendedInt(static_cast<long>(n)), "nvars");
    // dim H^i_m(M)_d against the coefficient of t^{-d-n} in HS(Ext^{n-i}(M, R)).
    int top = 0;
    for (int e : cech.box().upper()) top += e;
    std::vector<long> lhs, rhs;
    for (int i = 0; i <= static_cast<int>(n); ++i)
      for (int d = -static_cast<int>(n) - 3; d <= top; ++d) {
        lhs.push_back(cech.graded_dimension(i, d));
        rhs.push_back(prof.ext()[n - static_cast<std::size_t>(i)].hilbert_series().coefficient(-d - static_cast<int>(n)));
      }
    rb.compare("local-duality", lhs, "cech", rhs, "ext-dual");
  }
  return rb.take();
}

}  // namespace tlc::harness

#endif  // TLC_HARNESS_CHECKS_HPP
