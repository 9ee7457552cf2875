#ifndef TLC_PRESENTATION_HPP
#define TLC_PRESENTATION_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlc/groebner.hpp"
#include "tlc/hilbert.hpp"

namespace tlc {

namespace detail {
template <FieldScalar F>
struct PresentationCache {
  std::once_flag once;
  std::optional<GroebnerBasis<F>> basis;
};
}  // namespace detail

/// Finitely generated graded module coker(relations: G -> F0). The reduced
/// Gröbner basis of the relation span is computed on first use and shared by
/// copies.
template <FieldScalar F>
class ModulePresentation {
 public:
  ModulePresentation() = default;
  explicit ModulePresentation(Matrix<F> relations)
      : relations_(std::move(relations)),
        cache_(std::make_shared<detail::PresentationCache<F>>()) {}

  /// Free module with the given generator degrees.
  static ModulePresentation free(const RingPtr<F>& ring, std::vector<int> degrees) {
    return ModulePresentation(Matrix<F>(FreeModule<F>(ring, std::move(degrees)), {}, {}));
  }
  /// R/(gens), generated in degree `shift`.
  static ModulePresentation cyclic(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
                                   int shift = 0) {
    std::vector<FreeModuleElement<F>> cols;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      if (!g.is_homogeneous()) throw InhomogeneousInput("inhomogeneous ideal generator");
      if (!same_ring(g.ring(), ring)) throw RingError("generator from a different ring");
      cols.push_back(FreeModuleElement<F>::from_polynomial(g));
    }
    return ModulePresentation(Matrix<F>::from_columns(FreeModule<F>(ring, {shift}), std::move(cols)));
  }
  /// R/(monomials) with unit coefficients.
  static ModulePresentation cyclic(const RingPtr<F>& ring, const std::vector<Monomial>& gens) {
    std::vector<Polynomial<F>> ps;
    for (const auto& m : gens) ps.push_back(Polynomial<F>::monomial(ring, m, ring->one()));
    return cyclic(ring, ps);
  }

  const Matrix<F>& relations() const { return relations_; }
  const RingPtr<F>& ring() const { return relations_.ring(); }
  const FreeModule<F>& generators() const { return relations_.target(); }
  std::size_t num_generators() const { return relations_.rows(); }

  const GroebnerBasis<F>& groebner() const {
    std::call_once(cache_->once, [&] {
      std::vector<FreeModuleElement<F>> cols;
      for (const auto& c : relations_.columns())
        if (!c.is_zero()) cols.push_back(c);
      cache_->basis = groebner_basis(relations_.target(), cols);
    });
    return *cache_->basis;
  }

  /// Sum over generators of t^deg * HS(R / in(relations) in that component).
  HilbertSeries hilbert_series() const {
    const auto& gb = groebner();
    auto leads = gb.lead_monomials();
    const int n = static_cast<int>(ring()->nvars());
    HilbertSeries total({}, n);
    for (std::size_t c = 0; c < num_generators(); ++c)
      total = total + HilbertSeries(k_polynomial(leads[c]).shifted(generators().degree(c)), n);
    return total;
  }

  /// Zero iff every unit vector reduces to zero.
  bool is_zero() const {
    const auto& gb = groebner();
    F one = ring()->one();
    for (std::size_t c = 0; c < num_generators(); ++c)
      if (!gb.contains(FreeModuleElement<F>::basis(static_cast<int>(c), one))) return false;
    return true;
  }

  /// Single generator in degree 0 whose relations are monomials: R/J with J
  /// monomial. Returns the monomials of J.
  std::optional<std::vector<Monomial>> as_monomial_cyclic() const {
    if (num_generators() != 1 || generators().degree(0) != 0) return std::nullopt;
    std::vector<Monomial> gens;
    for (const auto& c : relations_.columns()) {
      if (c.is_zero()) continue;
      if (c.size() != 1) return std::nullopt;
      gens.push_back(c.lead().mono);
    }
    return gens;
  }

  std::string to_string() const {
    if (relations_.cols() == 0 && num_generators() == 1 && generators().degree(0) == 0)
      return ring()->to_string();
    std::string s = "coker(" + ring()->to_string() + ", twists (";
    for (std::size_t c = 0; c < num_generators(); ++c) {
      if (c) s += ",";
      s += std::to_string(generators().degree(c));
    }
    s += "), [";
    for (std::size_t j = 0; j < relations_.cols(); ++j) {
      if (j) s += ", ";
      s += relations_.columns()[j].to_string(ring(), num_generators());
    }
    return s + "])";
  }

 private:
  Matrix<F> relations_;
  std::shared_ptr<detail::PresentationCache<F>> cache_;
};

/// Hilbert series of F0 / span(gens).
template <FieldScalar F>
HilbertSeries quotient_series(const FreeModule<F>& ambient, const std::vector<FreeModuleElement<F>>& gens) {
  std::vector<FreeModuleElement<F>> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  auto gb = groebner_basis(ambient, nz);
  auto leads = gb.lead_monomials();
  const int n = static_cast<int>(ambient.ring()->nvars());
  HilbertSeries total({}, n);
  for (std::size_t c = 0; c < ambient.rank(); ++c)
    total = total + HilbertSeries(k_polynomial(leads[c]).shifted(ambient.degree(c)), n);
  return total;
}

template <FieldScalar F>
HilbertSeries hilbert_series(const ModulePresentation<F>& m) {
  return m.hilbert_series();
}

}  // namespace tlc

#endif  // TLC_PRESENTATION_HPP
