#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "valgb/coeff.hpp"
#include "valgb/error.hpp"
#include "valgb/ext_int.hpp"
#include "valgb/monomial.hpp"
#include "valgb/polynomial.hpp"

namespace valgb {

using WeightVector = std::vector<std::int64_t>;

/// The pair (w, term order) that fixes initial forms and leading terms.
struct WeightedOrder {
    WeightVector w;
    TermOrder prec;

    WeightedOrder(WeightVector weights, TermOrder order) : w(std::move(weights)), prec(std::move(order)) {
        if (w.size() != prec.nvars()) throw DomainError("weight vector length differs from the variable count");
    }

    std::size_t nvars() const { return w.size(); }

    std::int64_t dot(const Monomial& u) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * static_cast<std::int64_t>(u[i]);
        return s;
    }
};

/// W = trop(f)(w), lm(f) and lc(f). lc lives in K, not in the residue field.
template <CoefficientDomain F>
struct LeadingData {
    ExtInt weight;
    Monomial lm;
    typename F::scalar_type lc;
};

/// val(c) + w.u for a single nonzero term.
template <CoefficientDomain F>
ExtInt term_weight(const F& field, const typename F::scalar_type& c, const Monomial& u, const WeightVector& w) {
    ExtInt v = field.val(c);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * static_cast<std::int64_t>(u[i]);
    return v + ExtInt(s);
}

template <CoefficientDomain F>
ExtInt trop_weight(const Polynomial<F>& f, const WeightVector& w) {
    if (f.is_zero()) throw DomainError("trop_weight: zero polynomial");
    if (w.size() != f.nvars()) throw DomainError("trop_weight: weight length differs from the variable count");
    ExtInt best = ExtInt::infinity();
    for (const auto& t : f.terms()) best = std::min(best, term_weight(f.field(), t.coeff, t.mono, w));
    return best;
}

namespace detail {

/// residue(phi(-val(c)) * c) for c != 0.
template <CoefficientDomain F>
auto unit_residue(const F& field, const typename F::scalar_type& c) {
    const std::int64_t v = field.val(c).value();
    if constexpr (std::is_same_v<F, ModPmRing>) {
        return field.residue(field.shift_down(c, v));
    } else {
        if (v == 0) return field.residue(c);
        return field.residue(field.mul(field.phi(-v), c));
    }
}

}  // namespace detail

/// in_w(f): the residue-field polynomial of the terms attaining trop(f)(w),
/// each coefficient rescaled by phi(-val(c)).
template <CoefficientDomain F>
Polynomial<typename F::residue_field_type> initial_form(const Polynomial<F>& f, const WeightVector& w) {
    const ExtInt W = trop_weight(f, w);
    using R = typename F::residue_field_type;
    const R residue = f.field().residue_field();
    std::vector<typename Polynomial<R>::Term> terms;
    for (const auto& t : f.terms()) {
        if (term_weight(f.field(), t.coeff, t.mono, w) == W) {
            terms.push_back({t.mono, detail::unit_residue(f.field(), t.coeff)});
        }
    }
    return Polynomial<R>::from_terms(residue, f.nvars(), std::move(terms));
}

template <CoefficientDomain F>
LeadingData<F> leading_data(const Polynomial<F>& f, const WeightedOrder& ord) {
    if (f.is_zero()) throw DomainError("leading_data: zero polynomial");
    if (ord.nvars() != f.nvars()) throw DomainError("leading_data: order has wrong number of variables");
    const auto& terms = f.terms();
    std::size_t best = 0;
    ExtInt best_w = term_weight(f.field(), terms[0].coeff, terms[0].mono, ord.w);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        ExtInt wi = term_weight(f.field(), terms[i].coeff, terms[i].mono, ord.w);
        if (wi < best_w || (wi == best_w && ord.prec.greater(terms[i].mono, terms[best].mono))) {
            best = i;
            best_w = wi;
        }
    }
    return {best_w, terms[best].mono, terms[best].coeff};
}

/// Result of the polynomial comparison. EqualRank covers distinct
/// polynomials with identical leading keys: the comparison is a preorder.
enum class PolyOrdering { Less, EqualRank, Greater };

/// Compares leading keys: smaller weight is smaller; on equal weight the
/// polynomial with the larger leading monomial is smaller.
template <CoefficientDomain F>
PolyOrdering compare_leading(const LeadingData<F>& a, const LeadingData<F>& b, const TermOrder& prec) {
    if (a.weight < b.weight) return PolyOrdering::Less;
    if (b.weight < a.weight) return PolyOrdering::Greater;
    auto c = prec.compare(a.lm, b.lm);
    if (c > 0) return PolyOrdering::Less;
    if (c < 0) return PolyOrdering::Greater;
    return PolyOrdering::EqualRank;
}

/// f < g in the valuation-aware order; every nonzero f is below 0.
template <CoefficientDomain F>
PolyOrdering compare(const Polynomial<F>& f, const Polynomial<F>& g, const WeightedOrder& ord) {
    if (f.is_zero() && g.is_zero()) return PolyOrdering::EqualRank;
    if (g.is_zero()) return PolyOrdering::Less;
    if (f.is_zero()) return PolyOrdering::Greater;
    return compare_leading(leading_data(f, ord), leading_data(g, ord), ord.prec);
}

/// f >= g (Greater or EqualRank).
template <CoefficientDomain F>
bool at_least(const Polynomial<F>& f, const Polynomial<F>& g, const WeightedOrder& ord) {
    return compare(f, g, ord) != PolyOrdering::Less;
}

}  // namespace valgb
