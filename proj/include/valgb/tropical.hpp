#pragma once

// Initial ideals over the residue field and membership of a weight vector in
// the tropical variety of a homogeneous ideal: w is a tropical point exactly
// when in_w(I) contains no monomial, i.e. its saturation by x_1 ... x_n is a
// proper ideal. Only integral weights are tested.

#include <cstddef>
#include <numeric>
#include <vector>

#include "valgb/buchberger.hpp"
#include "valgb/error.hpp"
#include "valgb/polynomial.hpp"
#include "valgb/worder.hpp"

namespace valgb {

/// Generators of an ideal over a residue field.
template <CoefficientDomain R>
struct ResidueIdeal {
    std::size_t nvars = 0;
    std::vector<Polynomial<R>> generators;
};

/// in_w(I): the initial forms of the reduced basis of <gens> for `ord`.
template <CoefficientDomain F>
ResidueIdeal<typename F::residue_field_type> initial_ideal(const std::vector<Polynomial<F>>& gens,
                                                           const WeightedOrder& ord) {
    ResidueIdeal<typename F::residue_field_type> out{ord.nvars(), {}};
    for (const auto& g : reduced_groebner_basis(gens, ord).elements) out.generators.push_back(initial_form(g, ord.w));
    return out;
}

/// Initial forms of the given polynomials only; no homogeneity needed.
template <CoefficientDomain F>
ResidueIdeal<typename F::residue_field_type> initial_forms(const std::vector<Polynomial<F>>& gens,
                                                           const WeightVector& w) {
    ResidueIdeal<typename F::residue_field_type> out{w.size(), {}};
    for (const auto& g : gens) {
        if (!g.is_zero()) out.generators.push_back(initial_form(g, w));
    }
    return out;
}

/// Grevlex with x_last as the smallest variable, the others in index order.
inline TermOrder grevlex_with_last(std::size_t n, std::size_t last) {
    std::vector<std::size_t> prio;
    for (std::size_t i = 0; i < n; ++i) {
        if (i != last) prio.push_back(i);
    }
    prio.push_back(last);
    return {OrderKind::GrevLex, prio};
}

/// Generators of (M : x_v^inf): a grevlex basis with x_v last, each element
/// divided by the largest power of x_v dividing it. Sets `changed` when some
/// element was divisible.
template <CoefficientDomain R>
std::vector<Polynomial<R>> saturate_by_variable(const std::vector<Polynomial<R>>& gens, std::size_t n, std::size_t v,
                                                bool& changed) {
    const WeightedOrder ord(WeightVector(n, 0), grevlex_with_last(n, v));
    std::vector<Polynomial<R>> out;
    for (const auto& g : reduced_groebner_basis(gens, ord).elements) {
        auto k = g.terms().front().mono[v];
        for (const auto& t : g.terms()) k = std::min(k, t.mono[v]);
        if (k == 0) {
            out.push_back(g);
            continue;
        }
        changed = true;
        Monomial divisor(n);
        divisor[v] = k;
        std::vector<typename Polynomial<R>::Term> terms;
        for (const auto& t : g.terms()) terms.push_back({t.mono / divisor, t.coeff});
        out.push_back(Polynomial<R>::from_terms(g.field(), n, std::move(terms)));
    }
    return out;
}

/// True iff the homogeneous ideal contains a monomial. The variables are
/// saturated one at a time in `variable_order` (all of them, in index order,
/// when empty) until a pass changes nothing; the ideal contains a monomial
/// iff the saturation holds a nonzero constant.
template <CoefficientDomain R>
bool contains_monomial(const ResidueIdeal<R>& M, std::vector<std::size_t> variable_order = {}) {
    const std::size_t n = M.nvars;
    std::vector<Polynomial<R>> gens;
    for (const auto& g : M.generators) {
        if (!g.is_homogeneous()) throw DomainError("contains_monomial: generator is not homogeneous");
        if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) return false;
    if (variable_order.empty()) {
        variable_order.resize(n);
        std::iota(variable_order.begin(), variable_order.end(), std::size_t{0});
    }
    auto has_constant = [](const std::vector<Polynomial<R>>& G) {
        return std::any_of(G.begin(), G.end(), [](const Polynomial<R>& g) { return g.homogeneous_degree() == 0u; });
    };
    if (has_constant(gens)) return true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v : variable_order) {
            gens = saturate_by_variable(gens, n, v, changed);
            if (has_constant(gens)) return true;
        }
    }
    return false;
}

/// w lies in the tropical variety of <gens> iff in_w(<gens>) has no monomial.
template <CoefficientDomain F>
bool in_tropical_variety(const std::vector<Polynomial<F>>& gens, const WeightVector& w, const TermOrder& prec) {
    return !contains_monomial(initial_ideal(gens, WeightedOrder(w, prec)));
}

}  // namespace valgb
