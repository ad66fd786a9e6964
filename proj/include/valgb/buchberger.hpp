#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "valgb/error.hpp"
#include "valgb/normal_form.hpp"
#include "valgb/polynomial.hpp"
#include "valgb/reduction.hpp"
#include "valgb/worder.hpp"

namespace valgb {

/// lc(g) (l/lm f) f - lc(f) (l/lm g) g with l = lcm(lm f, lm g).
template <CoefficientDomain F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g, const WeightedOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw DomainError("s_polynomial: zero input");
    const auto lf = leading_data(f, ord);
    const auto lg = leading_data(g, ord);
    const Monomial l = Monomial::lcm(lf.lm, lg.lm);
    const Polynomial<F> zero(f.field(), f.nvars());
    return zero.add_scaled(lg.lc, l / lf.lm, f).sub_scaled(lf.lc, l / lg.lm, g);
}

struct CriticalPair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint64_t degree;
};

inline CriticalPair critical_pair(std::size_t i, std::size_t j, const std::vector<Monomial>& lms) {
    if (i > j) std::swap(i, j);
    Monomial l = Monomial::lcm(lms[i], lms[j]);
    const auto d = l.degree();
    return {i, j, std::move(l), d};
}

/// B1: the leading monomials are coprime, so the S-polynomial reduces to 0.
inline bool criterion_b1(const CriticalPair& pair, const std::vector<Monomial>& lms) {
    return lms[pair.i].coprime(lms[pair.j]);
}

/// B2: some lm(g_k), k != i, j, divides the lcm and neither (i, k) nor (j, k)
/// is still pending.
inline bool criterion_b2(const CriticalPair& pair, const std::vector<Monomial>& lms,
                         const std::set<std::pair<std::size_t, std::size_t>>& pending) {
    auto is_pending = [&](std::size_t a, std::size_t b) {
        return pending.count({std::min(a, b), std::max(a, b)}) != 0;
    };
    for (std::size_t k = 0; k < lms.size(); ++k) {
        if (k == pair.i || k == pair.j) continue;
        if (!lms[k].divides(pair.lcm)) continue;
        if (!is_pending(pair.i, k) && !is_pending(pair.j, k)) return true;
    }
    return false;
}

struct BuchbergerStats {
    std::size_t pairs_processed = 0;
    std::size_t skipped_b1 = 0;
    std::size_t skipped_b2 = 0;
    std::size_t zero_reductions = 0;
    /// Z/p^m only: p-adic digits given up by dividing out contents.
    std::size_t precision_lost = 0;
};

template <CoefficientDomain F>
struct BuchbergerOptions {
    bool use_criteria = true;
    /// Engine for S-polynomial reductions. Mora is exact too but its
    /// coefficients can grow for hundreds of steps on small random inputs.
    ReducerKind reducer = ReducerKind::Linear;
    NormalFormOptions<F> nf;
    /// Abort after this many S-pair reductions (0 = unlimited).
    std::size_t max_pairs = 0;
    /// Called after each pair with (processed, remaining, basis size).
    std::function<void(std::size_t, std::size_t, std::size_t)> progress;
};

template <CoefficientDomain F>
struct GroebnerBasis {
    std::vector<Polynomial<F>> elements;
    WeightedOrder ord;
    bool minimal = false;
    bool reduced = false;
    bool monic = false;
    BuchbergerStats stats;

    std::size_t size() const { return elements.size(); }
};

namespace detail {

/// Smallest valuation among the coefficients of a nonzero r.
template <CoefficientDomain F>
std::int64_t p_content(const Polynomial<F>& r) {
    ExtInt content = ExtInt::infinity();
    for (const auto& t : r.terms()) content = std::min(content, r.field().val(t.coeff));
    return content.value();
}

/// Divides out the p-content in Z/p^m, then the leading coefficient when it
/// is invertible. Over a field: divide by the leading coefficient.
template <CoefficientDomain F>
Polynomial<F> normalize_new_element(const Polynomial<F>& r, const WeightedOrder& ord) {
    const F& field = r.field();
    if constexpr (std::is_same_v<F, ModPmRing>) {
        const std::int64_t k = p_content(r);
        Polynomial<F> shifted = r;
        if (k > 0) shifted = r.map_coefficients(field, [&](const auto& c) { return field.shift_down(c, k); });
        const auto lead = leading_data(shifted, ord);
        if (field.val(lead.lc) == ExtInt(0)) return shifted.scale(field.inv(lead.lc));
        return shifted;
    } else {
        const auto lead = leading_data(r, ord);
        return r.scale(field.inv(lead.lc));
    }
}

template <CoefficientDomain F>
std::vector<Polynomial<F>> prepare_generators(const std::vector<Polynomial<F>>& input, const char* context) {
    std::vector<Polynomial<F>> out;
    for (const auto& f : input) {
        if (!f.is_homogeneous()) throw DomainError(std::string(context) + ": input polynomial is not homogeneous");
        if (f.is_zero()) continue;
        if (std::find(out.begin(), out.end(), f) != out.end()) continue;
        out.push_back(f);
    }
    if (out.empty()) throw DomainError(std::string(context) + ": all generators are zero");
    return out;
}

}  // namespace detail

/// Buchberger's algorithm with the valuation-aware normal form. Pairs are
/// taken by lcm degree, then by the lcm under the term order, then by index.
template <CoefficientDomain F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& input, const WeightedOrder& ord,
                            const BuchbergerOptions<F>& opts = {}) {
    std::vector<Polynomial<F>> G = detail::prepare_generators(input, "buchberger");
    if (G.front().nvars() != ord.nvars()) throw DomainError("buchberger: order has wrong number of variables");
    GroebnerBasis<F> result{{}, ord, false, false, false, {}};
    BuchbergerStats& stats = result.stats;

    // Z/p^m: dividing p^k h by p^k is not an ideal operation; h is only known
    // modulo p^(m-k). Every element is kept correct modulo p^precision, and a
    // remainder whose content reaches that precision counts as zero.
    std::int64_t precision = 0;
    if constexpr (std::is_same_v<F, ModPmRing>) {
        precision = static_cast<std::int64_t>(G.front().field().exponent());
        for (auto& g : G) {
            const std::int64_t k = detail::p_content(g);
            precision -= k;
            stats.precision_lost += static_cast<std::size_t>(k);
            g = detail::normalize_new_element(g, ord);
        }
        if (precision <= 0) throw BudgetExceeded("buchberger: input contents exceed the precision p^m");
    }

    std::vector<Monomial> lms;
    for (const auto& g : G) lms.push_back(leading_data(g, ord).lm);

    std::optional<LinearReducer<F>> linear;
    if (opts.reducer == ReducerKind::Linear) linear.emplace(G, ord);

    std::vector<CriticalPair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            pairs.push_back(critical_pair(i, j, lms));
            pending.insert({i, j});
        }
    };
    for (std::size_t j = 1; j < G.size(); ++j) add_pairs_for(j);

    auto before = [&](const CriticalPair& a, const CriticalPair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        const auto c = ord.prec.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    };

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), before);
        const CriticalPair pair = *it;
        *it = std::move(pairs.back());
        pairs.pop_back();
        pending.erase({pair.i, pair.j});

        if (opts.use_criteria) {
            if (criterion_b1(pair, lms)) {
                ++stats.skipped_b1;
                continue;
            }
            if (criterion_b2(pair, lms, pending)) {
                ++stats.skipped_b2;
                continue;
            }
        }
        if (opts.max_pairs != 0 && stats.pairs_processed >= opts.max_pairs) {
            throw BudgetExceeded("buchberger: pair budget of " + std::to_string(opts.max_pairs) + " exhausted");
        }
        ++stats.pairs_processed;

        const Polynomial<F> s = s_polynomial(G[pair.i], G[pair.j], ord);
        Polynomial<F> r = s;
        if (!s.is_zero()) r = linear ? linear->remainder(s) : remainder(s, G, ord, opts.nf);
        if constexpr (std::is_same_v<F, ModPmRing>) {
            if (!r.is_zero()) {
                const std::int64_t k = detail::p_content(r);
                if (k >= precision) {
                    r = Polynomial<F>(r.field(), r.nvars());
                } else {
                    precision -= k;
                    stats.precision_lost += static_cast<std::size_t>(k);
                }
            }
        }
        if (r.is_zero()) {
            ++stats.zero_reductions;
        } else {
            r = detail::normalize_new_element(r, ord);
            G.push_back(r);
            if (linear) linear->add(r);
            lms.push_back(leading_data(r, ord).lm);
            add_pairs_for(G.size() - 1);
        }
        if (opts.progress) opts.progress(stats.pairs_processed, pairs.size(), G.size());
    }

    result.elements = std::move(G);
    return result;
}

/// Sorts by degree, then by leading monomial under the term order.
template <CoefficientDomain F>
void sort_basis(std::vector<Polynomial<F>>& G, const WeightedOrder& ord) {
    std::vector<std::pair<Monomial, Polynomial<F>>> keyed;
    for (auto& g : G) keyed.emplace_back(leading_data(g, ord).lm, std::move(g));
    std::stable_sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return ord.prec.compare(a.first, b.first) < 0;
    });
    G.clear();
    for (auto& [m, g] : keyed) G.push_back(std::move(g));
}

/// Drops elements whose leading monomial is divisible by another element's
/// (equal leading monomials keep the earliest).
template <CoefficientDomain F>
std::vector<Polynomial<F>> minimalize(const std::vector<Polynomial<F>>& G, const WeightedOrder& ord) {
    std::vector<Monomial> lms;
    for (const auto& g : G) lms.push_back(leading_data(g, ord).lm);
    std::vector<Polynomial<F>> out;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
            if (k == i || !lms[k].divides(lms[i])) continue;
            redundant = lms[k] != lms[i] || k < i;
        }
        if (!redundant) out.push_back(G[i]);
    }
    return out;
}

/// The reduced basis: minimal leading monomials x^u, each element replaced
/// by x^u - NF(x^u). Sorted with sort_basis.
template <CoefficientDomain F>
GroebnerBasis<F> reduce_basis(const GroebnerBasis<F>& gb, ReducerKind kind = ReducerKind::Linear,
                              const NormalFormOptions<F>& nf = {}) {
    GroebnerBasis<F> out{{}, gb.ord, true, true, true, gb.stats};
    const auto minimal = minimalize(gb.elements, gb.ord);
    LinearReducer<F> linear(gb.ord);
    if (kind == ReducerKind::Linear) {
        for (const auto& g : minimal) linear.add(g);
    }
    for (const auto& g : minimal) {
        const auto lead = leading_data(g, gb.ord);
        const F& field = g.field();
        const auto xu = Polynomial<F>::term(field, lead.lm, field.one());
        const auto r = kind == ReducerKind::Linear ? linear.remainder(xu) : remainder(xu, minimal, gb.ord, nf);
        out.elements.push_back(xu - r);
    }
    sort_basis(out.elements, gb.ord);
    return out;
}

/// buchberger followed by reduce_basis.
template <CoefficientDomain F>
GroebnerBasis<F> reduced_groebner_basis(const std::vector<Polynomial<F>>& input, const WeightedOrder& ord,
                                        const BuchbergerOptions<F>& opts = {}) {
    return reduce_basis(buchberger(input, ord, opts), opts.reducer, opts.nf);
}

/// Checks the S-pair condition: every S-polynomial whose leading monomials
/// are not coprime reduces to zero.
template <CoefficientDomain F>
bool is_groebner(const std::vector<Polynomial<F>>& G, const WeightedOrder& ord,
                 ReducerKind kind = ReducerKind::Linear, const NormalFormOptions<F>& nf = {}) {
    LinearReducer<F> linear(ord);
    if (kind == ReducerKind::Linear) {
        for (const auto& g : G) linear.add(g);
    }
    auto reduces_to_zero = [&](const Polynomial<F>& f) {
        return (kind == ReducerKind::Linear ? linear.remainder(f) : remainder(f, G, ord, nf)).is_zero();
    };
    std::vector<Monomial> lms;
    for (const auto& g : G) lms.push_back(leading_data(g, ord).lm);
    for (std::size_t j = 1; j < G.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (lms[i].coprime(lms[j])) continue;
            if (!reduces_to_zero(s_polynomial(G[i], G[j], ord))) return false;
        }
    }
    return true;
}

/// True when every f reduces to zero modulo G.
template <CoefficientDomain F>
bool generates_all(const std::vector<Polynomial<F>>& fs, const std::vector<Polynomial<F>>& G,
                   const WeightedOrder& ord, ReducerKind kind = ReducerKind::Linear,
                   const NormalFormOptions<F>& nf = {}) {
    if (kind == ReducerKind::Mora) {
        for (const auto& f : fs) {
            if (!remainder(f, G, ord, nf).is_zero()) return false;
        }
        return true;
    }
    LinearReducer<F> linear(G, ord);
    for (const auto& f : fs) {
        if (!linear.remainder(f).is_zero()) return false;
    }
    return true;
}

template <CoefficientDomain F>
std::vector<Monomial> leading_monomials(const std::vector<Polynomial<F>>& G, const WeightedOrder& ord) {
    std::vector<Monomial> out;
    for (const auto& g : G) out.push_back(leading_data(g, ord).lm);
    return out;
}

}  // namespace valgb
