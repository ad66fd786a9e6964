#pragma once

// Cardinality comparison for pairs f, g of degree d = 2e in three variables:
// f has an odd coefficient at x1^d, g at x2^e x3^e, and every other
// coefficient is even and nonzero. The 2-adic basis for w = 0 is {f, g}
// (coprime leading monomials), while every standard basis needs at least
// (d + 3) / 2 elements once the standard initial ideals are strongly stable.
// That genericity is checked per sample, and failing samples are redrawn.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "valgb/buchberger.hpp"
#include "valgb/coeff.hpp"
#include "valgb/error.hpp"
#include "valgb/polynomial.hpp"
#include "valgb/tropical.hpp"

namespace valgb {

using CardinalityPair = std::pair<Polynomial<PAdicRationals>, Polynomial<PAdicRationals>>;

namespace detail {

inline long odd_in(std::mt19937_64& rng, long h) {
    const long k = std::uniform_int_distribution<long>(0, (h - 1) / 2)(rng);
    return std::bernoulli_distribution(0.5)(rng) ? 2 * k + 1 : -(2 * k + 1);
}

inline long even_nonzero_in(std::mt19937_64& rng, long h) {
    const long k = std::uniform_int_distribution<long>(1, h / 2)(rng);
    return std::bernoulli_distribution(0.5)(rng) ? 2 * k : -2 * k;
}

}  // namespace detail

/// Draws (f, g) for the given e from (seed, attempt). Coefficients satisfy
/// 1 <= |c| <= height.
inline CardinalityPair sample_cardinality_pair(std::uint64_t e, std::uint64_t seed, std::uint64_t attempt = 0,
                                          long height = 20) {
    if (e < 1) throw DomainError("sample_cardinality_pair: e must be positive");
    if (height < 2) throw DomainError("sample_cardinality_pair: height must be at least 2");
    std::seed_seq seq{seed, e, attempt};
    std::mt19937_64 rng(seq);
    const PAdicRationals q2(2);
    const auto d = static_cast<std::uint32_t>(2 * e);
    const Monomial lead_f{d, 0, 0};
    const Monomial lead_g{0, static_cast<std::uint32_t>(e), static_cast<std::uint32_t>(e)};
    auto draw = [&](const Monomial& odd_at) {
        std::vector<Polynomial<PAdicRationals>::Term> terms;
        for (const auto& m : monomials_of_degree(3, d)) {
            const long c = m == odd_at ? detail::odd_in(rng, height) : detail::even_nonzero_in(rng, height);
            terms.push_back({m, q2.from_integer(c)});
        }
        return Polynomial<PAdicRationals>::from_terms(q2, 3, std::move(terms));
    };
    auto f = draw(lead_f);
    auto g = draw(lead_g);
    return {std::move(f), std::move(g)};
}

/// Strongly stable for the variable ranking of `order`: for every generator
/// x^u, x_j | x^u and x_i ranked above x_j, x_i x^u / x_j lies in the ideal.
inline bool strongly_stable(const std::vector<Monomial>& gens, const TermOrder& order) {
    const auto& prio = order.priority();
    auto member = [&](const Monomial& m) {
        return std::any_of(gens.begin(), gens.end(), [&](const Monomial& u) { return u.divides(m); });
    };
    for (const auto& u : gens) {
        for (std::size_t b = 0; b < prio.size(); ++b) {
            if (u[prio[b]] == 0) continue;
            for (std::size_t a = 0; a < b; ++a) {
                Monomial m = u;
                m[prio[b]] -= 1;
                m[prio[a]] += 1;
                if (!member(m)) return false;
            }
        }
    }
    return true;
}

/// lex and grevlex for the three cyclic rankings of x1, x2, x3.
inline std::vector<TermOrder> default_cardinality_orders() {
    std::vector<TermOrder> out;
    for (const auto& prio : std::vector<std::vector<std::size_t>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}) {
        out.emplace_back(OrderKind::Lex, prio);
        out.emplace_back(OrderKind::GrevLex, prio);
    }
    return out;
}

struct CardinalityReport {
    std::uint64_t e = 0;
    std::uint64_t d = 0;
    std::uint64_t seed = 0;
    /// Samples discarded before this one as non-generic.
    std::size_t resamples = 0;
    std::size_t padic_size = 0;
    /// The 2-adic Buchberger run added nothing to {f, g}.
    bool padic_basis_is_input = false;
    std::vector<std::pair<TermOrder, std::size_t>> standard_sizes;
    mpq_class lower_bound = 0;      // (d + 3) / 2
    std::size_t lower_bound_ceil = 0;

    bool holds() const {
        if (padic_size != 2 || !padic_basis_is_input) return false;
        return std::all_of(standard_sizes.begin(), standard_sizes.end(),
                           [&](const auto& s) { return s.second >= lower_bound_ceil; });
    }
};

struct CardinalityOptions {
    long height = 20;
    /// Redraws allowed after a non-generic sample.
    std::size_t max_resamples = 10;
    std::function<CardinalityPair(std::uint64_t e, std::uint64_t seed, std::uint64_t attempt)> sampler;
    std::function<void(const std::string&)> log;
};

/// Sizes of the 2-adic (w = 0) and standard reduced bases for a generic
/// sample. Throws BudgetExceeded when no generic sample is found.
inline CardinalityReport cardinality_report(std::uint64_t e, const std::vector<TermOrder>& orders, std::uint64_t seed,
                                            const CardinalityOptions& opts = {}) {
    const RationalField q;
    const std::uint32_t d = static_cast<std::uint32_t>(2 * e);
    const std::vector<Monomial> expected{Monomial{d, 0, 0}, Monomial{0, static_cast<std::uint32_t>(e),
                                                                        static_cast<std::uint32_t>(e)}};
    for (std::size_t attempt = 0; attempt <= opts.max_resamples; ++attempt) {
        const auto [f, g] = opts.sampler ? opts.sampler(e, seed, attempt)
                                         : sample_cardinality_pair(e, seed, attempt, opts.height);
        const std::vector F{f, g};
        const WeightedOrder padic_ord(WeightVector(3, 0), TermOrder::grevlex(3));

        // 2-adic initial ideal must be <x1^d, x2^e x3^e>.
        const auto in0 = initial_ideal(F, padic_ord);
        std::vector<Monomial> in0_monos;
        bool monomial_gens = true;
        for (const auto& h : in0.generators) {
            if (h.size() != 1) monomial_gens = false;
            else in0_monos.push_back(h.terms().front().mono);
        }
        std::sort(in0_monos.begin(), in0_monos.end());
        auto sorted_expected = expected;
        std::sort(sorted_expected.begin(), sorted_expected.end());
        bool generic = monomial_gens && in0_monos == sorted_expected;

        CardinalityReport r;
        r.e = e;
        r.d = d;
        r.seed = seed;
        r.resamples = attempt;
        r.lower_bound = mpq_class(d + 3, 2);
        r.lower_bound.canonicalize();
        r.lower_bound_ceil = (d + 4) / 2;
        if (generic) {
            const auto gb = buchberger(F, padic_ord);
            r.padic_basis_is_input = gb.size() == 2;
            r.padic_size = reduce_basis(gb).size();
            std::vector<Polynomial<RationalField>> Fq;
            for (const auto& h : F) Fq.push_back(h.map_coefficients(q, [](const mpq_class& c) { return c; }));
            for (const auto& order : orders) {
                const WeightedOrder ord(WeightVector(3, 0), order);
                const auto lms = leading_monomials(reduced_groebner_basis(Fq, ord).elements, ord);
                if (!strongly_stable(lms, order)) {
                    generic = false;
                    if (opts.log) {
                        opts.log("seed " + std::to_string(seed) + " attempt " + std::to_string(attempt) +
                                 ": initial ideal for " + order.to_string({"x1", "x2", "x3"}) +
                                 " is not strongly stable, resampling");
                    }
                    break;
                }
                r.standard_sizes.emplace_back(order, lms.size());
            }
        } else if (opts.log) {
            opts.log("seed " + std::to_string(seed) + " attempt " + std::to_string(attempt) +
                     ": 2-adic initial ideal differs from <x1^d, x2^e x3^e>, resampling");
        }
        if (generic) return r;
    }
    throw BudgetExceeded("cardinality_report: no generic sample for seed " + std::to_string(seed) + " within " +
                         std::to_string(opts.max_resamples) + " resamples");
}

}  // namespace valgb
