#include <gtest/gtest.h>

#include "support/random.hpp"
#include "valgb/bounds.hpp"
#include "valgb/experiments.hpp"
#include "valgb/lift.hpp"
#include "valgb/parser.hpp"

using namespace valgb;
using testing_support::Rng;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

ExtInt max_valuation(const std::vector<Polynomial<PAdicRationals>>& G) {
    ExtInt top(0);
    for (const auto& g : G) {
        for (const auto& t : g.terms()) top = std::max(top, g.field().val(t.coeff));
    }
    return top;
}

}  // namespace

TEST(DubeBound, Examples) {
    EXPECT_EQ(dube_degree_bound(3, 2), 32);
    EXPECT_EQ(dube_degree_bound(2, 3), 15);
    EXPECT_EQ(dube_degree_bound(2, 1), 3);
    EXPECT_EQ(dube_degree_bound(3, 1), 5);
    EXPECT_THROW(dube_degree_bound(1, 2), DomainError);
}

TEST(DubeBound, Monotone) {
    for (std::uint64_t n = 2; n <= 5; ++n) {
        for (std::uint64_t d = 1; d <= 6; ++d) {
            EXPECT_LT(dube_degree_bound(n, d), dube_degree_bound(n, d + 1));
            EXPECT_LE(dube_degree_bound(n, d), dube_degree_bound(n + 1, d));
        }
    }
}

TEST(ValuationBound, Examples) {
    EXPECT_EQ(valuation_bound(1, 4, 2), 4);
    EXPECT_EQ(valuation_bound(1, 1, 2), 0);
    EXPECT_EQ(valuation_bound(3, 2, 3), 3);
    EXPECT_EQ(valuation_bound(1, 3, 2), 3);  // 3/2 * ceil(log2 3)
    EXPECT_THROW(valuation_bound(0, 4, 2), DomainError);
}

TEST(ValuationBound, Monotone) {
    for (long C = 1; C <= 30; ++C) {
        for (long A = 1; A <= 30; ++A) {
            EXPECT_LE(valuation_bound(C, A, 3), valuation_bound(C + 1, A, 3));
            EXPECT_LE(valuation_bound(C, A, 3), valuation_bound(C, A + 1, 3));
        }
    }
}

TEST(StandardMonomialCount, AgreesWithEnumeration) {
    Rng rng(71);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = static_cast<std::size_t>(testing_support::uniform(rng, 1, 4));
        std::vector<Monomial> gens;
        for (long k = 0, s = testing_support::uniform(rng, 0, 4); k < s; ++k) {
            Monomial m(n);
            for (std::size_t v = 0; v < n; ++v) m[v] = static_cast<std::uint32_t>(testing_support::uniform(rng, 0, 3));
            gens.push_back(m);
        }
        for (std::uint32_t d = 0; d <= 7; ++d) {
            const auto monos = monomials_of_degree(n, d);
            const auto outside = std::count_if(monos.begin(), monos.end(), [&](const Monomial& m) {
                return std::none_of(gens.begin(), gens.end(), [&](const Monomial& u) { return u.divides(m); });
            });
            EXPECT_EQ(standard_monomial_count(gens, n, d), outside);
        }
    }
}

TEST(EffectiveBound, PrincipalLinear) {
    const PAdicRationals q2(2);
    const WeightedOrder ord({0, 0, 0}, TermOrder::grevlex(3));
    const auto r = effective_valuation_bound(std::vector{parse_polynomial(q2, xyz, "x+z")}, 2, ord, 32);
    EXPECT_EQ(r.D, 5);
    EXPECT_EQ(r.D_used, 5);
    EXPECT_FALSE(r.truncated);
    EXPECT_EQ(r.A, 15);  // dim of the degree-4 forms times x+z
    EXPECT_EQ(r.C, 1);
    EXPECT_EQ(r.bound, 30);
}

TEST(EffectiveBound, ZeroIdeal) {
    const PAdicRationals q2(2);
    const WeightedOrder ord({0, 0, 0}, TermOrder::grevlex(3));
    const auto r = effective_valuation_bound(std::vector{parse_polynomial(q2, xyz, "0")}, 2, ord);
    EXPECT_EQ(r.bound, 0);
}

TEST(EffectiveBound, QuadricPairAndTruncation) {
    const auto [f, g] = sample_cardinality_pair(1, 0);
    const WeightedOrder ord({0, 0, 0}, TermOrder::grevlex(3));
    const auto r = effective_valuation_bound(std::vector{f, g}, 2, ord);
    EXPECT_EQ(r.D, 32);
    EXPECT_FALSE(r.truncated);
    // Two quadrics meeting in 4 points: dim (S/I)_t = 4 for t >= 3.
    EXPECT_EQ(r.A, 561 - 4);
    const auto capped = effective_valuation_bound(std::vector{f, g}, 2, ord, 10);
    EXPECT_TRUE(capped.truncated);
    EXPECT_EQ(capped.D_used, 10);
    EXPECT_EQ(capped.A, 66 - 4);
}

TEST(EffectiveBound, CoefficientsAreCleared) {
    const PAdicRationals q3(3);
    const WeightedOrder ord({0, 0, 0}, TermOrder::grevlex(3));
    const auto r = effective_valuation_bound(std::vector{parse_polynomial(q3, xyz, "6x+9/2y")}, 3, ord, 0);
    EXPECT_EQ(r.C, 4);  // 12x + 9y has content 3
}

TEST(Properties, ReducedBasisValuationsWithinBound) {
    Rng rng(72);
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        const PAdicRationals f(p);
        for (int i = 0; i < 10; ++i) {
            const std::size_t n = static_cast<std::size_t>(testing_support::uniform(rng, 2, 3));
            WeightVector w(n);
            for (auto& wi : w) wi = testing_support::uniform(rng, 0, 2);
            const WeightedOrder ord(w, TermOrder::grevlex(n));
            const auto F = testing_support::random_ideal(f, rng, n, 3, 3, 4, 50);
            const auto r = effective_valuation_bound(F, p, ord, 0);
            EXPECT_FALSE(r.truncated);
            const auto top = max_valuation(reduced_groebner_basis(F, ord).elements);
            EXPECT_LE(mpq_class(top.value()), r.bound);
        }
    }
}
