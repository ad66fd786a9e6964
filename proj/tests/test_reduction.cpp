#include <gtest/gtest.h>

#include "support/convert.hpp"
#include "support/random.hpp"
#include "valgb/buchberger.hpp"
#include "valgb/parser.hpp"
#include "valgb/reduction.hpp"

using namespace valgb;
using testing_support::Rng;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

/// f - r lies in the ideal (checked by the textbook oracle over Q), r >= f,
/// and no term of r is divisible by a leading monomial of G.
void expect_valid_remainder(const Polynomial<PAdicRationals>& f, const Polynomial<PAdicRationals>& r,
                            const std::vector<Polynomial<PAdicRationals>>& G, const WeightedOrder& ord) {
    for (const auto& t : r.terms()) {
        for (const auto& g : G) EXPECT_FALSE(leading_data(g, ord).lm.divides(t.mono));
    }
    EXPECT_TRUE(at_least(r, f, ord));
    std::vector<oracle::Poly> OG;
    for (const auto& g : G) OG.push_back(testing_support::to_oracle(g));
    const oracle::Order o{true, {0, 1, 2}};
    const auto basis = oracle::reduced_groebner(OG, o);
    EXPECT_TRUE(oracle::reduce(testing_support::to_oracle(f - r), basis, o).empty());
}

}  // namespace

TEST(LinearReducer, WorkedExample) {
    const PAdicRationals q2(2);
    const WeightedOrder ord({3, 2, 1}, TermOrder(OrderKind::Lex, {2, 1, 0}));
    const auto f = parse_polynomial(q2, xyz, "x^2+y^2+z^2");
    const std::vector G{parse_polynomial(q2, xyz, "y+16z")};
    LinearReducer<PAdicRationals> reducer(G, ord);
    EXPECT_EQ(reducer.remainder(f), parse_polynomial(q2, xyz, "x^2+257z^2"));
}

TEST(LinearReducer, CyclicTriple) {
    const PAdicRationals q2(2);
    const WeightedOrder ord({0, 0, 0}, TermOrder::grevlex(3));
    const std::vector G{parse_polynomial(q2, xyz, "x-2y"), parse_polynomial(q2, xyz, "y-2z"),
                        parse_polynomial(q2, xyz, "z-2x")};
    LinearReducer<PAdicRationals> reducer(G, ord);
    EXPECT_TRUE(reducer.remainder(parse_polynomial(q2, xyz, "x")).is_zero());
    EXPECT_TRUE(reducer.remainder(parse_polynomial(q2, xyz, "x*y+5z^2")).is_zero());
}

TEST(LinearReducer, RejectsBadInput) {
    const PAdicRationals q2(2);
    const WeightedOrder ord({0, 0, 0}, TermOrder::grevlex(3));
    LinearReducer<PAdicRationals> reducer(ord);
    EXPECT_THROW(reducer.add(parse_polynomial(q2, xyz, "0")), DomainError);
    EXPECT_THROW(reducer.add(parse_polynomial(q2, xyz, "x+y^2")), DomainError);
    const ModPmRing r(2, 8);
    LinearReducer<ModPmRing> weighted(WeightedOrder({1, 0, 0}, TermOrder::grevlex(3)));
    EXPECT_THROW(weighted.add(parse_polynomial(r, xyz, "x")), DomainError);
}

TEST(Properties, LinearRemainderIsValid) {
    Rng rng(51);
    for (unsigned long p : {2ul, 3ul}) {
        const PAdicRationals f(p);
        for (int i = 0; i < 40; ++i) {
            const WeightVector w{testing_support::uniform(rng, 0, 3), testing_support::uniform(rng, 0, 3),
                                 testing_support::uniform(rng, 0, 3)};
            const WeightedOrder ord(w, i % 2 ? TermOrder::grevlex(3) : TermOrder::lex(3));
            std::vector<Polynomial<PAdicRationals>> G;
            for (int k = 0, s = static_cast<int>(testing_support::uniform(rng, 1, 3)); k < s; ++k) {
                const auto d = static_cast<std::uint32_t>(testing_support::uniform(rng, 1, 2));
                G.push_back(testing_support::random_homogeneous(f, rng, 3, d, 3, 20));
            }
            const auto dividend = testing_support::random_homogeneous(f, rng, 3, 3, 6, 20);
            LinearReducer<PAdicRationals> reducer(G, ord);
            expect_valid_remainder(dividend, reducer.remainder(dividend), G, ord);
        }
    }
}

TEST(Properties, EnginesAgreeModuloGroebnerBasis) {
    // A strong normal form modulo a Groebner basis is unique.
    Rng rng(52);
    const PAdicRationals f(3);
    for (int i = 0; i < 20; ++i) {
        const WeightedOrder ord({testing_support::uniform(rng, 0, 2), 1, 0}, TermOrder::grevlex(3));
        std::vector<Polynomial<PAdicRationals>> F;
        for (int k = 0; k < 2; ++k) F.push_back(testing_support::random_homogeneous(f, rng, 3, 2, 3, 9));
        const auto red = reduced_groebner_basis(F, ord);
        const auto dividend = testing_support::random_homogeneous(f, rng, 3, 3, 5, 9);
        LinearReducer<PAdicRationals> reducer(red.elements, ord);
        NormalFormOptions<PAdicRationals> opts;
        opts.max_steps = 20000;
        EXPECT_EQ(reducer.remainder(dividend), remainder(dividend, red.elements, ord, opts));
    }
}
