#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support/oracle.hpp"
#include "support/convert.hpp"
#include "support/random.hpp"
#include "valgb/lift.hpp"
#include "valgb/parser.hpp"

using namespace valgb;
using testing_support::Rng;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

template <class F>
std::vector<Polynomial<F>> parse_all(const F& f, const std::vector<std::string>& srcs) {
    std::vector<Polynomial<F>> out;
    for (const auto& s : srcs) out.push_back(parse_polynomial(f, xyz, s));
    return out;
}

Monomial mono(std::initializer_list<std::uint32_t> e) { return Monomial(std::vector<std::uint32_t>(e)); }

}  // namespace

TEST(HilbertDim, Examples) {
    const RationalField q;
    EXPECT_EQ(hilbert_dim(parse_all(q, {"x^2", "x*y"}), 2), 2u);
    EXPECT_EQ(hilbert_dim(parse_all(q, {"x+z"}), 1), 1u);
    EXPECT_EQ(hilbert_dim(parse_all(q, {"x^2+2x*y+4z^2", "y*z+6x^2-2y^2"}), 2), 2u);
    EXPECT_EQ(hilbert_dim(parse_all(q, {"x^2", "x*y"}), 3), 5u);
    EXPECT_EQ(hilbert_dim(parse_all(q, {"x^2"}), 1), 0u);
}

TEST(LiftGroebner, Examples) {
    const PAdicRationals q2(2);
    const WeightedOrder ord({3, 2, 1}, TermOrder::lex(3));
    const auto one = lift_groebner(parse_all(q2, {"y+16z"}), ord, {mono({0, 1, 0})});
    EXPECT_EQ(one.elements, parse_all(q2, {"y+16z"}));

    const WeightedOrder flat({0, 0, 0}, TermOrder::lex(3));
    const auto two = lift_groebner(parse_all(q2, {"x+2y", "y+2x"}), flat, {mono({1, 0, 0}), mono({0, 1, 0})});
    EXPECT_EQ(two.elements, parse_all(q2, {"y", "x"}));

    EXPECT_THROW(lift_groebner(parse_all(q2, {"x+y"}), flat, {mono({1, 0, 0}), mono({0, 1, 0})}),
                 InconsistentInitialIdeal);
    EXPECT_THROW(lift_groebner(parse_all(q2, {"x+y", "x-y"}), flat, {mono({1, 0, 0})}), InconsistentInitialIdeal);
}

TEST(DegreeMatrix, IdentityBlock) {
    const PAdicRationals q3(3);
    const WeightedOrder ord({0, 1, 0}, TermOrder::grevlex(3));
    const auto F = parse_all(q3, {"x^2+3y^2+z^2", "x*y-9y*z"});
    const auto red = reduced_groebner_basis(F, ord);
    const auto lms = leading_monomials(red.elements, ord);
    const auto dm = degree_matrix(F, ord, 2, lms);
    const auto B = dm.dense_B();
    ASSERT_EQ(B.size(), dm.H);
    for (std::size_t i = 0; i < dm.H; ++i) {
        for (std::size_t j = 0; j < dm.H; ++j) EXPECT_EQ(B[i][j], i == j ? 1 : 0);
    }
}

TEST(GbModPm, Examples) {
    const PAdicRationals q2(2);
    const WeightedOrder flat({0, 0, 0}, TermOrder::lex(3));
    ModPmOptions opts;
    opts.m0 = 8;
    const auto r = gb_mod_pm(parse_all(q2, {"x+2y", "y+2x"}), flat, opts);
    EXPECT_EQ(r.basis.elements, parse_all(q2, {"y", "x"}));
    EXPECT_FALSE(r.fell_back);
    opts.m0 = 1;
    const auto x = gb_mod_pm(parse_all(q2, {"x"}), flat, opts);
    EXPECT_EQ(x.basis.elements, parse_all(q2, {"x"}));
    EXPECT_EQ(x.attempts, 1u);
}

TEST(GbModPm, RetriesWhenPrecisionIsTooLow) {
    const PAdicRationals q2(2);
    const WeightedOrder flat({0, 0, 0}, TermOrder::lex(3));
    const auto F = parse_all(q2, {"x+2y", "x+4y"});
    ModPmOptions opts;
    opts.m0 = 1;
    std::vector<std::string> log;
    opts.log = [&](const std::string& s) { log.push_back(s); };
    const auto r = gb_mod_pm(F, flat, opts);
    EXPECT_GT(r.attempts, 1u);
    EXPECT_FALSE(r.fell_back);
    EXPECT_FALSE(log.empty());
    EXPECT_EQ(r.basis.elements, reduced_groebner_basis(F, flat).elements);

    opts.max_doublings = 0;
    const auto fb = gb_mod_pm(F, flat, opts);
    EXPECT_TRUE(fb.fell_back);
    EXPECT_EQ(fb.basis.elements, r.basis.elements);
    opts.fallback = false;
    EXPECT_THROW(gb_mod_pm(F, flat, opts), BudgetExceeded);
}

// Dividing out contents mod p^m used to leave junk leading monomials that no
// larger m could remove.
TEST(GbModPm, ContentDivisionKeepsPrecision) {
    const PAdicRationals q2(2);
    const WeightedOrder ord({1, 1, 1}, TermOrder(OrderKind::Lex, {1, 0, 2}));
    const auto F = parse_all(q2, {"-15x^2*z+x*y^2-30y^3-21y*z^2", "47x^3+36x*z^2"});
    const auto r = gb_mod_pm(F, ord);
    EXPECT_FALSE(r.fell_back);
    EXPECT_EQ(r.basis.elements, reduced_groebner_basis(F, ord).elements);
}

TEST(Buchberger, ModPmRemainderBelowPrecisionIsZero) {
    const ModPmRing z8(2, 3);
    const WeightedOrder flat({0, 0}, TermOrder::lex(2));
    const std::vector F{parse_polynomial(z8, {"x", "y"}, "x+y"), parse_polynomial(z8, {"x", "y"}, "4x")};
    const auto gb = buchberger(F, flat);
    EXPECT_EQ(gb.stats.precision_lost, 2u);
    for (const auto& g : gb.elements) EXPECT_EQ(detail::p_content(g), 0);
}

TEST(GbModPm, NineVariableExample) {
    std::ifstream in(std::string(VALGB_PROBLEMS_DIR) + "/mustafin_2adic.txt");
    ASSERT_TRUE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto pf = parse_problem(ss.str());
    const PAdicRationals q2(2);
    const auto problem = materialize(pf, q2);
    const auto ord = pf.weighted_order();
    const auto r = gb_mod_pm(problem.generators, ord);
    EXPECT_FALSE(r.fell_back);
    EXPECT_EQ(r.basis.size(), 10u);
    EXPECT_EQ(r.basis.elements, reduced_groebner_basis(problem.generators, ord).elements);
}

TEST(Properties, ModPmAgreesWithDirect) {
    Rng rng(61);
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        const PAdicRationals f(p);
        for (int i = 0; i < 12; ++i) {
            const std::size_t n = static_cast<std::size_t>(testing_support::uniform(rng, 2, 3));
            WeightVector w(n);
            for (auto& wi : w) wi = testing_support::uniform(rng, -1, 2);
            const WeightedOrder ord(w, i % 2 ? TermOrder::lex(n) : TermOrder::grevlex(n));
            const auto F = testing_support::random_ideal(f, rng, n, 3, 3, 4, 50);
            const auto r = gb_mod_pm(F, ord);
            EXPECT_FALSE(r.fell_back);
            EXPECT_EQ(r.basis.elements, reduced_groebner_basis(F, ord).elements);
        }
    }
}

TEST(Properties, ReducedBasisRowsAppearInDegreeMatrices) {
    Rng rng(62);
    const PAdicRationals f(2);
    for (int i = 0; i < 15; ++i) {
        const WeightedOrder ord({testing_support::uniform(rng, 0, 2), 0, 1}, TermOrder::grevlex(3));
        const auto F = testing_support::random_ideal(f, rng, 3, 3, 3, 4, 20);
        const auto red = reduced_groebner_basis(F, ord);
        const auto lms = leading_monomials(red.elements, ord);
        for (const auto& g : red.elements) {
            const auto dm = degree_matrix(F, ord, *g.homogeneous_degree(), lms);
            EXPECT_NE(std::find(dm.rows_B.begin(), dm.rows_B.end(), g), dm.rows_B.end());
        }
    }
}

TEST(Properties, HilbertDimMatchesOracleRank) {
    Rng rng(63);
    const RationalField q;
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = static_cast<std::size_t>(testing_support::uniform(rng, 2, 4));
        const auto F = testing_support::random_ideal(q, rng, n, 3, 3, 4, 9);
        std::vector<oracle::Poly> OF;
        for (const auto& g : F) OF.push_back(testing_support::to_oracle(g));
        for (int d = 1; d <= 4; ++d) {
            EXPECT_EQ(hilbert_dim(F, static_cast<std::uint64_t>(d)), oracle::ideal_dim(OF, n, d));
        }
    }
}
