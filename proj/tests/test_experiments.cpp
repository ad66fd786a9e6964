#include <gtest/gtest.h>

#include "valgb/experiments.hpp"

using namespace valgb;

namespace {

void expect_shape(const Polynomial<PAdicRationals>& f, std::uint32_t d, const Monomial& odd_at) {
    const auto monos = monomials_of_degree(3, d);
    EXPECT_EQ(f.size(), monos.size());
    for (const auto& m : monos) {
        const mpq_class c = f.coefficient(m);
        ASSERT_EQ(c.get_den(), 1);
        EXPECT_LE(abs(c), 20);
        EXPECT_NE(c, 0);
        const bool odd = mpz_odd_p(c.get_num_mpz_t()) != 0;
        EXPECT_EQ(odd, m == odd_at);
    }
}

}  // namespace

TEST(Sample, Shape) {
    for (std::uint64_t e : {1u, 2u}) {
        const auto d = static_cast<std::uint32_t>(2 * e);
        const auto ee = static_cast<std::uint32_t>(e);
        const auto [f, g] = sample_cardinality_pair(e, e == 1 ? 0 : 1);
        expect_shape(f, d, Monomial{d, 0, 0});
        expect_shape(g, d, Monomial{0, ee, ee});
    }
}

TEST(Sample, DeterministicPerSeed) {
    EXPECT_EQ(sample_cardinality_pair(1, 7).first, sample_cardinality_pair(1, 7).first);
    EXPECT_NE(sample_cardinality_pair(1, 7).first, sample_cardinality_pair(1, 8).first);
    EXPECT_NE(sample_cardinality_pair(1, 7, 0).second, sample_cardinality_pair(1, 7, 1).second);
}

TEST(Sample, TwoAdicInitialIdeal) {
    const auto [f, g] = sample_cardinality_pair(1, 0);
    const auto in0 = initial_ideal(std::vector{f, g}, WeightedOrder({0, 0, 0}, TermOrder::grevlex(3)));
    std::vector<std::string> got;
    for (const auto& h : in0.generators) got.push_back(h.to_string({"x1", "x2", "x3"}));
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, (std::vector<std::string>{"x1^2", "x2*x3"}));
}

TEST(StronglyStable, Examples) {
    const auto grevlex = TermOrder::grevlex(3);
    EXPECT_TRUE(strongly_stable({{2, 0, 0}, {1, 1, 0}, {0, 2, 0}}, grevlex));
    EXPECT_FALSE(strongly_stable({{2, 0, 0}, {0, 1, 1}}, grevlex));
    EXPECT_TRUE(strongly_stable({{1, 0, 0}}, grevlex));
    EXPECT_FALSE(strongly_stable({{0, 0, 1}}, grevlex));
    EXPECT_TRUE(strongly_stable({{0, 0, 1}}, TermOrder(OrderKind::Lex, {2, 0, 1})));
}

TEST(CardinalityReport, QuadricsAndQuartics) {
    const auto orders = default_cardinality_orders();
    const auto r1 = cardinality_report(1, orders, 0);
    EXPECT_EQ(r1.padic_size, 2u);
    EXPECT_TRUE(r1.padic_basis_is_input);
    EXPECT_EQ(r1.lower_bound, mpq_class(5, 2));
    EXPECT_EQ(r1.lower_bound_ceil, 3u);
    EXPECT_EQ(r1.standard_sizes.size(), orders.size());
    for (const auto& [order, size] : r1.standard_sizes) EXPECT_GE(size, 3u);
    EXPECT_TRUE(r1.holds());

    const auto r2 = cardinality_report(2, {TermOrder::grevlex(3)}, 1);
    EXPECT_EQ(r2.padic_size, 2u);
    EXPECT_EQ(r2.lower_bound_ceil, 4u);
    EXPECT_GE(r2.standard_sizes.at(0).second, 4u);
}

TEST(CardinalityReport, NonGenericSampleIsRedrawn) {
    const PAdicRationals q2(2);
    auto monomial_pair = [&](std::uint64_t, std::uint64_t, std::uint64_t) {
        return CardinalityPair{Polynomial<PAdicRationals>::term(q2, {2, 0, 0}, 1),
                            Polynomial<PAdicRationals>::term(q2, {0, 1, 1}, 1)};
    };
    CardinalityOptions opts;
    std::vector<std::string> log;
    opts.log = [&](const std::string& s) { log.push_back(s); };
    opts.sampler = [&](std::uint64_t e, std::uint64_t seed, std::uint64_t attempt) {
        return attempt == 0 ? monomial_pair(e, seed, attempt) : sample_cardinality_pair(e, seed, attempt);
    };
    const auto r = cardinality_report(1, {TermOrder::grevlex(3)}, 3, opts);
    EXPECT_EQ(r.resamples, 1u);
    EXPECT_EQ(log.size(), 1u);
    EXPECT_TRUE(r.holds());

    opts.sampler = monomial_pair;
    opts.max_resamples = 2;
    EXPECT_THROW(cardinality_report(1, {TermOrder::grevlex(3)}, 3, opts), BudgetExceeded);
}
