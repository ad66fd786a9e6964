#include <gtest/gtest.h>

#include "valgb/parser.hpp"

using namespace valgb;

TEST(ParseProblem, MinimalFile) {
    const auto pf = parse_problem("field Qp(3)\nvars x,y\norder lex x>y\nweight 0,0\nideal: 3x^2+x*y+18y^2");
    EXPECT_EQ(pf.field.kind, FieldKind::QP);
    EXPECT_EQ(pf.field.prime, 3u);
    ASSERT_EQ(pf.generators.size(), 1u);
    const auto prob = materialize(pf, PAdicRationals(3));
    EXPECT_EQ(prob.generators[0].to_string(prob.vars), "3*x^2+x*y+18*y^2");
}

TEST(ParseProblem, WeightDefaultsToZero) {
    const auto pf = parse_problem("field Q\nvars a,b,c\nideal: a+b+c");
    EXPECT_EQ(pf.weight, (WeightVector{0, 0, 0}));
    EXPECT_EQ(pf.order_kind, OrderKind::Lex);
    EXPECT_EQ(pf.priority, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(ParseProblem, QtWithWeights) {
    const auto pf = parse_problem(
        "# comment line\n"
        "field Qt\n"
        "vars x, y, z\n"
        "order grevlex\n"
        "weight 1,5,10   # trailing comment\n"
        "ideal: x+z,\n"
        "       x^2+(1+t^5)*x*z+x*y\n");
    EXPECT_EQ(pf.weight, (WeightVector{1, 5, 10}));
    const auto prob = materialize(pf, RationalFunctionField{});
    ASSERT_EQ(prob.generators.size(), 2u);
    EXPECT_EQ(prob.generators[1].to_string(prob.vars), "x^2+x*y+(1+t^5)*x*z");
}

TEST(ParseProblem, AscendingChainAndDividend) {
    const auto pf = parse_problem("field Qp(2)\nvars x,y,z\norder lex x<y<z\nweight 3,2,1\nideal: y+16z\ndivide: x^2+y^2+z^2\n");
    EXPECT_EQ(pf.priority, (std::vector<std::size_t>{2, 1, 0}));
    ASSERT_TRUE(pf.dividend.has_value());
    const auto prob = materialize(pf, PAdicRationals(2));
    EXPECT_EQ(prob.dividend->to_string(prob.vars), "x^2+y^2+z^2");
}

TEST(ParseProblem, ErrorsCarryPositions) {
    try {
        (void)materialize(parse_problem("field Q\nvars x,y\nideal: x + w"), RationalField{});
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 12u);
    }
    try {
        (void)parse_problem("field Q\nvars x,y\nweight 1,2,3\nideal: x");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(parse_problem("field Qp(4)\nvars x\nideal: x"), ParseError);
    EXPECT_THROW(parse_problem("field R\nvars x\nideal: x"), ParseError);
    EXPECT_THROW(parse_problem("vars x\nideal: x"), ParseError);
    EXPECT_THROW(parse_problem("field Q\nvars x,x\nideal: x"), ParseError);
    EXPECT_THROW(parse_problem("field Q\nvars x,y\norder lex x>z\nideal: x"), ParseError);
    EXPECT_THROW(materialize(parse_problem("field Q\nvars x,y\nideal: x+y^2"), RationalField{}), ParseError);
    EXPECT_NO_THROW(materialize(parse_problem("field Q\nvars x,y\nideal: x+y^2"), RationalField{}, true));
}

TEST(ParsePolynomial, Grammar) {
    const std::vector<std::string> xy{"x", "y"};
    const RationalField q;
    EXPECT_EQ(parse_polynomial(q, xy, "2x y"), parse_polynomial(q, xy, "2*x*y"));
    EXPECT_EQ(parse_polynomial(q, xy, "-(x - y)^2"), parse_polynomial(q, xy, "-x^2+2x*y-y^2"));
    EXPECT_EQ(parse_polynomial(q, xy, "x/4 + 3/2 y"), parse_polynomial(q, xy, "1/4*x + 3/2*y"));
    EXPECT_THROW(parse_polynomial(q, xy, "x/y"), ParseError);
    EXPECT_THROW(parse_polynomial(q, xy, "x/0"), ParseError);
    EXPECT_THROW(parse_polynomial(q, xy, "x^"), ParseError);
    EXPECT_THROW(parse_polynomial(q, xy, "(x"), ParseError);
    EXPECT_THROW(parse_polynomial(q, xy, "x + t"), ParseError);
    EXPECT_THROW(parse_polynomial(q, xy, "x $ y"), ParseError);
    RationalFunctionField qt;
    EXPECT_EQ(parse_polynomial(qt, xy, "t^2 x").terms()[0].coeff, qt.phi(2));
}
