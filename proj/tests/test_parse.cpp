#include <gtest/gtest.h>

#include "fermat/error.hpp"
#include "fermat/parse.hpp"
#include "support.hpp"

using namespace fermat;

TEST(Parse, PolynomialGrammar) {
    const std::vector<std::string> n{"x", "y", "z"};
    const MultiPoly f = parse_poly("3*x^2*y - (y - z)^2 + 1/2*z^2", n);
    EXPECT_EQ(f.coeff({2, 1, 0}), Cyclo(3));
    EXPECT_EQ(f.coeff({0, 2, 0}), Cyclo(-1));
    EXPECT_EQ(f.coeff({0, 1, 1}), Cyclo(2));
    EXPECT_EQ(f.coeff({0, 0, 2}), Cyclo(Rational(-1, 2)));
    EXPECT_EQ(parse_poly("x/2", n), parse_poly("1/2*x", n));
    EXPECT_EQ(parse_poly("e(3)^3*x", n), parse_poly("x", n));
}

TEST(Parse, RoundTrip) {
    std::mt19937_64 g(17);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + i % 6;
        const MultiPoly f = fermat::testing::random_form(g, 3, 1 + i % 4, n);
        ASSERT_EQ(parse_poly(f.to_string(), 3), f) << f.to_string();
    }
}

TEST(Parse, Errors) {
    try {
        parse_poly("x0 + * x1", 2);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 5u);
    }
    EXPECT_THROW(parse_poly("x0^-1", 2), ParseError);
    EXPECT_THROW(parse_poly("x7", 2), ParseError);
    EXPECT_THROW(parse_poly("x0 / x1", 2), ParseError);
    EXPECT_THROW(parse_poly("(x0", 2), ParseError);
    EXPECT_THROW(parse_scalar("x0"), ParseError);
    EXPECT_THROW(parse_linear_form("x0*x1", 2), ParseError);
}

TEST(Parse, Scalars) {
    EXPECT_EQ(parse_scalar("-e(3)^2"), -Cyclo::root(3, 2));
    EXPECT_EQ(parse_scalar("(1/2 + e(4))"), Cyclo(Rational(1, 2)) + Cyclo::root(4, 1));
    EXPECT_EQ(scalar_literal(Cyclo::root(3, 2)), "e(3)^2");
    EXPECT_EQ(scalar_literal(-Cyclo::root(3, 1)), "-e(3)");
    EXPECT_EQ(scalar_literal(Cyclo(Rational(-3, 4))), "-3/4");
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k < n; ++k) {
            EXPECT_EQ(parse_scalar(scalar_literal(Cyclo::root(n, k))), Cyclo::root(n, k));
            EXPECT_EQ(parse_scalar(scalar_literal(-Cyclo::root(n, k))), -Cyclo::root(n, k));
        }
    const Cyclo odd = Cyclo(2) - Cyclo::root(5, 3);
    EXPECT_EQ(parse_scalar(scalar_literal(odd)), odd);
}

TEST(Parse, LinearForms) {
    const auto f = parse_linear_form("x0 - e(3)*x2", 3);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0], Cyclo(1));
    EXPECT_TRUE(f[1].is_zero());
    EXPECT_EQ(f[2], -Cyclo::root(3, 1));
    EXPECT_EQ(parse_linear_form(linear_form_to_string(f), 3), f);
}
