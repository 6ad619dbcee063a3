#include <gtest/gtest.h>

#include "fermat/arrange.hpp"
#include "fermat/parse.hpp"
#include "support.hpp"

using namespace fermat;
using fermat::testing::random_form;
using fermat::testing::random_vector;

namespace {

MultiPoly P(const char* s, int nvars = 3) { return parse_poly(s, nvars); }

MultiPoly x(int i, int nvars = 3) { return MultiPoly::variable(nvars, i); }

}  // namespace

TEST(MonomialBasis, GrlexOrderAndSize) {
    const auto b = monomial_basis(3, 2);
    ASSERT_EQ(b.size(), 6u);
    EXPECT_EQ(b.front(), (Exponent{2, 0, 0}));
    EXPECT_EQ(b[1], (Exponent{1, 1, 0}));
    EXPECT_EQ(b.back(), (Exponent{0, 0, 2}));
    EXPECT_EQ(monomial_basis(4, 9).size(), 220u);
    EXPECT_EQ(monomial_basis(6, 4).size(), 126u);
    const MonomialIndex idx(b);
    EXPECT_EQ(idx.find({0, 1, 1}), std::optional<std::size_t>(4));
    EXPECT_FALSE(idx.find({1, 1, 1}).has_value());
}

TEST(MultiPoly, Products) {
    EXPECT_EQ((x(0) - x(1)) * (x(0) + x(1)), P("x0^2 - x1^2"));
    MultiPoly prod = MultiPoly::constant(3, Cyclo(1));
    for (int k = 1; k <= 3; ++k) prod *= x(0) - Cyclo::root(3, k) * x(1);
    EXPECT_EQ(prod, P("x0^3 - x1^3"));
    const MultiPoly f = P("x0^2*x2 + 3*x1");
    const MultiPoly z = f + Cyclo(-1) * f;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.size(), 0u);
    EXPECT_FALSE(z.degree().has_value());
    EXPECT_THROW(x(0, 3) + x(0, 4), std::invalid_argument);
}

TEST(MultiPoly, Evaluate) {
    const MultiPoly F = fermat_polynomial(2, 3, -1);
    const std::vector<Cyclo> ones{1, 1, 1};
    EXPECT_TRUE(F.evaluate(ones).is_zero());
    const std::vector<Cyclo> p{1, Cyclo::root(3, 1), 0};
    EXPECT_TRUE(P("x0^3 - x1^3").evaluate(p).is_zero());
    EXPECT_THROW(F.evaluate(std::vector<Cyclo>{1, 1}), std::invalid_argument);
}

TEST(MultiPoly, Partials) {
    EXPECT_EQ(P("x0^3 - x1^3").partial(0), P("3*x0^2"));
    EXPECT_TRUE(P("x0^3 - x1^3").partial(2).is_zero());
    EXPECT_THROW(P("x0").partial(3), std::out_of_range);
    EXPECT_EQ(P("x0^2*x1^3").partial(Exponent{1, 2, 0}), P("12*x0*x1"));
}

TEST(MultiPoly, SubstituteLinear) {
    const CycloMatrix diag{{1, 0}, {1, 0}, {0, 1}};
    EXPECT_TRUE(P("x0^2 - x1^2").substitute_linear(diag).is_zero());
    const CycloMatrix plane{{1, 0}, {0, 1}, {0, 0}};
    EXPECT_EQ(P("x0").substitute_linear(plane), parse_poly("x0", 2));
    EXPECT_THROW(P("x0").substitute_linear(CycloMatrix{{1, 0}, {0, 1}}), std::invalid_argument);

    std::mt19937_64 g(11);
    const MultiPoly F = fermat_polynomial(2, 3, -1);
    const auto p = random_vector(g, 3), q = random_vector(g, 3);
    CycloMatrix line(3);
    for (int i = 0; i < 3; ++i) line[i] = {p[i], q[i]};
    const MultiPoly r = F.substitute_linear(line);
    ASSERT_FALSE(r.is_zero());
    EXPECT_EQ(r.degree(), std::optional<int>(9));
    EXPECT_TRUE(r.is_homogeneous());
    // agrees with F at 10 points of the line
    for (long s = 1; s <= 10; ++s) {
        std::vector<Cyclo> pt(3), st{Cyclo(s), Cyclo(1)};
        for (int i = 0; i < 3; ++i) pt[i] = Cyclo(s) * p[i] + q[i];
        EXPECT_EQ(r.evaluate(st), F.evaluate(pt));
    }
}

TEST(MultiPoly, EulerIdentity) {
    std::mt19937_64 g(99);
    for (int i = 0; i < 200; ++i) {
        const int nvars = 2 + i % 3, d = 1 + i % 5, n = 1 + i % 6;
        const MultiPoly f = random_form(g, nvars, d, n);
        MultiPoly s(nvars, n);
        for (int v = 0; v < nvars; ++v) s += x(v, nvars) * f.partial(v);
        ASSERT_EQ(s, Cyclo(d) * f) << f.to_string();
    }
}

TEST(MultiPoly, LeibnizAndCommutingPartials) {
    std::mt19937_64 g(100);
    for (int i = 0; i < 200; ++i) {
        const int nvars = 2 + i % 3, n = 1 + i % 4;
        const MultiPoly f = random_form(g, nvars, 1 + i % 4, n), h = random_form(g, nvars, 1 + i % 3, n);
        const int v = i % nvars, w = (i + 1) % nvars;
        ASSERT_EQ((f * h).partial(v), f * h.partial(v) + h * f.partial(v));
        ASSERT_EQ(f.partial(v).partial(w), f.partial(w).partial(v));
    }
}

TEST(MultiPoly, RingProperties) {
    std::mt19937_64 g(101);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + i % 4;
        const MultiPoly a = random_form(g, 3, 2, n), b = random_form(g, 3, 3, n), c = random_form(g, 3, 1, n);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        // substitution is a ring homomorphism
        CycloMatrix map(3);
        for (auto& row : map) row = random_vector(g, 2, 9);
        const MultiPoly bc = b + c * c;
        ASSERT_EQ((a * bc).substitute_linear(map), a.substitute_linear(map) * bc.substitute_linear(map));
        ASSERT_EQ((b + c * c).substitute_linear(map), b.substitute_linear(map) + (c * c).substitute_linear(map));
    }
}

TEST(MultiPoly, HomogeneousScaling) {
    std::mt19937_64 g(5);
    for (int i = 0; i < 50; ++i) {
        const int d = 1 + i % 6;
        const MultiPoly f = random_form(g, 3, d, 3);
        const auto p = random_vector(g, 3, 20);
        const Cyclo lambda = Cyclo(2) + Cyclo::root(3, 1);
        std::vector<Cyclo> lp;
        for (const auto& c : p) lp.push_back(lambda * c);
        ASSERT_EQ(f.evaluate(lp), lambda.pow(d) * f.evaluate(p));
    }
}

TEST(MultiPoly, VectorRoundTripAndScalarEquality) {
    const MultiPoly f = P("2*x0^2 - e(3)*x1*x2 + x2^2");
    const MonomialIndex idx(monomial_basis(3, 2));
    EXPECT_EQ(MultiPoly::from_vector(f.to_vector(idx), idx, 3), f);
    EXPECT_THROW(P("x0^3").to_vector(idx), std::invalid_argument);
    EXPECT_TRUE(equal_up_to_scalar(f, Cyclo::root(3, 2) * f));
    EXPECT_FALSE(equal_up_to_scalar(f, f + P("x0^2")));
    EXPECT_TRUE(equal_up_to_scalar(MultiPoly(3), MultiPoly(3)));
    EXPECT_FALSE(equal_up_to_scalar(f, MultiPoly(3)));
}

TEST(MultiPoly, ComposeAndExtend) {
    const MultiPoly f = P("x0*x1 + x2^2");
    const std::vector<MultiPoly> images{parse_poly("y0 + y1", std::vector<std::string>{"y0", "y1"}),
                                        parse_poly("y0 - y1", std::vector<std::string>{"y0", "y1"}),
                                        parse_poly("y1", std::vector<std::string>{"y0", "y1"})};
    EXPECT_EQ(f.compose(images), parse_poly("y0^2", std::vector<std::string>{"y0", "y1"}));
    EXPECT_EQ(f.extend_vars(5).nvars(), 5);
    EXPECT_EQ(f.extend_vars(5).terms().size(), f.terms().size());
}

TEST(ProjPoint, EqualityUpToScalar) {
    const ProjPoint a({2, 4, 0}), b({1, 2, 0});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.normalized().coords()[1], Cyclo(2));
    EXPECT_FALSE(ProjPoint({1, 2, 0}) == ProjPoint({1, 2, 1}));
    EXPECT_THROW(ProjPoint({0, 0, 0}), std::invalid_argument);
    EXPECT_EQ(ProjPoint({1, Cyclo::root(3, 2), 0}).to_string(), "(1 : e(3)^2 : 0)");
}
