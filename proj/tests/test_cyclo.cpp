#include <gtest/gtest.h>

#include <numeric>

#include "fermat/error.hpp"
#include "support.hpp"

using namespace fermat;
using fermat::testing::random_cyclo;
using fermat::testing::random_nonzero_cyclo;

TEST(Cyclo, RootOfUnityBasics) {
    EXPECT_EQ(Cyclo::root(3, 3), Cyclo(1));
    EXPECT_EQ(Cyclo::root(3, 1) + Cyclo::root(3, 2), Cyclo(-1));
    EXPECT_EQ(Cyclo::root(4, 1) * Cyclo::root(4, 1), Cyclo(-1));
    EXPECT_TRUE(Cyclo::root(7, 0).is_one());
    EXPECT_EQ(Cyclo::root(5, -1), Cyclo::root(5, 4));
}

TEST(Cyclo, RejectsOrderZero) {
    EXPECT_THROW(Cyclo::root(0, 1), std::invalid_argument);
    EXPECT_THROW(Cyclo::embed(1, 0), std::invalid_argument);
}

TEST(Cyclo, ArithmeticExamples) {
    const Cyclo e = Cyclo::root(3, 1), e2 = Cyclo::root(3, 2);
    EXPECT_EQ(e * e2, Cyclo(1));
    EXPECT_EQ((Cyclo(1) + e) * (Cyclo(1) + e2), Cyclo(1));
    EXPECT_EQ(Cyclo::embed(1, 5) / Cyclo::root(5, 1), Cyclo::root(5, 4));
    EXPECT_THROW(Cyclo::root(5, 1) / Cyclo::zero(5), std::domain_error);
}

TEST(Cyclo, Embed) {
    const Cyclo h = Cyclo::embed(Rational(1, 2), 3);
    ASSERT_EQ(h.coeffs().size(), 2u);
    EXPECT_EQ(h.coeffs()[0], Rational(1, 2));
    EXPECT_EQ(h.coeffs()[1], 0);
    const Cyclo z = Cyclo::embed(0, 7);
    EXPECT_EQ(z.coeffs().size(), 6u);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(Cyclo::embed(2, 3) * Cyclo::embed(3, 3), Cyclo::embed(6, 3));
}

TEST(Cyclo, EulerPhiAndCyclotomicPolynomials) {
    const int phis[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(euler_phi(n), phis[n - 1]) << n;
    EXPECT_EQ(cyclotomic_polynomial(3), (std::vector<long>{1, 1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<long>{1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long>{1, -1, 1}));
}

TEST(Cyclo, MultiplicativeOrderOfRoots) {
    for (int n = 1; n <= 12; ++n) {
        for (int k = 0; k < n; ++k) {
            const int expected = n / std::gcd(n, k);
            const Cyclo z = Cyclo::root(n, k);
            int order = 1;
            Cyclo p = z;
            while (!p.is_one()) {
                p *= z;
                ++order;
            }
            EXPECT_EQ(order, expected) << "n=" << n << " k=" << k;
        }
    }
}

// prod_{gcd(k,n)=1} (1 - e^k) = Phi_n(1)
TEST(Cyclo, NormAtOne) {
    for (int n = 2; n <= 12; ++n) {
        Cyclo prod = Cyclo::one(n);
        for (int k = 1; k < n; ++k)
            if (std::gcd(k, n) == 1) prod *= Cyclo(1) - Cyclo::root(n, k);
        const auto phi = cyclotomic_polynomial(n);
        long at_one = std::accumulate(phi.begin(), phi.end(), 0L);
        EXPECT_EQ(prod, Cyclo(at_one)) << n;
    }
}

TEST(Cyclo, FieldAxiomsRandomTriples) {
    std::mt19937_64 g(20240601);
    for (int n = 1; n <= 6; ++n) {
        for (int i = 0; i < 1000; ++i) {
            const Cyclo a = random_cyclo(g, n), b = random_cyclo(g, n), c = random_cyclo(g, n);
            ASSERT_EQ((a + b) + c, a + (b + c));
            ASSERT_EQ((a * b) * c, a * (b * c));
            ASSERT_EQ(a * b, b * a);
            ASSERT_EQ(a * (b + c), a * b + a * c);
            ASSERT_TRUE((a - a).is_zero());
            if (!a.is_zero()) ASSERT_TRUE((a * a.inverse()).is_one());
        }
    }
}

TEST(Cyclo, CanonicalFormIsIdempotent) {
    std::mt19937_64 g(7);
    for (int n = 1; n <= 12; ++n) {
        for (int i = 0; i < 50; ++i) {
            const Cyclo a = random_cyclo(g, n);
            EXPECT_EQ(static_cast<int>(a.coeffs().size()), euler_phi(n));
            EXPECT_EQ(a * Cyclo::one(n), a);
            EXPECT_EQ(Cyclo::parse(a.to_string()), a);
        }
    }
}

TEST(Cyclo, MixedOrdersEmbedIntoLcm) {
    const Cyclo s = Cyclo::root(3, 1) + Cyclo::root(4, 1);
    EXPECT_EQ(s.order(), 12);
    EXPECT_EQ(s, Cyclo::root(12, 4) + Cyclo::root(12, 3));
    EXPECT_EQ(Cyclo::root(2, 1), Cyclo(-1));
    EXPECT_EQ(Cyclo::root(6, 2).to_order(12), Cyclo::root(12, 4));
    EXPECT_THROW(Cyclo::root(4, 1).to_order(6), std::invalid_argument);
}

TEST(Cyclo, ConjugateAndComplex) {
    std::mt19937_64 g(3);
    for (int n : {3, 4, 5, 8}) {
        const Cyclo a = random_nonzero_cyclo(g, n);
        const auto z = a.to_complex();
        const auto w = a.conj().to_complex();
        EXPECT_NEAR(z.real(), w.real(), 1e-9);
        EXPECT_NEAR(z.imag(), -w.imag(), 1e-9);
        EXPECT_NEAR((a * a.conj()).to_complex().imag(), 0.0, 1e-9);
        // real subfield is Q for n = 3, 4
        if (n <= 4) EXPECT_TRUE((a * a.conj()).is_rational());
    }
    EXPECT_NEAR(Cyclo::root(4, 1).to_complex().imag(), 1.0, 1e-12);
}

TEST(Cyclo, ParseSerializedForm) {
    EXPECT_EQ(Cyclo::parse("cyclo(3)[1/2, -1]"), Cyclo(Rational(1, 2), 3) - Cyclo::root(3, 1));
    EXPECT_EQ(Cyclo::parse(" cyclo(1)[ 7 ] "), Cyclo(7));
    EXPECT_THROW(Cyclo::parse("cyclo(3)[1]"), ParseError);
    EXPECT_THROW(Cyclo::parse("cyclo(3)[1, x]"), ParseError);
    EXPECT_THROW(Cyclo::parse("cyclo(0)[]"), ParseError);
    try {
        Cyclo::parse("cyclo(3)[1, 2] junk");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 15u);
    }
}

TEST(Cyclo, PowAndInverse) {
    const Cyclo a = Cyclo(2) + Cyclo::root(5, 2);
    EXPECT_EQ(a.pow(3), a * a * a);
    EXPECT_EQ(a.pow(-2) * a.pow(2), Cyclo::one(5));
    EXPECT_EQ(a.pow(0), Cyclo::one(5));
}
