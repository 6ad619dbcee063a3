#include <gtest/gtest.h>

#include <algorithm>

#include "fermat/arrange.hpp"
#include "fermat/error.hpp"
#include "fermat/linalg.hpp"
#include "fermat/parse.hpp"

using namespace fermat;

namespace {

std::vector<Hyperplane> lines_of(const char* product_of_forms, int nvars) {
    std::vector<Hyperplane> out;
    std::string s(product_of_forms);
    std::size_t start = 0;
    for (;;) {
        const auto bar = s.find('|', start);
        out.emplace_back(parse_linear_form(s.substr(start, bar - start), nvars));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Hyperplane> sorted(std::vector<Hyperplane> h) {
    std::sort(h.begin(), h.end());
    return h;
}

bool has_point(const std::vector<ProjPoint>& pts, const ProjPoint& p) {
    return std::find(pts.begin(), pts.end(), p) != pts.end();
}

}  // namespace

TEST(Arrangement, B3Lines) {
    const auto arr = fermat_arrangement(2, 2, 2);
    EXPECT_EQ(arr.hyperplanes.size(), 9u);
    EXPECT_EQ(sorted(arr.hyperplanes),
              lines_of("x0|x1|x2|x0+x1|x0-x1|x1+x2|x1-x2|x0+x2|x0-x2", 3));
    EXPECT_TRUE(arr.is_real());
    EXPECT_EQ(arr.spec_string(), "A(3,3,2)");
}

TEST(Arrangement, BraidAndCounts) {
    const auto braid = fermat_arrangement(2, 1, -1);
    EXPECT_EQ(sorted(braid.hyperplanes), lines_of("x0-x1|x0-x2|x1-x2", 3));
    for (const auto& h : braid.hyperplanes) EXPECT_TRUE(h.contains(ProjPoint({1, 1, 1})));
    EXPECT_EQ(fermat_arrangement(3, 3, 3).hyperplanes.size(), 22u);
    for (int N = 1; N <= 3; ++N)
        for (int n = 1; n <= 4; ++n)
            for (int k = -1; k <= N; ++k)
                EXPECT_EQ(fermat_arrangement(N, n, k).hyperplanes.size(),
                          static_cast<std::size_t>(n * (N + 1) * N / 2 + k + 1));
    EXPECT_THROW(fermat_arrangement(2, 0, 0), std::invalid_argument);
    EXPECT_THROW(fermat_arrangement(2, 2, 3), std::invalid_argument);
    EXPECT_FALSE(fermat_arrangement(2, 3, -1).is_real());
}

TEST(Arrangement, ProductMatchesFermatPolynomial) {
    for (int N = 1; N <= 3; ++N)
        for (int n = 1; n <= 4; ++n)
            for (int k = -1; k <= N; ++k) {
                const auto arr = fermat_arrangement(N, n, k);
                EXPECT_TRUE(equal_up_to_scalar(arr.defining_polynomial(), fermat_polynomial(N, n, k)))
                    << arr.spec_string();
            }
}

TEST(Arrangement, SpecParsing) {
    const auto a = parse_arrangement_spec("A(4, 0, 3)");
    EXPECT_EQ(a.N, 3);
    EXPECT_EQ(a.k, -1);
    EXPECT_EQ(a.n, 3);
    EXPECT_EQ(parse_arrangement_spec("A(3,1,1)").hyperplanes.size(), 4u);
    EXPECT_EQ(parse_arrangement_spec("A(3,0,1)").hyperplanes.size(), 3u);
    try {
        parse_arrangement_spec("A(3,3;2)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 5u);
    }
    EXPECT_THROW(parse_arrangement_spec("A(3,5,2)"), ParseError);
    EXPECT_THROW(parse_arrangement_spec("B(3,3,2)"), ParseError);
}

TEST(MonomialGroup, Orders) {
    const auto braid = monomial_group(1, 1, 3);
    EXPECT_EQ(braid.size(), 6u);
    for (const auto& g : braid) EXPECT_TRUE(g.monomial);
    EXPECT_EQ(monomial_group(2, 1, 3).size(), 48u);
    EXPECT_EQ(monomial_group(3, 3, 3).size(), 54u);
    for (auto [n, p, N1] : {std::tuple{2, 2, 3}, {4, 2, 3}, {3, 1, 4}, {2, 1, 4}})
        EXPECT_EQ(monomial_group(n, p, N1).size(), monomial_group_order(n, p, N1));
    EXPECT_THROW(monomial_group(4, 3, 3), std::invalid_argument);
    EXPECT_THROW(monomial_group(6, 1, 6, 1000), std::invalid_argument);
}

TEST(MonomialGroup, ClosedUnderProduct) {
    const auto G = monomial_group(2, 1, 3);
    auto index_of = [&](const GroupElement& h) {
        return std::find_if(G.begin(), G.end(), [&](const GroupElement& x) { return x.matrix == h.matrix; });
    };
    for (std::size_t i = 0; i < G.size(); i += 5)
        for (std::size_t j = 0; j < G.size(); j += 7) EXPECT_NE(index_of(multiply(G[i], G[j])), G.end());
}

TEST(MonomialGroup, BraidIsPermutations) {
    for (const auto& g : monomial_group(1, 1, 3)) {
        for (const auto& row : g.matrix) {
            EXPECT_EQ(std::count_if(row.begin(), row.end(), [](const Cyclo& c) { return c.is_one(); }), 1);
            EXPECT_EQ(std::count_if(row.begin(), row.end(), [](const Cyclo& c) { return c.is_zero(); }), 2);
        }
    }
}

TEST(Reflections, MatchFermatArrangements) {
    EXPECT_EQ(reflections_of(monomial_group(1, 1, 3)), lines_of("x0-x1|x0-x2|x1-x2", 3));
    EXPECT_EQ(reflections_of(monomial_group(2, 1, 3)), sorted(fermat_arrangement(2, 2, 2).hyperplanes));
    for (auto [n, p] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 3}, {4, 2}})
        for (int N1 : {3, 4}) {
            const int N = N1 - 1;
            const auto expect = sorted(fermat_arrangement(N, n, p < n ? N : -1).hyperplanes);
            EXPECT_EQ(reflections_of(monomial_group(n, p, N1)), expect) << n << "," << p << "," << N1;
        }
}

TEST(DualPoints, B3Table) {
    const auto pts = dual_points(fermat_arrangement(2, 2, 2));
    ASSERT_EQ(pts.size(), 9u);
    const std::vector<ProjPoint> table{ProjPoint({1, 0, 0}),  ProjPoint({0, 1, 0}), ProjPoint({0, 0, 1}),
                                       ProjPoint({1, 1, 0}),  ProjPoint({1, -1, 0}), ProjPoint({1, 0, 1}),
                                       ProjPoint({1, 0, -1}), ProjPoint({0, 1, 1}), ProjPoint({0, 1, -1})};
    for (const auto& p : table) EXPECT_TRUE(has_point(pts, p)) << p.to_string();
}

TEST(DualPoints, FermatCounts) {
    const auto m3 = dual_points(fermat_arrangement(2, 3, 1));
    EXPECT_EQ(m3.size(), 11u);
    EXPECT_TRUE(has_point(m3, ProjPoint({1, 0, 0})));
    EXPECT_TRUE(has_point(m3, ProjPoint({0, 1, 0})));
    EXPECT_FALSE(has_point(m3, ProjPoint({0, 0, 1})));
    EXPECT_EQ(dual_points(fermat_arrangement(2, 4, 0)).size(), 13u);
}

TEST(DualPoints, Involution) {
    const auto arr = fermat_arrangement(3, 3, 2);
    const auto pts = dual_points(arr);
    for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(hyperplane_from_point(pts[i]), arr.hyperplanes[i]);
}

TEST(DerivedFlats, FortyTwoLines) {
    const auto arr = fermat_arrangement(3, 3, -1);
    const auto lines = derived_flats(arr, 1, 3);
    EXPECT_EQ(lines.size(), 42u);
    for (const auto& l : lines) {
        EXPECT_EQ(l.dim(), 1);
        const auto m = lattice_membership(arr, l);
        EXPECT_TRUE(m.member);
        EXPECT_GE(m.containing_count, 3);
    }
    EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
}

TEST(DerivedFlats, PointsOfA30) {
    for (int n = 2; n <= 5; ++n) {
        const auto arr = fermat_arrangement(2, n, -1);
        const auto pts = derived_flats(arr, 0, 2);
        EXPECT_EQ(pts.size(), static_cast<std::size_t>(n * n + 3));
        for (const auto& f : pts) EXPECT_TRUE(lattice_membership(arr, f).member);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const Flat p = Flat::from_point(ProjPoint({1, Cyclo::root(n, a), Cyclo::root(n, b)}));
                EXPECT_NE(std::find(pts.begin(), pts.end(), p), pts.end());
            }
    }
    const auto braid = derived_flats(fermat_arrangement(2, 1, -1), 0, 3);
    ASSERT_EQ(braid.size(), 1u);
    EXPECT_EQ(braid[0].as_point(), ProjPoint({1, 1, 1}));
    EXPECT_THROW(derived_flats(fermat_arrangement(2, 1, -1), 2, 2), std::invalid_argument);
}

TEST(LatticeMembership, Examples) {
    const auto a443 = fermat_arrangement(3, 3, 3);
    const auto m = lattice_membership(a443, Flat::from_point(ProjPoint({0, 0, 1, 1})));
    EXPECT_TRUE(m.member);
    // x0, x1, x0 - e^a x1 (three), x2 - x3
    EXPECT_EQ(m.containing_count, 6);
    const auto braid = fermat_arrangement(2, 1, -1);
    const auto b = lattice_membership(braid, Flat::from_point(ProjPoint({1, 1, 1})));
    EXPECT_TRUE(b.member);
    EXPECT_EQ(b.containing_count, 3);
    const auto r = lattice_membership(braid, Flat::from_point(ProjPoint({17, -5, 3})));
    EXPECT_FALSE(r.member);
    EXPECT_EQ(r.containing_count, 0);
    // on one line only: not an intersection of lines
    EXPECT_FALSE(lattice_membership(braid, Flat::from_point(ProjPoint({1, 1, 5}))).member);
}

TEST(Flat, CanonicalFormAndParametrization) {
    const Flat a = Flat::from_equations(3, {{1, 1, 0, 0}, {0, 0, 1, -1}});
    const Flat b = Flat::from_equations(3, {{2, 2, 1, -1}, {0, 0, 3, -3}});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.dim(), 1);
    const auto param = a.parametrization();
    ASSERT_EQ(param.size(), 4u);
    ASSERT_EQ(param[0].size(), 2u);
    for (std::size_t c = 0; c < 2; ++c) {
        std::vector<Cyclo> v{param[0][c], param[1][c], param[2][c], param[3][c]};
        EXPECT_TRUE(a.contains_point(ProjPoint(v)));
    }
    EXPECT_TRUE(a.contains(Flat::from_point(ProjPoint({1, -1, 2, 2}))));
    EXPECT_FALSE(a.contains(Flat::from_point(ProjPoint({1, 1, 2, 2}))));
    EXPECT_EQ(a.meet(std::vector<Cyclo>{1, 0, 0, 0}).dim(), 0);
    EXPECT_THROW(Flat::from_equations(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), std::invalid_argument);
    EXPECT_EQ(Flat::from_span(3, {{1, 0, 0, 0}, {0, 1, 0, 0}}), Flat::from_equations(3, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
}
