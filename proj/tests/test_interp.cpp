#include <gtest/gtest.h>

#include <json.hpp>

#include "fermat/error.hpp"
#include "fermat/interp.hpp"
#include "fermat/parse.hpp"

using namespace fermat;

namespace {

NamedConfig cfg(const char* id) { return named_configuration(ConfigKey::parse(id)); }

FatScheme points(std::initializer_list<ProjPoint> pts, int mult = 1) {
    FatScheme z;
    z.ambient = static_cast<int>(pts.begin()->size()) - 1;
    for (const auto& p : pts) z.add_point(p, mult);
    return z;
}

}  // namespace

TEST(RankKernel, EmptyRows) {
    FatScheme z;
    z.ambient = 2;
    const auto rk = rank_kernel(conditions_rows(z, 4));
    EXPECT_EQ(rk.rank, 0u);
    EXPECT_EQ(rk.kernel.size(), 15u);
}

TEST(RankKernel, B3DualAndSoundness) {
    const auto mat = conditions_rows(cfg("B3_DUAL").scheme, 4);
    const auto rk = rank_kernel(mat);
    EXPECT_EQ(rk.rank, 9u);
    EXPECT_EQ(rk.kernel.size(), 6u);
    EXPECT_TRUE(kernel_is_sound(mat, rk.kernel));
    for (const auto& f : rk.kernel) {
        EXPECT_TRUE(f.is_homogeneous());
        EXPECT_EQ(f.degree(), std::optional<int>(4));
    }
    auto broken = rk.kernel;
    broken.push_back(parse_poly("x0^4", 3));
    EXPECT_FALSE(kernel_is_sound(mat, broken));
}

TEST(RankKernel, SoundOverCyclotomicSchemes) {
    for (const char* id : {"FERMAT_DUAL(3,2)", "MULT4_POINTS(4)", "FERMAT_DUAL(5,1)"}) {
        const auto c = cfg(id);
        for (int d = 3; d <= 7; ++d) {
            const auto mat = conditions_rows(c.scheme, d);
            const auto rk = rank_kernel(mat);
            EXPECT_TRUE(kernel_is_sound(mat, rk.kernel)) << id << " d=" << d;
            EXPECT_EQ(rk.rank + rk.kernel.size(), mat.ncols);
        }
    }
}

TEST(SystemDimension, PublishedValues) {
    EXPECT_EQ(system_dimension(cfg("B3_DUAL").scheme, 4), 6u);
    EXPECT_EQ(system_dimension(cfg("FERMAT_DUAL(3,2)").scheme, 5), 10u);
    EXPECT_EQ(system_dimension(cfg("FERMAT_DUAL(4,1)").scheme, 6), 15u);
}

TEST(SystemDimension, Monotone) {
    const auto base = cfg("B3_DUAL").scheme;
    FatScheme z = base;
    for (int d = 2; d <= 6; ++d) {
        FatScheme fatter = z;
        fatter.components[0].mult = 2;
        FatScheme more = z;
        more.add_point(ProjPoint({2, 3, 7}));
        EXPECT_LE(system_dimension(fatter, d), system_dimension(z, d));
        EXPECT_LE(system_dimension(more, d), system_dimension(z, d));
    }
}

TEST(HilbertFunction, Examples) {
    EXPECT_EQ(hilbert_function(points({ProjPoint({1, 2, 3})}), 5), (std::vector<std::size_t>(6, 1)));
    EXPECT_EQ(hilbert_function(cfg("B3_DUAL").scheme, 4).back(), 9u);
    EXPECT_EQ(hilbert_function(cfg("FERMAT_DUAL(4,1)").scheme, 6).back(), 13u);
    const auto hf = hilbert_function(points({ProjPoint({1, 0, 0}), ProjPoint({0, 1, 0})}, 2), 3);
    EXPECT_EQ(hf, (std::vector<std::size_t>{1, 3, 5, 6}));
}

TEST(LinearSystem, ContainsAndRestrict) {
    const LinearSystem v(cfg("B3_DUAL").scheme, 4);
    EXPECT_EQ(v.dimension(), 6u);
    EXPECT_EQ(v.ncols(), 15u);
    for (const auto& f : v.polynomials()) EXPECT_TRUE(v.contains(f));
    EXPECT_FALSE(v.contains(parse_poly("x0^4", 3)));
    FatScheme p;
    p.ambient = 2;
    p.add_point(ProjPoint({2, 3, 5}), 3);
    EXPECT_EQ(v.restricted_dimension(conditions_rows(p, 4).rows), 1u);
}

TEST(TrialRng, DeterministicAndInRange) {
    TrialRng a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
        const long x = a.uniform(-5, 5);
        EXPECT_EQ(x, b.uniform(-5, 5));
        EXPECT_GE(x, -5);
        EXPECT_LE(x, 5);
        differs = differs || x != c.uniform(-5, 5);
    }
    EXPECT_TRUE(differs);
}

TEST(RandomFlat, AvoidsComponentsAndGivesUp) {
    TrialRng rng(1);
    FatScheme z;
    z.ambient = 3;
    const Flat l = random_flat(3, 1, rng, z, {});
    EXPECT_EQ(l.dim(), 1);
    // box 0 only has the zero vector
    EXPECT_THROW(random_flat(2, 0, rng, z, {}, 0), ComputationError);
    // in P^1 with box 1 there are 4 points; after taking them all, redraws run out
    FatScheme line;
    line.ambient = 1;
    std::vector<Flat> taken;
    for (int i = 0; i < 4; ++i) taken.push_back(random_flat(1, 0, rng, line, taken, 1));
    EXPECT_THROW(random_flat(1, 0, rng, line, taken, 1), ComputationError);
}

TEST(DecideUnexpected, B3) {
    const auto r = decide_unexpected(cfg("B3_DUAL").scheme, {{0, 3}}, 4, 3, 1, "B3_DUAL");
    EXPECT_EQ(r.dim_Z, 6u);
    EXPECT_EQ(r.conditions_X, 6u);
    EXPECT_EQ(r.expected, 0u);
    EXPECT_EQ(r.actual, 1u);
    EXPECT_TRUE(r.unexpected);
    EXPECT_EQ(r.trial_actuals.size(), 3u);
    EXPECT_FALSE(r.certified);
    EXPECT_FALSE(r.conditions_X_alt.has_value());
}

TEST(DecideUnexpected, GeneralPointsAreExpected) {
    TrialRng rng(9);
    FatScheme z;
    z.ambient = 2;
    std::vector<Flat> taken;
    for (int i = 0; i < 9; ++i) {
        taken.push_back(random_flat(2, 0, rng, z, taken));
        z.add(taken.back(), 1);
    }
    const auto r = decide_unexpected(z, {{0, 3}}, 4, 3, 2);
    EXPECT_EQ(r.dim_Z, 6u);
    EXPECT_EQ(r.actual, 0u);
    EXPECT_FALSE(r.unexpected);
}

TEST(DecideUnexpected, SemicontinuityAndSeedReproducibility) {
    const auto z = cfg("FERMAT_DUAL(3,2)").scheme;
    const auto a = decide_unexpected(z, {{0, 4}}, 5, 4, 77);
    const auto b = decide_unexpected(z, {{0, 4}}, 5, 4, 77);
    EXPECT_EQ(report_to_json(a), report_to_json(b));
    for (std::size_t t : a.trial_actuals) EXPECT_GE(t, a.actual);
    EXPECT_EQ(a.actual, 1u);
    EXPECT_THROW(decide_unexpected(z, {{0, 4}}, 5, 0, 1), std::invalid_argument);
}

TEST(DecideUnexpected, AlternativeCountInP3) {
    const auto r = decide_unexpected(cfg("BMSS_P3").scheme, {{0, 3}}, 4, 2, 1);
    EXPECT_EQ(r.conditions_X, 10u);
    ASSERT_TRUE(r.conditions_X_alt.has_value());
    EXPECT_EQ(*r.conditions_X_alt, 6u);
    EXPECT_EQ(r.actual, 1u);
    EXPECT_TRUE(r.unexpected);
}

TEST(Report, JsonFieldOrder) {
    const auto r = decide_unexpected(cfg("B3_DUAL").scheme, {{0, 3}}, 4, 1, 5, "B3_DUAL");
    const auto j = nlohmann::ordered_json::parse(report_to_json(r));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    for (const char* k : {"degree", "dim_Z", "conditions_X", "expected", "actual", "unexpected", "trials", "seed",
                          "version"})
        EXPECT_NE(std::find(keys.begin(), keys.end(), k), keys.end()) << k;
    EXPECT_EQ(j["seed"], 5);
    EXPECT_EQ(j["version"], library_version());
    EXPECT_NE(report_to_text(r).find("unexpected    true"), std::string::npos);
}
