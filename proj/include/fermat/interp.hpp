#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fermat/linalg.hpp"
#include "fermat/scheme.hpp"

namespace fermat {

struct RankKernel {
    std::size_t rank = 0;
    std::vector<MultiPoly> kernel;
};

/// Exact rank of the condition rows and a kernel basis as degree-d forms.
RankKernel rank_kernel(const ConditionMatrix& mat);

/// Every kernel polynomial annihilates every row exactly.
bool kernel_is_sound(const ConditionMatrix& mat, const std::vector<MultiPoly>& kernel);

/// Vector-space dimension of degree-d forms vanishing on Z.
std::size_t system_dimension(const FatScheme& Z, int d);

/// Ranks of the condition rows for d = 0..d_max.
std::vector<std::size_t> hilbert_function(const FatScheme& Z, int d_max);

/// The space V of degree-d forms vanishing on Z, kept as a basis of coefficient
/// vectors so that further conditions reduce to small rank computations.
class LinearSystem {
public:
    LinearSystem(const FatScheme& Z, int d);

    int ambient() const { return ambient_; }
    int degree() const { return degree_; }
    int root_order() const { return order_; }
    std::size_t ncols() const { return index_.size(); }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<std::vector<Cyclo>>& basis() const { return basis_; }
    const MonomialIndex& monomials() const { return index_; }
    std::vector<MultiPoly> polynomials() const;

    /// dim { f in V : rows(f) = 0 }.
    std::size_t restricted_dimension(const CycloMatrix& rows) const;
    /// Whether f (degree d, N+1 variables) lies in V.
    bool contains(const MultiPoly& f) const;

private:
    int ambient_;
    int degree_;
    int order_;
    MonomialIndex index_;
    std::vector<std::vector<Cyclo>> basis_;
    RowReducer span_;
};

/// One entry of the general scheme X: a general flat of dimension `dim` with multiplicity `mult`.
struct FlatTemplate {
    int dim = 0;
    int mult = 1;
};

/// Seeded 64-bit Mersenne Twister with a fixed, portable integer mapping.
class TrialRng {
public:
    explicit TrialRng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);

private:
    std::mt19937_64 engine_;
};

constexpr long kDefaultBox = 10000;
constexpr int kMaxRedraws = 100;

/// A flat of dimension `dim` spanned by random integer vectors in [-box, box]^(N+1),
/// redrawn while the vectors are dependent or the flat is already a component of
/// `avoid` or of `taken`. Throws ComputationError after kMaxRedraws redraws.
Flat random_flat(int ambient, int dim, TrialRng& rng, const FatScheme& avoid, const std::vector<Flat>& taken,
                 long box = kDefaultBox);

struct UnexpectednessReport {
    std::string scheme;
    int ambient = 0;
    int degree = 0;
    std::vector<FlatTemplate> templ;
    std::size_t dim_Z = 0;
    /// sum of conditions_count over the template entries
    std::size_t conditions_X = 0;
    /// sum of C(m_j+1, 2), when every entry is a point and this differs from conditions_X
    std::optional<std::size_t> conditions_X_alt;
    std::size_t expected = 0;
    std::optional<std::size_t> expected_alt;
    std::size_t actual = 0;
    bool unexpected = false;
    int trials = 0;
    std::uint64_t seed = 0;
    long box = kDefaultBox;
    std::vector<std::size_t> trial_actuals;
    int trials_at_min = 0;
    bool certified = false;
    std::string version;
};

UnexpectednessReport decide_unexpected(const FatScheme& Z, const std::vector<FlatTemplate>& X, int d, int trials,
                                       std::uint64_t seed, const std::string& scheme_name = "",
                                       long box = kDefaultBox);

/// Same, reusing an already computed system for Z.
UnexpectednessReport decide_unexpected(const LinearSystem& VZ, const FatScheme& Z, const std::vector<FlatTemplate>& X,
                                       int trials, std::uint64_t seed, const std::string& scheme_name = "",
                                       long box = kDefaultBox);

/// Stable JSON record (field order fixed).
std::string report_to_json(const UnexpectednessReport& r, int indent = 2);
std::string report_to_text(const UnexpectednessReport& r);

const char* library_version();

}  // namespace fermat
