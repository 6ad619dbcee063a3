#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fermat/interp.hpp"
#include "fermat/scheme.hpp"

namespace fermat {

/// Closed-form unexpected curves and surfaces. GEN(m) is the unified family of
/// degree m+2; MULT4(n) the multiplicity-4 curves for A(3,0,n); P5 has no
/// closed form and is checked through interp only.
enum class FormulaId { B3, M3, M4, Gen, Bmss, Mult4, P5 };

struct FormulaSpec {
    FormulaId id = FormulaId::B3;
    int param = 0;

    /// `B3`, `M3`, `M4`, `GEN(m)`, `BMSS`, `MULT4(n)`, `P5`
    std::string to_string() const;
    static FormulaSpec parse(std::string_view text);
};

struct FormulaFamily {
    FormulaSpec spec;
    int ambient = 2;
    /// Degree in the x-variables.
    int degree = 0;
    /// Degree in the coordinates of the general point.
    int point_degree = 0;
    /// Multiplicity at the general point(s).
    std::vector<FlatTemplate> general;
    /// Base configurations the formula is claimed for.
    std::vector<ConfigKey> configs;
    bool existence_only = false;
};

FormulaFamily formula_family(const FormulaSpec& spec);

/// Variables x0..xN followed by the general point a, b, c (, d).
std::vector<std::string> formula_var_names(int ambient);

/// The closed form as a polynomial in 2(N+1) variables. Throws for P5.
MultiPoly build_formula(const FormulaSpec& spec);

/// The even GEN(m) display with a^{2k-1} in front of all three brackets.
/// Kept to show that the cyclic prefactors a, b, c are needed.
MultiPoly gen_even_uniform_prefactor(int m);

/// Replace the point variables by the given coordinates; result has N+1 variables.
MultiPoly specialize(const MultiPoly& formula, int ambient, std::span<const Cyclo> point);

/// Replace the x-variables by the given coordinates; result keeps all variables.
MultiPoly substitute_x(const MultiPoly& formula, int ambient, std::span<const Cyclo> x);

/// Every component of Z is a point and the formula vanishes there
/// identically in the point variables.
bool symbolic_vanishing_on(const MultiPoly& formula, int ambient, const FatScheme& Z);

struct MultiplicityCertificate {
    /// Lowest order of an x-partial that does not vanish at x = general point.
    int attained = 0;
    bool certified = false;
};

/// Multiplicity of the formula at x = (a, b, c, ...), as an identity in the
/// point variables. `expected` is the claimed multiplicity; certified iff the
/// attained order equals it. Stops after order expected + 1.
MultiplicityCertificate symbolic_multiplicity_at_general(const MultiPoly& formula, int ambient, int expected);

/// Derivative criterion for membership in I(mP), P the general point.
bool in_fat_ideal_at_general(const MultiPoly& formula, int ambient, int m);

/// MULT4(n) with one coefficient changed (negative control).
MultiPoly perturbed_mult4(int n);

/// Reconciliation of the cofactor display c^4 Q_P = sum h_i g_i for MULT4(3).
/// The g1 cofactor prints one term without an x-variable; each candidate
/// variable is inserted and the identity tested.
struct CofactorAttempt {
    std::string variable;
    bool exact = false;
    bool up_to_scalar = false;
};
std::vector<CofactorAttempt> mult4_cofactor_reconciliation();

/// Whether f (in N+1 variables, degree d) lies in the degree-d part of the ideal
/// of Z + sum m_j P_j for the given specific points.
bool in_system_with_points(const MultiPoly& f, const FatScheme& Z, const std::vector<ProjPoint>& points,
                           const std::vector<int>& mults);

struct FormulaVerification {
    FormulaSpec spec;
    FormulaFamily family;
    bool built = false;
    int x_degree = -1;
    int point_degree = -1;
    bool bihomogeneous = false;
    /// per config of the family
    std::vector<std::string> configs;
    std::vector<bool> vanishing;
    MultiplicityCertificate multiplicity;
    bool fat_ideal_member = false;
    /// specialized formula lies in the system of Z + mP (per config)
    std::vector<bool> kernel_member;
    /// decide_unexpected on the first config
    std::optional<UnexpectednessReport> uniqueness;
    bool unique = false;
    std::vector<std::string> notes;
    double seconds = 0;
};

FormulaVerification verify_formula(const FormulaSpec& spec, int trials, std::uint64_t seed);

std::string verification_to_json(const FormulaVerification& v, bool timing, int indent = 2);
std::string verification_to_text(const FormulaVerification& v, bool timing);

}  // namespace fermat
