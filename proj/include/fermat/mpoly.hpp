#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fermat/cyclo.hpp"

namespace fermat {

using Exponent = std::vector<int>;

/// Graded lexicographic order, larger monomials first: higher total degree,
/// then lexicographically larger exponent vector (x0^d precedes x1^d).
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// All exponent vectors of total degree d in nvars variables, in GrlexGreater order.
std::vector<Exponent> monomial_basis(int nvars, int d);

/// Column index of each monomial in a basis.
class MonomialIndex {
public:
    explicit MonomialIndex(std::vector<Exponent> basis);
    std::size_t size() const { return basis_.size(); }
    const std::vector<Exponent>& basis() const { return basis_; }
    const Exponent& at(std::size_t i) const { return basis_[i]; }
    /// Column of e, or nullopt when e is not in the basis.
    std::optional<std::size_t> find(const Exponent& e) const;

private:
    std::vector<Exponent> basis_;
    std::map<Exponent, std::size_t> index_;
};

/// A matrix over Q(e_n), row major.
using CycloMatrix = std::vector<std::vector<Cyclo>>;

/// Sparse multivariate polynomial over Q(e_n).
///
/// Zero coefficients are never stored; the zero polynomial has no terms and
/// no degree. Homogeneity is not enforced: general-point computations carry
/// the point coordinates as extra variables.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Cyclo, GrlexGreater>;

    explicit MultiPoly(int nvars = 1, int root_order = 1);

    static MultiPoly constant(int nvars, const Cyclo& c);
    static MultiPoly variable(int nvars, int index);
    static MultiPoly monomial(const Exponent& e, const Cyclo& c);
    /// sum_i coeffs[i] * x_i
    static MultiPoly linear_form(std::span<const Cyclo> coeffs);

    int nvars() const { return nvars_; }
    int root_order() const { return order_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; nullopt for the zero polynomial.
    std::optional<int> degree() const;
    /// Degree in the given subset of variables; nullopt for zero.
    std::optional<int> degree_in(std::span<const int> vars) const;
    bool is_homogeneous() const;
    bool is_homogeneous_in(std::span<const int> vars) const;

    /// Coefficient of x^e (zero if absent).
    Cyclo coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Cyclo& c);
    /// Leading term in GrlexGreater order; requires !is_zero().
    const Terms::value_type& leading_term() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Cyclo& s);
    MultiPoly operator-() const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Cyclo& s) { return a *= s; }
    friend MultiPoly operator*(const Cyclo& s, MultiPoly a) { return a *= s; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(int e) const;

    /// Formal partial derivative with respect to x_var.
    MultiPoly partial(int var) const;
    /// Mixed partial D^beta.
    MultiPoly partial(const Exponent& beta) const;

    /// Value at a point; point.size() must equal nvars().
    Cyclo evaluate(std::span<const Cyclo> point) const;

    /// Replace x_i by sum_j map[i][j] * y_j; map has nvars() rows and m columns.
    MultiPoly substitute_linear(const CycloMatrix& map) const;

    /// Replace x_i by images[i]; all images share one variable count.
    MultiPoly compose(std::span<const MultiPoly> images) const;

    /// Same polynomial viewed in more variables (new ones appended, unused).
    MultiPoly extend_vars(int new_nvars) const;

    /// Coefficient vector against a monomial basis. Throws if f has a term
    /// outside the basis.
    std::vector<Cyclo> to_vector(const MonomialIndex& basis) const;
    static MultiPoly from_vector(std::span<const Cyclo> coeffs, const MonomialIndex& basis, int nvars);

    /// Human-readable form, e.g. `x0^3 - e(3)*x1^2*x2 + 1/2`. Parseable by parse_poly.
    std::string to_string(std::span<const std::string> names = {}) const;

private:
    void check_compatible(const MultiPoly& o) const;
    void absorb_order(int order);

    int nvars_;
    int order_;
    Terms terms_;
};

/// Default variable names x0, x1, ...
std::vector<std::string> default_var_names(int nvars);

/// True iff f = s * g for some nonzero constant s (both zero also counts).
bool equal_up_to_scalar(const MultiPoly& f, const MultiPoly& g);

/// A point of projective space, coordinates not all zero.
class ProjPoint {
public:
    explicit ProjPoint(std::vector<Cyclo> coords);
    const std::vector<Cyclo>& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    /// Scaled so the first nonzero coordinate is 1.
    ProjPoint normalized() const;
    std::string to_string() const;
    friend bool operator==(const ProjPoint& a, const ProjPoint& b);

private:
    std::vector<Cyclo> coords_;
};

}  // namespace fermat
