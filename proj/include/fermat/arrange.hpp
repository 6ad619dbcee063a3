#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fermat/mpoly.hpp"

namespace fermat {

/// A hyperplane of P^N given by its linear form, scaled so the first nonzero
/// coefficient is 1. Two hyperplanes are equal iff their forms are.
class Hyperplane {
public:
    explicit Hyperplane(std::vector<Cyclo> form);

    const std::vector<Cyclo>& form() const { return form_; }
    int ambient() const { return static_cast<int>(form_.size()) - 1; }
    MultiPoly polynomial() const { return MultiPoly::linear_form(form_); }
    bool contains(const ProjPoint& p) const;
    bool is_real() const;
    std::string to_string() const;

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.form_ == b.form_; }
    friend bool operator<(const Hyperplane& a, const Hyperplane& b);

private:
    std::vector<Cyclo> form_;
};

/// A linear subspace of P^N, stored as the reduced row echelon form of its
/// defining equations so that equality is structural.
class Flat {
public:
    /// The flat cut out by the given linear forms (rows). Throws if they have
    /// no common projective zero.
    static Flat from_equations(int ambient, const CycloMatrix& equations);
    static Flat from_point(const ProjPoint& p);
    /// The projective span of the given vectors (rows).
    static Flat from_span(int ambient, const CycloMatrix& vectors);

    int ambient() const { return ambient_; }
    int dim() const { return dim_; }
    int codim() const { return ambient_ - dim_; }
    const CycloMatrix& equations() const { return equations_; }

    /// (N+1) x (dim+1) matrix whose columns span the flat; deterministic.
    /// For a point this is the point normalized to first nonzero coordinate 1.
    CycloMatrix parametrization() const;
    ProjPoint as_point() const;

    bool contains_form(std::span<const Cyclo> form) const;
    bool contains_point(const ProjPoint& p) const;
    /// other is a subset of this.
    bool contains(const Flat& other) const;
    /// Intersection with the hyperplane {form = 0}; same flat if it already lies in it.
    Flat meet(std::span<const Cyclo> form) const;

    std::string to_string() const;

    friend bool operator==(const Flat& a, const Flat& b);
    friend bool operator<(const Flat& a, const Flat& b);

private:
    Flat(int ambient, CycloMatrix rref);
    int ambient_;
    int dim_;
    CycloMatrix equations_;
    std::vector<std::size_t> pivots_;
};

/// The intermediate Fermat arrangement A^{k+1}_{N+1}(n): the linear factors
/// of x_0 ... x_k * prod_{i<j} (x_i^n - x_j^n). k = -1 means no coordinate
/// hyperplanes, k = N means all of them.
struct Arrangement {
    int N = 0;
    int n = 1;
    int k = -1;
    std::vector<Hyperplane> hyperplanes;

    /// `A(N+1,k+1,n)`
    std::string spec_string() const;
    /// Product of all linear forms.
    MultiPoly defining_polynomial() const;
    bool is_real() const;
};

Arrangement fermat_arrangement(int N, int n, int k);

/// Parse `A(N+1, k+1, n)`, e.g. `A(3,3,2)` for B3.
Arrangement parse_arrangement_spec(std::string_view spec);

/// x_0 ... x_k * prod_{i<j} (x_i^n - x_j^n), expanded directly.
MultiPoly fermat_polynomial(int N, int n, int k);

/// An element of a finite matrix group.
struct GroupElement {
    CycloMatrix matrix;
    bool monomial = false;
};

GroupElement multiply(const GroupElement& a, const GroupElement& b);

/// All elements of G(n, p, N1): monomial N1 x N1 matrices with n-th roots of
/// unity as nonzero entries whose product is a power of e_n^p. Throws if p
/// does not divide n or the group order exceeds `cap`.
std::vector<GroupElement> monomial_group(int n, int p, int N1, std::size_t cap = 100000);

/// Group order N1! n^N1 / p.
std::size_t monomial_group_order(int n, int p, int N1);

/// Fixed hyperplanes of the reflections (elements with rank(g - I) = 1),
/// deduplicated and sorted.
std::vector<Hyperplane> reflections_of(const std::vector<GroupElement>& group);

/// The hyperplane with form (c0, ..., cN) becomes the point (c0 : ... : cN).
std::vector<ProjPoint> dual_points(const Arrangement& arr);
Hyperplane hyperplane_from_point(const ProjPoint& p);

/// All t-dimensional flats of the intersection lattice that lie on at least
/// `min_hyperplanes` hyperplanes, sorted and duplicate-free.
std::vector<Flat> derived_flats(const Arrangement& arr, int t, int min_hyperplanes);

struct LatticeMembership {
    bool member = false;
    int containing_count = 0;
};

LatticeMembership lattice_membership(const Arrangement& arr, const Flat& fl);

}  // namespace fermat
