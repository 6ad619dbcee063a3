#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fermat/arrange.hpp"
#include "fermat/mpoly.hpp"

namespace fermat {

/// One component of a fat scheme: vanishing to order `mult` along `flat`.
struct FatComponent {
    Flat flat;
    int mult = 1;
};

/// A union of fat flats in P^N over Q(e_n).
struct FatScheme {
    int ambient = 2;
    int root_order = 1;
    std::vector<FatComponent> components;

    /// Appends a component; throws if the flat is already present or mult < 1.
    void add(const Flat& flat, int mult);
    void add_point(const ProjPoint& p, int mult = 1);
    std::size_t size() const { return components.size(); }
    bool contains_flat(const Flat& f) const;
};

/// The configurations with a name. `param1`/`param2` carry m,k for
/// FermatDual and n for Mult4Points.
enum class ConfigId { B3Dual, FermatDual, BmssP3, P5Multi, Lines42, Mult4Points };

struct ConfigKey {
    ConfigId id = ConfigId::B3Dual;
    int param1 = 0;
    int param2 = 0;

    /// `B3_DUAL`, `FERMAT_DUAL(m,k)`, `BMSS_P3`, `P5_MULTI`, `LINES42`, `MULT4_POINTS(n)`
    std::string to_string() const;
    static ConfigKey parse(std::string_view text);
    friend bool operator==(const ConfigKey&, const ConfigKey&) = default;
};

/// A polynomial that splits into linear factors, kept in factored form.
struct SplitForm {
    std::vector<std::vector<Cyclo>> factors;
    MultiPoly expand(int nvars) const;
};

struct NamedConfig {
    ConfigKey key;
    FatScheme scheme;
    std::vector<MultiPoly> published_generators;
    /// Set when the generators were given as products of linear forms.
    std::vector<SplitForm> generator_factors;
    /// Arrangement the configuration is derived from, when there is one.
    std::optional<Arrangement> source;
};

NamedConfig named_configuration(const ConfigKey& key);

/// The 8 binomial generators x_i (x_j^3 - x_k^3) of the BMSS point set, factored.
std::vector<SplitForm> bmss_binomial_generators();

/// Common zero locus of polynomials given as products of linear forms, as the
/// set of its maximal linear components (sorted). Exact: explores one factor
/// per polynomial, pruning branches whose subspace is already contained in a
/// later factor or is empty.
std::vector<Flat> zero_locus_of_split_forms(int ambient, const std::vector<SplitForm>& gens);

/// Whether f vanishes to order >= mult along the flat (all order-(mult-1)
/// partials restrict to zero; by the Euler identity that covers lower orders).
bool vanishes_on(const MultiPoly& f, const Flat& flat, int mult);

/// Per generator: does it vanish on every component to the component's multiplicity.
std::vector<bool> verify_generators_each(const NamedConfig& cfg);
bool verify_published_generators(const NamedConfig& cfg);

/// Dimension of the degree-d part of the ideal generated by `gens`.
std::size_t generated_dimension(const std::vector<MultiPoly>& gens, int d);

/// Coordinate points e_i contained (as components) in the scheme.
std::vector<int> coordinate_points_in(const FatScheme& scheme);

/// Binomial coefficient C(n, k); zero when n < 0, k < 0 or k > n.
mpz_class binomial(long n, long k);

/// Number of conditions imposed on degree-d forms in P^N by vanishing to
/// order m along a general r-dimensional flat:
/// sum_{0 <= i < m} C(d - i + r, r) * C(N - r - 1 + i, i).
mpz_class conditions_count(int N, int r, int m, int d);

/// Closed form for a line in P^N (N >= 2), m (N d + 2N + m - m N - 1) / (N (N-1)) * C(N+m-2, m),
/// returned as an exact rational so that non-integral values are visible.
Rational conditions_count_line_closed(int N, int m, int d);

/// Closed form for a line in P^3: C(m+1, 2) (d + 1) - 2 C(m+1, 3).
mpz_class conditions_count_line_p3(int m, int d);

/// Linear conditions on the coefficients of degree-d forms (in the monomial
/// basis of monomial_basis(N+1, d)) expressing the scheme's vanishing.
struct ConditionMatrix {
    int ambient = 2;
    int degree = 0;
    std::size_t ncols = 0;
    int root_order = 1;
    CycloMatrix rows;
    /// Component index that produced each row.
    std::vector<std::size_t> provenance;
};

/// Rows for one fat flat given by a parametrization (N+1) x (r+1): for every
/// order-(mult-1) multi-index beta, the coefficients of D^beta f restricted to
/// the flat. If d < mult - 1 the component forces f = 0 and identity rows
/// are emitted instead.
CycloMatrix component_rows(int ambient, const CycloMatrix& param, int mult, int d);

ConditionMatrix conditions_rows(const FatScheme& scheme, int d);

/// Scheme text format, one component per line:
///   ambient N / order n headers,
///   `point (c0 : c1 : ...) mult m` and `flat { eq: <form>, <form> } mult m`.
/// `#` starts a comment; `mult` defaults to 1.
FatScheme read_scheme(std::istream& in);
FatScheme parse_scheme(std::string_view text);
std::string write_scheme(const FatScheme& scheme);

}  // namespace fermat
