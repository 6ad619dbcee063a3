#include "fermat/arrange.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fermat/error.hpp"
#include "fermat/linalg.hpp"
#include "fermat/parse.hpp"

namespace fermat {

namespace {

std::vector<Cyclo> normalize_leading(std::vector<Cyclo> v) {
    auto it = std::find_if(v.begin(), v.end(), [](const Cyclo& c) { return !c.is_zero(); });
    if (it == v.end()) throw std::invalid_argument("zero linear form");
    if (it->is_one()) return v;
    const Cyclo inv = it->inverse();
    for (auto& c : v) c *= inv;
    return v;
}

int lex_compare(const std::vector<Cyclo>& a, const std::vector<Cyclo>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = Cyclo::compare(a[i], b[i]);
        if (c != 0) return c;
    }
    return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

int rows_order(const CycloMatrix& rows) { return common_order(rows); }

}  // namespace

Hyperplane::Hyperplane(std::vector<Cyclo> form) : form_(normalize_leading(std::move(form))) {}

bool Hyperplane::contains(const ProjPoint& p) const {
    if (static_cast<int>(p.size()) != ambient() + 1) throw std::invalid_argument("point dimension mismatch");
    return dot(form_, p.coords()).is_zero();
}

bool Hyperplane::is_real() const {
    return std::all_of(form_.begin(), form_.end(), [](const Cyclo& c) { return c.is_rational(); });
}

std::string Hyperplane::to_string() const { return linear_form_to_string(form_); }

bool operator<(const Hyperplane& a, const Hyperplane& b) { return lex_compare(a.form_, b.form_) < 0; }

Flat::Flat(int ambient, CycloMatrix rref) : ambient_(ambient), equations_(std::move(rref)) {
    dim_ = ambient_ - static_cast<int>(equations_.size());
    for (const auto& row : equations_) {
        auto it = std::find_if(row.begin(), row.end(), [](const Cyclo& c) { return !c.is_zero(); });
        pivots_.push_back(static_cast<std::size_t>(it - row.begin()));
    }
}

Flat Flat::from_equations(int ambient, const CycloMatrix& equations) {
    if (ambient < 0) throw std::invalid_argument("negative ambient dimension");
    RowReducer rr(static_cast<std::size_t>(ambient) + 1, rows_order(equations));
    for (const auto& e : equations) rr.add_row(e);
    if (static_cast<int>(rr.rank()) > ambient) throw std::invalid_argument("equations have no common projective zero");
    return Flat(ambient, rr.rref());
}

Flat Flat::from_point(const ProjPoint& p) {
    const int ambient = static_cast<int>(p.size()) - 1;
    return from_span(ambient, CycloMatrix{p.coords()});
}

Flat Flat::from_span(int ambient, const CycloMatrix& vectors) {
    RowReducer rr(static_cast<std::size_t>(ambient) + 1, rows_order(vectors));
    for (const auto& v : vectors) rr.add_row(v);
    if (rr.rank() == 0) throw std::invalid_argument("span of zero vectors is empty");
    return from_equations(ambient, rr.kernel_basis());
}

CycloMatrix Flat::parametrization() const {
    const std::size_t n = static_cast<std::size_t>(ambient_) + 1;
    RowReducer rr(n, rows_order(equations_));
    for (const auto& e : equations_) rr.add_row(e);
    auto basis = rr.kernel_basis();
    if (dim_ == 0) basis[0] = normalize_leading(std::move(basis[0]));
    CycloMatrix param(n, std::vector<Cyclo>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) param[i][j] = basis[j][i];
    return param;
}

ProjPoint Flat::as_point() const {
    if (dim_ != 0) throw std::logic_error("flat is not a point");
    const auto param = parametrization();
    std::vector<Cyclo> coords;
    for (const auto& row : param) coords.push_back(row[0]);
    return ProjPoint(std::move(coords));
}

bool Flat::contains_form(std::span<const Cyclo> form) const {
    if (form.size() != static_cast<std::size_t>(ambient_) + 1) throw std::invalid_argument("form dimension mismatch");
    std::vector<Cyclo> v(form.begin(), form.end());
    for (std::size_t r = 0; r < equations_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (v[p].is_zero()) continue;
        const Cyclo f = v[p];
        for (std::size_t j = p; j < v.size(); ++j)
            if (!equations_[r][j].is_zero()) v[j].sub_mul(f, equations_[r][j]);
    }
    return std::all_of(v.begin(), v.end(), [](const Cyclo& c) { return c.is_zero(); });
}

bool Flat::contains_point(const ProjPoint& p) const {
    if (p.size() != static_cast<std::size_t>(ambient_) + 1) throw std::invalid_argument("point dimension mismatch");
    return std::all_of(equations_.begin(), equations_.end(),
                       [&](const std::vector<Cyclo>& e) { return dot(e, p.coords()).is_zero(); });
}

bool Flat::contains(const Flat& other) const {
    if (other.ambient_ != ambient_) return false;
    const auto param = other.parametrization();
    for (const auto& eq : equations_) {
        for (std::size_t j = 0; j < param[0].size(); ++j) {
            Cyclo s;
            for (std::size_t i = 0; i < eq.size(); ++i)
                if (!eq[i].is_zero() && !param[i][j].is_zero()) s += eq[i] * param[i][j];
            if (!s.is_zero()) return false;
        }
    }
    return true;
}

Flat Flat::meet(std::span<const Cyclo> form) const {
    CycloMatrix eqs = equations_;
    eqs.emplace_back(form.begin(), form.end());
    return from_equations(ambient_, eqs);
}

std::string Flat::to_string() const {
    if (dim_ == 0) return "point " + as_point().to_string();
    std::string s = "flat { eq: ";
    for (std::size_t i = 0; i < equations_.size(); ++i) {
        if (i) s += ", ";
        s += linear_form_to_string(equations_[i]);
    }
    return s + " }";
}

bool operator==(const Flat& a, const Flat& b) {
    return a.ambient_ == b.ambient_ && a.dim_ == b.dim_ && a.equations_ == b.equations_;
}

bool operator<(const Flat& a, const Flat& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    for (std::size_t r = 0; r < a.equations_.size(); ++r) {
        const int c = lex_compare(a.equations_[r], b.equations_[r]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string Arrangement::spec_string() const {
    return "A(" + std::to_string(N + 1) + "," + std::to_string(k + 1) + "," + std::to_string(n) + ")";
}

MultiPoly Arrangement::defining_polynomial() const {
    MultiPoly q = MultiPoly::constant(N + 1, Cyclo(1));
    for (const auto& h : hyperplanes) q *= h.polynomial();
    return q;
}

bool Arrangement::is_real() const {
    return std::all_of(hyperplanes.begin(), hyperplanes.end(), [](const Hyperplane& h) { return h.is_real(); });
}

Arrangement fermat_arrangement(int N, int n, int k) {
    if (N < 1) throw std::invalid_argument("fermat_arrangement: N must be >= 1");
    if (n < 1) throw std::invalid_argument("fermat_arrangement: n must be >= 1");
    if (k < -1 || k > N) throw std::invalid_argument("fermat_arrangement: k must lie in [-1, N]");
    Arrangement arr{N, n, k, {}};
    const Cyclo zero = Cyclo::zero(n);
    for (int i = 0; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            for (int a = 1; a <= n; ++a) {
                std::vector<Cyclo> form(N + 1, zero);
                form[i] = Cyclo::one(n);
                form[j] = -Cyclo::root(n, a);
                arr.hyperplanes.emplace_back(std::move(form));
            }
        }
    }
    for (int i = 0; i <= k; ++i) {
        std::vector<Cyclo> form(N + 1, zero);
        form[i] = Cyclo::one(n);
        arr.hyperplanes.emplace_back(std::move(form));
    }
    return arr;
}

Arrangement parse_arrangement_spec(std::string_view spec) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < spec.size() && std::isspace(static_cast<unsigned char>(spec[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= spec.size() || spec[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    };
    auto integer = [&] {
        skip();
        const std::size_t start = pos;
        if (pos < spec.size() && spec[pos] == '-') ++pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
        if (pos == start || spec[pos - 1] == '-') throw ParseError("expected integer", start);
        return std::stoi(std::string(spec.substr(start, pos - start)));
    };
    expect('A');
    expect('(');
    const int n1 = integer();
    expect(',');
    const std::size_t kpos = pos;
    const int k1 = integer();
    expect(',');
    const std::size_t npos = pos;
    const int n = integer();
    expect(')');
    skip();
    if (pos != spec.size()) throw ParseError("trailing characters in arrangement spec", pos);
    if (n1 < 2) throw ParseError("ambient N+1 must be >= 2", 2);
    if (k1 < 0 || k1 > n1) throw ParseError("k+1 must lie in [0, N+1]", kpos);
    if (n < 1) throw ParseError("root order must be >= 1", npos);
    return fermat_arrangement(n1 - 1, n, k1 - 1);
}

MultiPoly fermat_polynomial(int N, int n, int k) {
    const int nv = N + 1;
    MultiPoly f = MultiPoly::constant(nv, Cyclo(1));
    for (int i = 0; i <= k; ++i) f *= MultiPoly::variable(nv, i);
    for (int i = 0; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) f *= MultiPoly::variable(nv, i).pow(n) - MultiPoly::variable(nv, j).pow(n);
    return f;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
    const std::size_t n = a.matrix.size();
    GroupElement r{CycloMatrix(n, std::vector<Cyclo>(n)), a.monomial && b.monomial};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a.matrix[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b.matrix[k][j].is_zero()) r.matrix[i][j] += a.matrix[i][k] * b.matrix[k][j];
        }
    return r;
}

std::size_t monomial_group_order(int n, int p, int N1) {
    std::size_t order = 1;
    for (int i = 2; i <= N1; ++i) order *= static_cast<std::size_t>(i);
    for (int i = 0; i < N1; ++i) order *= static_cast<std::size_t>(n);
    return order / static_cast<std::size_t>(p);
}

std::vector<GroupElement> monomial_group(int n, int p, int N1, std::size_t cap) {
    if (n < 1 || p < 1) throw std::invalid_argument("monomial_group: n and p must be positive");
    if (n % p != 0) throw std::invalid_argument("monomial_group: p must divide n");
    if (N1 < 2) throw std::invalid_argument("monomial_group: need N+1 >= 2");
    const std::size_t order = monomial_group_order(n, p, N1);
    if (order > cap)
        throw std::invalid_argument("monomial_group: group order " + std::to_string(order) + " exceeds cap " +
                                    std::to_string(cap));
    std::vector<GroupElement> out;
    out.reserve(order);
    std::vector<int> perm(N1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> exps(N1, 0);
        for (;;) {
            const int total = std::accumulate(exps.begin(), exps.end(), 0);
            if (total % p == 0) {
                GroupElement g{CycloMatrix(N1, std::vector<Cyclo>(N1, Cyclo::zero(n))), true};
                // column i carries e^{exps[i]} in row perm[i]
                for (int i = 0; i < N1; ++i) g.matrix[perm[i]][i] = Cyclo::root(n, exps[i]);
                out.push_back(std::move(g));
            }
            int pos = 0;
            while (pos < N1 && ++exps[pos] == n) exps[pos++] = 0;
            if (pos == N1) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<Hyperplane> reflections_of(const std::vector<GroupElement>& group) {
    std::set<Hyperplane> found;
    for (const auto& g : group) {
        CycloMatrix d = g.matrix;
        for (std::size_t i = 0; i < d.size(); ++i) d[i][i] -= Cyclo(1);
        if (matrix_rank(d, d.size()) != 1) continue;
        // (g - I) has rank one, so the fixed space is {row . x = 0} for any nonzero row.
        for (const auto& row : d) {
            if (std::all_of(row.begin(), row.end(), [](const Cyclo& c) { return c.is_zero(); })) continue;
            found.emplace(row);
            break;
        }
    }
    return {found.begin(), found.end()};
}

std::vector<ProjPoint> dual_points(const Arrangement& arr) {
    std::vector<ProjPoint> pts;
    pts.reserve(arr.hyperplanes.size());
    for (const auto& h : arr.hyperplanes) pts.emplace_back(h.form());
    return pts;
}

Hyperplane hyperplane_from_point(const ProjPoint& p) { return Hyperplane(p.coords()); }

std::vector<Flat> derived_flats(const Arrangement& arr, int t, int min_hyperplanes) {
    if (t < 0 || t > arr.N - 1) throw std::invalid_argument("derived_flats: t must lie in [0, N-1]");
    if (min_hyperplanes < 2) throw std::invalid_argument("derived_flats: min_hyperplanes must be >= 2");
    std::set<Flat> level;
    for (const auto& h : arr.hyperplanes) level.insert(Flat::from_equations(arr.N, CycloMatrix{h.form()}));
    // Every flat of dimension s-1 is the meet of some flat of dimension s with one more hyperplane.
    for (int s = arr.N - 1; s > t; --s) {
        std::set<Flat> next;
        for (const auto& f : level)
            for (const auto& h : arr.hyperplanes)
                if (!f.contains_form(h.form())) next.insert(f.meet(h.form()));
        level = std::move(next);
    }
    std::vector<Flat> out;
    for (const auto& f : level) {
        int count = 0;
        for (const auto& h : arr.hyperplanes)
            if (f.contains_form(h.form())) ++count;
        if (count >= min_hyperplanes) out.push_back(f);
    }
    return out;
}

LatticeMembership lattice_membership(const Arrangement& arr, const Flat& fl) {
    LatticeMembership m;
    CycloMatrix containing;
    for (const auto& h : arr.hyperplanes) {
        if (fl.contains_form(h.form())) {
            ++m.containing_count;
            containing.push_back(h.form());
        }
    }
    m.member = !containing.empty() &&
               static_cast<int>(matrix_rank(containing, static_cast<std::size_t>(arr.N) + 1)) == fl.codim();
    return m;
}

}  // namespace fermat
