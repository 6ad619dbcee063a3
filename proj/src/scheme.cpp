#include "fermat/scheme.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "fermat/error.hpp"
#include "fermat/linalg.hpp"
#include "fermat/parse.hpp"

namespace fermat {

void FatScheme::add(const Flat& flat, int mult) {
    if (mult < 1) throw std::invalid_argument("multiplicity must be >= 1");
    if (flat.ambient() != ambient) throw std::invalid_argument("flat lives in a different ambient space");
    if (contains_flat(flat)) throw std::invalid_argument("duplicate component " + flat.to_string());
    root_order = lcm_order(root_order, common_order(flat.equations()));
    components.push_back({flat, mult});
}

void FatScheme::add_point(const ProjPoint& p, int mult) { add(Flat::from_point(p), mult); }

bool FatScheme::contains_flat(const Flat& f) const {
    return std::any_of(components.begin(), components.end(), [&](const FatComponent& c) { return c.flat == f; });
}

namespace {

std::string upper(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

std::vector<int> parse_params(const std::string& text, std::size_t open, std::size_t count) {
    if (open >= text.size() || text[open] != '(') throw ParseError("expected '('", open);
    const std::size_t close = text.find(')', open);
    if (close == std::string::npos) throw ParseError("expected ')'", text.size());
    if (close + 1 != text.size()) throw ParseError("trailing characters in configuration id", close + 1);
    std::vector<int> out;
    std::size_t pos = open + 1;
    while (pos <= close) {
        const std::size_t end = std::min(text.find(',', pos), close);
        const std::string tok = text.substr(pos, end - pos);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("expected nonnegative integer", pos);
        out.push_back(std::stoi(tok));
        pos = end + 1;
    }
    if (out.size() != count)
        throw ParseError("expected " + std::to_string(count) + " parameter(s)", open);
    return out;
}

std::vector<Cyclo> unit_form(int nvars, int i, int order) {
    std::vector<Cyclo> f(nvars, Cyclo::zero(order));
    f[i] = Cyclo::one(order);
    return f;
}

// x_i - e^a x_j
std::vector<Cyclo> binomial_form(int nvars, int i, int j, int n, int a) {
    auto f = unit_form(nvars, i, n);
    f[j] = -Cyclo::root(n, a);
    return f;
}

// x_i^n - x_j^n as its n linear factors
std::vector<std::vector<Cyclo>> power_difference(int nvars, int i, int j, int n) {
    std::vector<std::vector<Cyclo>> out;
    for (int a = 1; a <= n; ++a) out.push_back(binomial_form(nvars, i, j, n, a));
    return out;
}

SplitForm split(std::initializer_list<std::vector<std::vector<Cyclo>>> groups) {
    SplitForm s;
    for (const auto& g : groups) s.factors.insert(s.factors.end(), g.begin(), g.end());
    return s;
}

std::vector<SplitForm> lines42_generators() {
    // (x^3-y^3)(z^3-w^3)xy and its images under the three pairings of {x,y,z,w}
    const int nv = 4;
    const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    std::vector<SplitForm> out;
    for (const auto& p : pairings) {
        const auto d1 = power_difference(nv, p[0], p[1], 3);
        const auto d2 = power_difference(nv, p[2], p[3], 3);
        out.push_back(split({d1, d2, {unit_form(nv, p[0], 3), unit_form(nv, p[1], 3)}}));
        out.push_back(split({d1, d2, {unit_form(nv, p[2], 3), unit_form(nv, p[3], 3)}}));
    }
    return out;
}

std::vector<MultiPoly> fermat_m3_generators() {
    return {parse_poly("x0*x1*x2", 3), parse_poly("x0^3*x2 + x1^3*x2 + x2^4", 3), parse_poly("x1^4*x2 + x1*x2^4", 3)};
}

std::vector<MultiPoly> fermat_m4_generators() {
    return {parse_poly("x0*x1*x2", 3), parse_poly("x0^4*x2 + x1^4*x2 - x2^5", 3),
            parse_poly("x0^4*x1 - x1^5 + x1*x2^4", 3)};
}

FatScheme points_scheme(int ambient, const std::vector<ProjPoint>& pts) {
    FatScheme s;
    s.ambient = ambient;
    for (const auto& p : pts) s.add_point(p);
    return s;
}

FatScheme flats_scheme(int ambient, const std::vector<Flat>& flats) {
    FatScheme s;
    s.ambient = ambient;
    for (const auto& f : flats) s.add(f, 1);
    return s;
}

}  // namespace

std::string ConfigKey::to_string() const {
    switch (id) {
        case ConfigId::B3Dual: return "B3_DUAL";
        case ConfigId::FermatDual: return "FERMAT_DUAL(" + std::to_string(param1) + "," + std::to_string(param2) + ")";
        case ConfigId::BmssP3: return "BMSS_P3";
        case ConfigId::P5Multi: return "P5_MULTI";
        case ConfigId::Lines42: return "LINES42";
        case ConfigId::Mult4Points: return "MULT4_POINTS(" + std::to_string(param1) + ")";
    }
    return "?";
}

ConfigKey ConfigKey::parse(std::string_view text) {
    const std::string s = upper(text);
    if (s == "B3_DUAL") return {ConfigId::B3Dual, 0, 0};
    if (s == "BMSS_P3") return {ConfigId::BmssP3, 0, 0};
    if (s == "P5_MULTI") return {ConfigId::P5Multi, 0, 0};
    if (s == "LINES42") return {ConfigId::Lines42, 0, 0};
    const std::string fd = "FERMAT_DUAL";
    if (s.rfind(fd, 0) == 0) {
        const auto p = parse_params(s, fd.size(), 2);
        return {ConfigId::FermatDual, p[0], p[1]};
    }
    const std::string m4 = "MULT4_POINTS";
    if (s.rfind(m4, 0) == 0) {
        const auto p = parse_params(s, m4.size(), 1);
        return {ConfigId::Mult4Points, p[0], 0};
    }
    throw ParseError("unknown configuration id '" + std::string(text) + "'", 0);
}

MultiPoly SplitForm::expand(int nvars) const {
    MultiPoly f = MultiPoly::constant(nvars, Cyclo(1));
    for (const auto& l : factors) f *= MultiPoly::linear_form(l);
    return f;
}

std::vector<SplitForm> bmss_binomial_generators() {
    // x_i (x_j^3 - x_k^3) for (i; j, k) as printed
    const int nv = 4;
    const int idx[8][3] = {{0, 1, 2}, {0, 2, 3}, {1, 0, 2}, {1, 2, 3}, {2, 0, 1}, {2, 1, 3}, {3, 0, 1}, {3, 1, 2}};
    std::vector<SplitForm> out;
    for (const auto& t : idx) out.push_back(split({{unit_form(nv, t[0], 3)}, power_difference(nv, t[1], t[2], 3)}));
    return out;
}

namespace {

void locus_dfs(const Flat& current, const std::vector<SplitForm>& gens, std::size_t next, std::set<Flat>& out) {
    while (next < gens.size()) {
        const auto& g = gens[next];
        const bool satisfied = std::any_of(g.factors.begin(), g.factors.end(),
                                           [&](const std::vector<Cyclo>& l) { return current.contains_form(l); });
        if (!satisfied) break;
        ++next;
    }
    if (next == gens.size()) {
        out.insert(current);
        return;
    }
    if (current.dim() == 0) return;
    std::set<Flat> children;
    for (const auto& l : gens[next].factors) children.insert(current.meet(l));
    for (const auto& c : children) locus_dfs(c, gens, next + 1, out);
}

}  // namespace

std::vector<Flat> zero_locus_of_split_forms(int ambient, const std::vector<SplitForm>& gens) {
    std::set<Flat> found;
    locus_dfs(Flat::from_equations(ambient, {}), gens, 0, found);
    std::vector<Flat> all(found.begin(), found.end());
    std::vector<Flat> maximal;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < all.size() && !dominated; ++j)
            dominated = j != i && all[j].dim() > all[i].dim() && all[j].contains(all[i]);
        if (!dominated) maximal.push_back(all[i]);
    }
    return maximal;
}

NamedConfig named_configuration(const ConfigKey& key) {
    NamedConfig cfg;
    cfg.key = key;
    switch (key.id) {
        case ConfigId::B3Dual: {
            cfg.source = fermat_arrangement(2, 2, 2);
            cfg.scheme = points_scheme(2, dual_points(*cfg.source));
            break;
        }
        case ConfigId::FermatDual: {
            const int m = key.param1, k = key.param2;
            if (m < 1) throw std::invalid_argument("FERMAT_DUAL requires m >= 1");
            if (k < 0 || k > 3) throw std::invalid_argument("FERMAT_DUAL requires 0 <= k <= 3");
            cfg.source = fermat_arrangement(2, m, k - 1);
            cfg.scheme = points_scheme(2, dual_points(*cfg.source));
            if (m == 3 && k == 2) cfg.published_generators = fermat_m3_generators();
            if (m == 4 && k == 1) cfg.published_generators = fermat_m4_generators();
            break;
        }
        case ConfigId::BmssP3: {
            cfg.source = fermat_arrangement(3, 3, 3);
            cfg.generator_factors = bmss_binomial_generators();
            const auto locus = zero_locus_of_split_forms(3, cfg.generator_factors);
            for (const auto& f : locus)
                if (f.dim() != 0) throw std::logic_error("BMSS generators cut out a positive-dimensional flat");
            cfg.scheme = flats_scheme(3, locus);
            break;
        }
        case ConfigId::P5Multi: {
            std::vector<ProjPoint> pts;
            for (int i = 0; i < 6; ++i) pts.emplace_back(unit_form(6, i, 3));
            std::vector<int> s(5, 0);
            for (;;) {
                std::vector<Cyclo> c{Cyclo::one(3)};
                for (int e : s) c.push_back(Cyclo::root(3, e));
                pts.emplace_back(std::move(c));
                int pos = 0;
                while (pos < 5 && ++s[pos] == 3) s[pos++] = 0;
                if (pos == 5) break;
            }
            cfg.scheme = points_scheme(5, pts);
            break;
        }
        case ConfigId::Lines42: {
            cfg.source = fermat_arrangement(3, 3, -1);
            cfg.scheme = flats_scheme(3, derived_flats(*cfg.source, 1, 3));
            cfg.generator_factors = lines42_generators();
            break;
        }
        case ConfigId::Mult4Points: {
            const int n = key.param1;
            if (n < 1) throw std::invalid_argument("MULT4_POINTS requires n >= 1");
            cfg.source = fermat_arrangement(2, n, -1);
            cfg.scheme = flats_scheme(2, derived_flats(*cfg.source, 0, 2));
            break;
        }
    }
    for (const auto& g : cfg.generator_factors) cfg.published_generators.push_back(g.expand(cfg.scheme.ambient + 1));
    return cfg;
}

bool vanishes_on(const MultiPoly& f, const Flat& flat, int mult) {
    if (mult < 1) return true;
    const CycloMatrix param = flat.parametrization();
    for (const auto& beta : monomial_basis(f.nvars(), mult - 1)) {
        const MultiPoly g = f.partial(beta);
        if (g.is_zero()) continue;
        if (flat.dim() == 0) {
            std::vector<Cyclo> p;
            for (const auto& row : param) p.push_back(row[0]);
            if (!g.evaluate(p).is_zero()) return false;
        } else if (!g.substitute_linear(param).is_zero()) {
            return false;
        }
    }
    return true;
}

std::vector<bool> verify_generators_each(const NamedConfig& cfg) {
    std::vector<bool> out;
    for (const auto& g : cfg.published_generators) {
        bool ok = true;
        for (const auto& c : cfg.scheme.components)
            if (!(ok = vanishes_on(g, c.flat, c.mult))) break;
        out.push_back(ok);
    }
    return out;
}

bool verify_published_generators(const NamedConfig& cfg) {
    const auto each = verify_generators_each(cfg);
    return !each.empty() && std::all_of(each.begin(), each.end(), [](bool b) { return b; });
}

std::size_t generated_dimension(const std::vector<MultiPoly>& gens, int d) {
    if (gens.empty()) return 0;
    const int nv = gens.front().nvars();
    const MonomialIndex index(monomial_basis(nv, d));
    CycloMatrix rows;
    for (const auto& g : gens) {
        const auto deg = g.degree();
        if (!deg || *deg > d || !g.is_homogeneous()) continue;
        for (const auto& e : monomial_basis(nv, d - *deg)) rows.push_back((g * MultiPoly::monomial(e, Cyclo(1))).to_vector(index));
    }
    return matrix_rank(rows, index.size());
}

std::vector<int> coordinate_points_in(const FatScheme& scheme) {
    std::vector<int> out;
    for (int i = 0; i <= scheme.ambient; ++i)
        if (scheme.contains_flat(Flat::from_point(ProjPoint(unit_form(scheme.ambient + 1, i, 1))))) out.push_back(i);
    return out;
}

mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class conditions_count(int N, int r, int m, int d) {
    if (N < 1 || r < 0 || r > N - 1) throw std::invalid_argument("conditions_count: need 0 <= r <= N-1");
    if (m < 1) throw std::invalid_argument("conditions_count: need m >= 1");
    if (d < 0) throw std::invalid_argument("conditions_count: need d >= 0");
    mpz_class total = 0;
    for (int i = 0; i < m; ++i) total += binomial(d - i + r, r) * binomial(N - r - 1 + i, i);
    return total;
}

Rational conditions_count_line_closed(int N, int m, int d) {
    if (N < 2) throw std::invalid_argument("closed form needs N >= 2");
    Rational v(mpz_class(m) * (N * d + 2 * N + m - m * N - 1), mpz_class(N * (N - 1)));
    v.canonicalize();
    return v * Rational(binomial(N + m - 2, m));
}

mpz_class conditions_count_line_p3(int m, int d) { return binomial(m + 1, 2) * (d + 1) - 2 * binomial(m + 1, 3); }

namespace {

// Restrictions of degree-D monomials x^g to a parametrized flat, as dense
// vectors over the degree-D monomials of the flat's coordinates.
class RestrictionTable {
public:
    RestrictionTable(const CycloMatrix& param, int D)
        : nv_(static_cast<int>(param.size())), nt_(static_cast<int>(param[0].size())), target_(monomial_basis(nt_, D)) {
        for (int i = 0; i < nv_; ++i) lines_.push_back(MultiPoly::linear_form(param[i]));
    }

    const std::vector<Cyclo>& get(const Exponent& g) {
        auto it = cache_.find(g);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(g, poly(g).to_vector(target_)).first->second;
    }
    std::size_t size() const { return target_.size(); }

private:
    const MultiPoly& poly(const Exponent& g) {
        auto it = polys_.find(g);
        if (it != polys_.end()) return it->second;
        int i = 0;
        while (i < nv_ && g[i] == 0) ++i;
        MultiPoly p = MultiPoly::constant(nt_, Cyclo(1));
        if (i < nv_) {
            Exponent h = g;
            --h[i];
            p = poly(h) * lines_[i];
        }
        return polys_.emplace(g, std::move(p)).first->second;
    }

    int nv_;
    int nt_;
    MonomialIndex target_;
    std::vector<MultiPoly> lines_;
    std::map<Exponent, MultiPoly> polys_;
    std::map<Exponent, std::vector<Cyclo>> cache_;
};

long falling(int e, int b) {
    long r = 1;
    for (int k = 0; k < b; ++k) r *= e - k;
    return r;
}

}  // namespace

CycloMatrix component_rows(int ambient, const CycloMatrix& param, int mult, int d) {
    const int nv = ambient + 1;
    const auto basis = monomial_basis(nv, d);
    const std::size_t ncols = basis.size();
    const int D = d - mult + 1;
    if (D < 0) {
        CycloMatrix id(ncols, std::vector<Cyclo>(ncols));
        for (std::size_t i = 0; i < ncols; ++i) id[i][i] = Cyclo(1);
        return id;
    }
    RestrictionTable table(param, D);
    const auto betas = monomial_basis(nv, mult - 1);
    const std::size_t nt = table.size();
    const int order = common_order(param);
    CycloMatrix rows(betas.size() * nt, std::vector<Cyclo>(ncols, Cyclo::zero(order)));
    for (std::size_t bi = 0; bi < betas.size(); ++bi) {
        const Exponent& beta = betas[bi];
        for (std::size_t col = 0; col < ncols; ++col) {
            const Exponent& e = basis[col];
            Exponent g(nv);
            long factor = 1;
            bool ok = true;
            for (int i = 0; i < nv && ok; ++i) {
                g[i] = e[i] - beta[i];
                ok = g[i] >= 0;
                if (ok) factor *= falling(e[i], beta[i]);
            }
            if (!ok) continue;
            const auto& vec = table.get(g);
            for (std::size_t t = 0; t < nt; ++t)
                if (!vec[t].is_zero()) rows[bi * nt + t][col] = factor == 1 ? vec[t] : vec[t] * Cyclo(factor);
        }
    }
    return rows;
}

ConditionMatrix conditions_rows(const FatScheme& scheme, int d) {
    if (d < 0) throw std::invalid_argument("conditions_rows: degree must be >= 0");
    ConditionMatrix m;
    m.ambient = scheme.ambient;
    m.degree = d;
    m.ncols = monomial_basis(scheme.ambient + 1, d).size();
    m.root_order = scheme.root_order;
    for (std::size_t c = 0; c < scheme.components.size(); ++c) {
        const auto& comp = scheme.components[c];
        auto rows = component_rows(scheme.ambient, comp.flat.parametrization(), comp.mult, d);
        for (auto& r : rows) {
            m.rows.push_back(std::move(r));
            m.provenance.push_back(c);
        }
    }
    return m;
}

}  // namespace fermat
