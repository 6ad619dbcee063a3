#include "fermat/formulas.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fermat/error.hpp"
#include "fermat/parse.hpp"

namespace fermat {

namespace {

std::string strip_upper(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

int parse_one_param(const std::string& s, std::size_t open) {
    if (open >= s.size() || s[open] != '(') throw ParseError("expected '('", open);
    if (s.back() != ')') throw ParseError("expected ')'", s.size());
    const std::string body = s.substr(open + 1, s.size() - open - 2);
    if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("expected nonnegative integer", open + 1);
    return std::stoi(body);
}

std::vector<int> range_vars(int from, int count) {
    std::vector<int> v(count);
    std::iota(v.begin(), v.end(), from);
    return v;
}

long binom(int n, int k) { return binomial(n, k).get_si(); }

std::string num(long v) { return std::to_string(v); }

// Formula polynomials live in 2(N+1) variables: x-part then point part.
struct Vars {
    int N;
    int nv;
    explicit Vars(int ambient) : N(ambient), nv(2 * (ambient + 1)) {}
    MultiPoly x(int i, int e = 1) const { return MultiPoly::variable(nv, i).pow(e); }
    MultiPoly p(int i, int e = 1) const { return MultiPoly::variable(nv, N + 1 + i).pow(e); }
    MultiPoly c(long v) const { return MultiPoly::constant(nv, Cyclo(v)); }
};

MultiPoly gen_even(int m, bool cyclic_prefactor) {
    const Vars v(2);
    MultiPoly f(v.nv);
    for (int k = 1; k <= m / 2 + 1; ++k) {
        const int j = m - (2 * k - 2);
        const int e = 2 * k - 2;
        const MultiPoly pre_a = v.p(0, 2 * k - 1);
        const MultiPoly pre_b = cyclic_prefactor ? v.p(1, 2 * k - 1) : pre_a;
        const MultiPoly pre_c = cyclic_prefactor ? v.p(2, 2 * k - 1) : pre_a;
        const MultiPoly A = v.p(0, j) * v.x(0, e), B = v.p(1, j) * v.x(1, e), C = v.p(2, j) * v.x(2, e);
        MultiPoly bracket = pre_a * (B - C) * v.x(0, j) * v.x(1) * v.x(2);
        bracket += pre_b * (C - A) * v.x(0) * v.x(1, j) * v.x(2);
        bracket += pre_c * (A - B) * v.x(0) * v.x(1) * v.x(2, j);
        f += v.c(binom(m + 1, 2 * k - 1)) * bracket;
    }
    return f;
}

MultiPoly gen_odd(int m) {
    const Vars v(2);
    const MultiPoly x0 = v.x(0), x1 = v.x(1), x2 = v.x(2);
    const MultiPoly a = v.p(0), b = v.p(1), c = v.p(2);
    MultiPoly f = a.pow(m + 1) * x1 * x2 * (x1.pow(m) + x2.pow(m)) + b.pow(m + 1) * x0 * x2 * (x0.pow(m) + x2.pow(m)) +
                  c.pow(m + 1) * x0 * x1 * (x0.pow(m) + x1.pow(m));
    f -= v.c(m + 1) * (a * (b.pow(m) + c.pow(m)) * x0.pow(m) * x1 * x2 + b * (a.pow(m) + c.pow(m)) * x0 * x1.pow(m) * x2 +
                       c * (a.pow(m) + b.pow(m)) * x0 * x1 * x2.pow(m));
    for (int k = 2; k <= (m - 1) / 2; ++k) {
        const long s = (k % 2 == 0 ? 1 : -1) * binom(m + 1, k);
        MultiPoly t = a.pow(m + 1 - k) * x0.pow(k) * x1 * x2 * (b.pow(k) * x1.pow(m - k) + c.pow(k) * x2.pow(m - k));
        t += b.pow(m + 1 - k) * x0 * x1.pow(k) * x2 * (a.pow(k) * x0.pow(m - k) + c.pow(k) * x2.pow(m - k));
        t += c.pow(m + 1 - k) * x0 * x1 * x2.pow(k) * (a.pow(k) * x0.pow(m - k) + b.pow(k) * x1.pow(m - k));
        f += v.c(s) * t;
    }
    const int h = (m + 1) / 2;
    const long s = (h % 2 == 0 ? 1 : -1) * binom(m + 1, h);
    f += v.c(s) * (a.pow(h) * b.pow(h) * x0.pow(h) * x1.pow(h) * x2 + b.pow(h) * c.pow(h) * x0 * x1.pow(h) * x2.pow(h) +
                   a.pow(h) * c.pow(h) * x0.pow(h) * x1 * x2.pow(h));
    return f;
}

const std::vector<std::string> kXyzNames{"x", "y", "z", "a", "b", "c"};

MultiPoly mult4(int n, bool perturb) {
    const long u = binom(n, 2) - 1, v = binom(n - 1, 2), w = binom(n + 1, 2);
    const std::string N = num(n), U = num(u), V = num(v), W = num(w), N1 = num(n - 1);
    auto pw = [&](const char* s) { return std::string(s) + "^" + N; };
    const std::string zx = "(" + pw("z") + "-" + pw("x") + ")";
    const std::string yz = "(" + pw("y") + "-" + pw("z") + ")";
    const std::string xy = "(" + pw("x") + "-" + pw("y") + ")";
    auto lin = [&](const char* p, const char* q) { return "(" + U + "*" + pw(p) + "+" + V + "*" + pw(q) + ")"; };
    std::string s;
    s += "-c*x*y*(" + lin("b", "c") + "*" + zx + "+" + lin("a", "c") + "*" + yz + ")";
    s += "-b*x*z*(" + lin("a", "b") + "*" + yz + "+" + lin("c", "b") + "*" + xy + ")";
    s += "-a*y*z*(" + lin("b", "a") + "*" + zx + "+" + lin("c", "a") + "*" + xy + ")";
    s += "+" + W + "*a^" + N1 + "*b*c*x^2*" + yz;
    s += "+" + W + "*a*b^" + N1 + "*c*y^2*" + zx;
    s += "+" + W + "*a*b*c^" + N1 + "*z^2*" + xy;
    if (perturb) s += "+a*b^" + N1 + "*c*y^2*" + zx;
    return parse_poly(s, kXyzNames);
}

const char* kB3 =
    "3*a*(b^2-c^2)*x^2*y*z + 3*b*(c^2-a^2)*x*y^2*z + 3*c*(a^2-b^2)*x*y*z^2"
    " + a^3*y^3*z - a^3*y*z^3 + b^3*x*z^3 - b^3*x^3*z + c^3*x^3*y - c^3*x*y^3";

const char* kM3 =
    "a^4*x1*x2*(x1^3+x2^3) + b^4*x0*x2*(x0^3+x2^3) + c^4*x0*x1*(x0^3+x1^3)"
    " - 4*a*(b^3+c^3)*x0^3*x1*x2 - 4*b*(a^3+c^3)*x0*x1^3*x2"
    " - 4*c*(a^3+b^3)*x0*x1*x2^3"
    " + 6*a^2*b^2*x0^2*x1^2*x2 + 6*a^2*c^2*x0^2*x1*x2^2 + 6*b^2*c^2*x0*x1^2*x2^2";

const char* kM4 =
    "a^5*x1*x2*(x1^4-x2^4) + b^5*x0*x2*(x2^4-x0^4) + c^5*x0*x1*(x0^4-x1^4)"
    " + 10*a^3*x0^2*x1*x2*(b^2*x1^2-c^2*x2^2)"
    " + 10*b^3*x0*x1^2*x2*(c^2*x2^2-a^2*x0^2)"
    " + 10*c^3*x0*x1*x2^2*(a^2*x0^2-b^2*x1^2)"
    " + 5*a*(b^4-c^4)*x0^4*x1*x2 + 5*b*(c^4-a^4)*x0*x1^4*x2 + 5*c*(a^4-b^4)*x0*x1*x2^4";

const char* kBmss =
    "b^2*(c^3-d^3)*x0^3*x1 + a^2*(d^3-c^3)*x0*x1^3 + c^2*(d^3-b^3)*x0^3*x2"
    " + c^2*(a^3-d^3)*x1^3*x2 + a^2*(b^3-d^3)*x0*x2^3 + b^2*(d^3-a^3)*x1*x2^3"
    " + d^2*(b^3-c^3)*x0^3*x3 + d^2*(c^3-a^3)*x1^3*x3 + d^2*(a^3-b^3)*x2^3*x3"
    " + a^2*(c^3-b^3)*x0*x3^3 + b^2*(a^3-c^3)*x1*x3^3 + c^2*(b^3-a^3)*x2*x3^3";

// Point variables x := (a, b, c, ...): exponents of x_i move onto the i-th point variable.
MultiPoly at_general_point(const MultiPoly& f, int ambient) {
    const int n1 = ambient + 1;
    MultiPoly out(f.nvars(), f.root_order());
    for (const auto& [e, c] : f.terms()) {
        Exponent g(e.size(), 0);
        for (int i = 0; i < n1; ++i) g[n1 + i] = e[n1 + i] + e[i];
        out.add_term(g, c);
    }
    return out;
}

Exponent x_multi_index(const Exponent& beta, int nvars) {
    Exponent full(nvars, 0);
    std::copy(beta.begin(), beta.end(), full.begin());
    return full;
}

}  // namespace

std::string FormulaSpec::to_string() const {
    switch (id) {
        case FormulaId::B3: return "B3";
        case FormulaId::M3: return "M3";
        case FormulaId::M4: return "M4";
        case FormulaId::Gen: return "GEN(" + std::to_string(param) + ")";
        case FormulaId::Bmss: return "BMSS";
        case FormulaId::Mult4: return "MULT4(" + std::to_string(param) + ")";
        case FormulaId::P5: return "P5";
    }
    return "?";
}

FormulaSpec FormulaSpec::parse(std::string_view text) {
    const std::string s = strip_upper(text);
    if (s == "B3") return {FormulaId::B3, 0};
    if (s == "M3") return {FormulaId::M3, 0};
    if (s == "M4") return {FormulaId::M4, 0};
    if (s == "BMSS") return {FormulaId::Bmss, 0};
    if (s == "P5") return {FormulaId::P5, 0};
    if (s.rfind("GEN", 0) == 0) return {FormulaId::Gen, parse_one_param(s, 3)};
    if (s.rfind("MULT4", 0) == 0) return {FormulaId::Mult4, parse_one_param(s, 5)};
    throw ParseError("unknown formula id '" + std::string(text) + "'", 0);
}

FormulaFamily formula_family(const FormulaSpec& spec) {
    FormulaFamily f;
    f.spec = spec;
    auto fd = [](int m, int k) { return ConfigKey{ConfigId::FermatDual, m, k}; };
    switch (spec.id) {
        case FormulaId::B3:
            f = {spec, 2, 4, 3, {{0, 3}}, {ConfigKey{ConfigId::B3Dual, 0, 0}}, false};
            break;
        case FormulaId::M3:
            f = {spec, 2, 5, 4, {{0, 4}}, {fd(3, 2)}, false};
            break;
        case FormulaId::M4:
            f = {spec, 2, 6, 5, {{0, 5}}, {fd(4, 1)}, false};
            break;
        case FormulaId::Gen: {
            const int m = spec.param;
            if (m < 2) throw std::invalid_argument("GEN(m) requires m >= 2");
            f = {spec, 2, m + 2, m + 1, {{0, m + 1}}, {}, false};
            for (int k = 0; k <= 3; ++k)
                if (k + m >= 5) f.configs.push_back(fd(m, k));
            break;
        }
        case FormulaId::Bmss:
            f = {spec, 3, 4, 5, {{0, 3}}, {ConfigKey{ConfigId::BmssP3, 0, 0}}, false};
            break;
        case FormulaId::Mult4: {
            const int n = spec.param;
            if (n < 3) throw std::invalid_argument("MULT4(n) requires n >= 3");
            f = {spec, 2, n + 2, n + 1, {{0, 4}}, {ConfigKey{ConfigId::Mult4Points, n, 0}}, false};
            break;
        }
        case FormulaId::P5:
            f = {spec, 5, 4, 0, {{0, 3}, {0, 2}}, {ConfigKey{ConfigId::P5Multi, 0, 0}}, true};
            break;
    }
    return f;
}

std::vector<std::string> formula_var_names(int ambient) {
    std::vector<std::string> names = default_var_names(ambient + 1);
    const char* letters = "abcd";
    for (int i = 0; i <= ambient; ++i)
        names.push_back(ambient <= 3 ? std::string(1, letters[i]) : "p" + std::to_string(i));
    return names;
}

MultiPoly build_formula(const FormulaSpec& spec) {
    switch (spec.id) {
        case FormulaId::B3: return parse_poly(kB3, kXyzNames);
        case FormulaId::M3: return parse_poly(kM3, formula_var_names(2));
        case FormulaId::M4: return parse_poly(kM4, formula_var_names(2));
        case FormulaId::Gen: {
            const int m = spec.param;
            if (m < 2) throw std::invalid_argument("GEN(m) requires m >= 2");
            return m % 2 == 0 ? gen_even(m, true) : gen_odd(m);
        }
        case FormulaId::Bmss: return parse_poly(kBmss, formula_var_names(3));
        case FormulaId::Mult4:
            if (spec.param < 3) throw std::invalid_argument("MULT4(n) requires n >= 3");
            return mult4(spec.param, false);
        case FormulaId::P5: throw std::invalid_argument("P5 has no closed form");
    }
    throw std::invalid_argument("unknown formula");
}

MultiPoly gen_even_uniform_prefactor(int m) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("uniform-prefactor variant needs even m >= 2");
    return gen_even(m, false);
}

MultiPoly perturbed_mult4(int n) { return mult4(n, true); }

MultiPoly specialize(const MultiPoly& formula, int ambient, std::span<const Cyclo> point) {
    const int n1 = ambient + 1;
    if (static_cast<int>(point.size()) != n1) throw std::invalid_argument("specialize: point has wrong length");
    std::vector<MultiPoly> images;
    for (int i = 0; i < n1; ++i) images.push_back(MultiPoly::variable(n1, i));
    for (int i = 0; i < n1; ++i) images.push_back(MultiPoly::constant(n1, point[i]));
    return formula.compose(images);
}

MultiPoly substitute_x(const MultiPoly& formula, int ambient, std::span<const Cyclo> x) {
    const int n1 = ambient + 1;
    if (static_cast<int>(x.size()) != n1) throw std::invalid_argument("substitute_x: point has wrong length");
    std::vector<MultiPoly> images;
    for (int i = 0; i < n1; ++i) images.push_back(MultiPoly::constant(2 * n1, x[i]));
    for (int i = 0; i < n1; ++i) images.push_back(MultiPoly::variable(2 * n1, n1 + i));
    return formula.compose(images);
}

bool symbolic_vanishing_on(const MultiPoly& formula, int ambient, const FatScheme& Z) {
    for (const auto& comp : Z.components) {
        if (comp.flat.dim() != 0) throw std::invalid_argument("symbolic vanishing is implemented for points only");
        const auto p = comp.flat.as_point();
        for (const auto& beta : monomial_basis(ambient + 1, comp.mult - 1)) {
            const MultiPoly g = formula.partial(x_multi_index(beta, formula.nvars()));
            if (!substitute_x(g, ambient, p.coords()).is_zero()) return false;
        }
    }
    return true;
}

MultiplicityCertificate symbolic_multiplicity_at_general(const MultiPoly& formula, int ambient, int expected) {
    MultiplicityCertificate cert;
    cert.attained = expected + 1;
    for (int o = 0; o <= expected; ++o) {
        bool nonzero = false;
        for (const auto& beta : monomial_basis(ambient + 1, o)) {
            const MultiPoly g = formula.partial(x_multi_index(beta, formula.nvars()));
            if (!at_general_point(g, ambient).is_zero()) {
                nonzero = true;
                break;
            }
        }
        if (nonzero) {
            cert.attained = o;
            break;
        }
    }
    cert.certified = cert.attained == expected;
    return cert;
}

bool in_fat_ideal_at_general(const MultiPoly& formula, int ambient, int m) {
    for (int o = 0; o < m; ++o)
        for (const auto& beta : monomial_basis(ambient + 1, o))
            if (!at_general_point(formula.partial(x_multi_index(beta, formula.nvars())), ambient).is_zero()) return false;
    return true;
}

std::vector<CofactorAttempt> mult4_cofactor_reconciliation() {
    const MultiPoly q = mult4(3, false);
    auto P = [](const std::string& s) { return parse_poly(s, kXyzNames); };
    const MultiPoly f1 = P("c*x - a*z"), f2 = P("c*y - b*z");
    const MultiPoly g1 = f2.pow(4), g2 = f1 * f2.pow(3), g4 = f1.pow(3) * f2, g5 = f1.pow(4);
    const MultiPoly lhs = P("c^4") * q;
    const MultiPoly rest = P("6*a^2*b*c*x - (4*a^3*b + 2*b*c^3)*z") * g2 + P("(4*a*b^3 + 2*a*c^3)*z - 6*a*b^2*c*y") * g4 +
                           P("(2*b^3*c + c^4)*y - (b^4 + 2*b*c^3)*z") * g5;
    std::vector<CofactorAttempt> out;
    for (const std::string var : {"x", "y", "z", "1"}) {
        const MultiPoly h1 = P("(a^4 + 2*a*c^3)*z - (2*a^3*c + c^4)*" + var);
        const MultiPoly rhs = h1 * g1 + rest;
        out.push_back({var == "1" ? "none" : var, rhs == lhs, equal_up_to_scalar(rhs, lhs)});
    }
    return out;
}

bool in_system_with_points(const MultiPoly& f, const FatScheme& Z, const std::vector<ProjPoint>& points,
                           const std::vector<int>& mults) {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous()) return false;
    const int d = *f.degree();
    FatScheme full = Z;
    for (std::size_t i = 0; i < points.size(); ++i) full.add_point(points[i], mults.at(i));
    const auto mat = conditions_rows(full, d);
    const auto v = f.to_vector(MonomialIndex(monomial_basis(Z.ambient + 1, d)));
    return std::all_of(mat.rows.begin(), mat.rows.end(), [&](const std::vector<Cyclo>& r) { return dot(r, v).is_zero(); });
}

FormulaVerification verify_formula(const FormulaSpec& spec, int trials, std::uint64_t seed) {
    const auto t0 = std::chrono::steady_clock::now();
    FormulaVerification v;
    v.spec = spec;
    v.family = formula_family(spec);
    const int N = v.family.ambient;
    const auto first = named_configuration(v.family.configs.front());
    for (const auto& c : v.family.configs) v.configs.push_back(c.to_string());

    if (!v.family.existence_only) {
        const MultiPoly F = build_formula(spec);
        v.built = true;
        const auto xs = range_vars(0, N + 1), ps = range_vars(N + 1, N + 1);
        v.x_degree = F.degree_in(xs).value_or(-1);
        v.point_degree = F.degree_in(ps).value_or(-1);
        v.bihomogeneous = F.is_homogeneous_in(xs) && F.is_homogeneous_in(ps);
        const int mult = v.family.general.front().mult;
        TrialRng rng(seed);
        for (const auto& key : v.family.configs) {
            const auto cfg = key == v.family.configs.front() ? first : named_configuration(key);
            v.vanishing.push_back(symbolic_vanishing_on(F, N, cfg.scheme));
            const Flat P = random_flat(N, 0, rng, cfg.scheme, {});
            const ProjPoint p = P.as_point();
            v.kernel_member.push_back(in_system_with_points(specialize(F, N, p.coords()), cfg.scheme, {p}, {mult}));
        }
        v.multiplicity = symbolic_multiplicity_at_general(F, N, mult);
        v.fat_ideal_member = in_fat_ideal_at_general(F, N, mult);
        if (spec.id == FormulaId::Gen) {
            const int m = spec.param;
            const std::pair<int, FormulaSpec> known[] = {{2, {FormulaId::B3, 0}}, {3, {FormulaId::M3, 0}}, {4, {FormulaId::M4, 0}}};
            for (const auto& [mm, other] : known)
                if (mm == m)
                    v.notes.push_back("equals " + other.to_string() + " up to scalar: " +
                                      (equal_up_to_scalar(F, build_formula(other)) ? "yes" : "no"));
            if (m % 2 == 0) {
                const auto lit = symbolic_multiplicity_at_general(gen_even_uniform_prefactor(m), N, mult);
                v.notes.push_back("uniform a^(2k-1) prefactor variant: multiplicity " + std::to_string(lit.attained) +
                                  " at the general point");
            }
        }
    } else {
        v.notes.push_back("existence-only: no closed form, checked by random specialization");
    }
    v.notes.push_back("irreducibility: not verified");

    auto rep = decide_unexpected(first.scheme, v.family.general, v.family.degree, trials, seed, first.key.to_string());
    rep.certified = v.built && !v.vanishing.empty() && v.vanishing.front() && v.multiplicity.certified;
    v.unique = rep.actual == 1;
    v.uniqueness = rep;
    v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return v;
}

std::string verification_to_json(const FormulaVerification& v, bool timing, int indent) {
    nlohmann::ordered_json j;
    j["record"] = "formula";
    j["version"] = library_version();
    j["formula"] = v.spec.to_string();
    j["ambient"] = v.family.ambient;
    j["degree"] = v.family.degree;
    j["existence_only"] = v.family.existence_only;
    if (v.built) {
        j["x_degree"] = v.x_degree;
        j["point_degree"] = v.point_degree;
        j["bihomogeneous"] = v.bihomogeneous;
    }
    auto cfgs = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < v.configs.size(); ++i) {
        nlohmann::ordered_json c;
        c["config"] = v.configs[i];
        if (v.built) {
            c["vanishing"] = static_cast<bool>(v.vanishing[i]);
            c["kernel_member"] = static_cast<bool>(v.kernel_member[i]);
        }
        cfgs.push_back(c);
    }
    j["configs"] = cfgs;
    if (v.built) {
        j["multiplicity"] = {{"expected", v.family.general.front().mult},
                             {"attained", v.multiplicity.attained},
                             {"certified", v.multiplicity.certified}};
        j["fat_ideal_member"] = v.fat_ideal_member;
    }
    if (v.uniqueness) j["uniqueness"] = nlohmann::ordered_json::parse(report_to_json(*v.uniqueness));
    j["unique"] = v.unique;
    j["notes"] = v.notes;
    if (timing) j["wall_time_s"] = v.seconds;
    return j.dump(indent);
}

std::string verification_to_text(const FormulaVerification& v, bool timing) {
    std::ostringstream out;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "formula       " << v.spec.to_string() << (v.family.existence_only ? " (existence-only)" : "") << "\n";
    out << "ambient       P^" << v.family.ambient << "\n";
    out << "degree        " << v.family.degree << "\n";
    if (v.built) {
        out << "built degree  x " << v.x_degree << ", point " << v.point_degree
            << (v.bihomogeneous ? " (bihomogeneous)" : " (NOT bihomogeneous)") << "\n";
        for (std::size_t i = 0; i < v.configs.size(); ++i)
            out << "config        " << v.configs[i] << ": vanishing " << yn(v.vanishing[i]) << ", kernel member "
                << yn(v.kernel_member[i]) << "\n";
        out << "multiplicity  expected " << v.family.general.front().mult << ", attained " << v.multiplicity.attained
            << (v.multiplicity.certified ? " (certified)" : " (NOT certified)") << "\n";
        out << "fat ideal     " << yn(v.fat_ideal_member) << "\n";
    } else {
        for (const auto& c : v.configs) out << "config        " << c << "\n";
    }
    if (v.uniqueness)
        out << "uniqueness    expected " << v.uniqueness->expected << ", actual " << v.uniqueness->actual
            << (v.unique ? " (unique)" : "") << ", unexpected " << (v.uniqueness->unexpected ? "true" : "false")
            << ", trials " << v.uniqueness->trials << ", seed " << v.uniqueness->seed << "\n";
    for (const auto& n : v.notes) out << "note          " << n << "\n";
    if (timing) out << "wall time     " << v.seconds << " s\n";
    return out.str();
}

}  // namespace fermat
