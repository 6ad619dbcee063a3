#include "fermat/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fermat/parse.hpp"

namespace fermat {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

namespace {

void fill_basis(int var, int remaining, Exponent& cur, std::vector<Exponent>& out) {
    const int nvars = static_cast<int>(cur.size());
    if (var == nvars - 1) {
        cur[var] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[var] = e;
        fill_basis(var + 1, remaining - e, cur, out);
    }
    cur[var] = 0;
}

}  // namespace

std::vector<Exponent> monomial_basis(int nvars, int d) {
    if (nvars < 1 || d < 0) throw std::invalid_argument("monomial_basis: need nvars >= 1 and d >= 0");
    std::vector<Exponent> out;
    Exponent cur(nvars, 0);
    fill_basis(0, d, cur, out);
    return out;
}

MonomialIndex::MonomialIndex(std::vector<Exponent> basis) : basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> MonomialIndex::find(const Exponent& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

MultiPoly::MultiPoly(int nvars, int root_order) : nvars_(nvars), order_(root_order) {
    if (nvars < 1) throw std::invalid_argument("MultiPoly needs at least one variable");
    cyclo_context(root_order);
}

MultiPoly MultiPoly::constant(int nvars, const Cyclo& c) {
    MultiPoly p(nvars, c.order());
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
    Exponent e(nvars, 0);
    e[index] = 1;
    return monomial(e, Cyclo(1));
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Cyclo& c) {
    MultiPoly p(static_cast<int>(e.size()), c.order());
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::linear_form(std::span<const Cyclo> coeffs) {
    const int n = static_cast<int>(coeffs.size());
    MultiPoly p(n);
    for (int i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

void MultiPoly::absorb_order(int order) {
    if (order == order_) return;
    order_ = lcm_order(order_, order);
}

void MultiPoly::add_term(const Exponent& e, const Cyclo& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length does not match nvars");
    if (c.is_zero()) return;
    if (!c.is_rational()) absorb_order(c.order());
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<int> MultiPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

std::optional<int> MultiPoly::degree_in(std::span<const int> vars) const {
    if (terms_.empty()) return std::nullopt;
    int best = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int v : vars) d += e.at(v);
        best = std::max(best, d);
    }
    return best;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = *degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return std::accumulate(t.first.begin(), t.first.end(), 0) == d; });
}

bool MultiPoly::is_homogeneous_in(std::span<const int> vars) const {
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int v : vars) s += e.at(v);
        if (d && *d != s) return false;
        d = s;
    }
    return true;
}

Cyclo MultiPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Cyclo::zero(order_) : it->second;
}

const MultiPoly::Terms::value_type& MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of the zero polynomial");
    return *terms_.begin();
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (o.nvars_ != nvars_)
        throw std::invalid_argument("variable count mismatch: " + std::to_string(nvars_) + " vs " +
                                    std::to_string(o.nvars_));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator*=(const Cyclo& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (!s.is_rational()) absorb_order(s.order());
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.nvars_, lcm_order(a.order_, b.order_));
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    MultiPoly result = constant(nvars_, Cyclo(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::partial(int var) const {
    if (var < 0 || var >= nvars_) throw std::out_of_range("partial: variable index out of range");
    MultiPoly r(nvars_, order_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f = e;
        f[var] -= 1;
        r.add_term(f, c * Cyclo(static_cast<long>(e[var])));
    }
    return r;
}

MultiPoly MultiPoly::partial(const Exponent& beta) const {
    if (static_cast<int>(beta.size()) != nvars_) throw std::invalid_argument("partial: multi-index length mismatch");
    MultiPoly r(nvars_, order_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        Rational factor = 1;
        bool dead = false;
        for (int i = 0; i < nvars_ && !dead; ++i) {
            if (beta[i] > e[i]) {
                dead = true;
                break;
            }
            for (int k = 0; k < beta[i]; ++k) factor *= e[i] - k;
            f[i] -= beta[i];
        }
        if (!dead) r.add_term(f, c * Cyclo(factor));
    }
    return r;
}

Cyclo MultiPoly::evaluate(std::span<const Cyclo> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluate: point has " + std::to_string(point.size()) + " coordinates, expected " +
                                    std::to_string(nvars_));
    // powers[i][k] = point[i]^k, grown on demand
    std::vector<std::vector<Cyclo>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) powers[i].push_back(Cyclo(1));
    Cyclo sum = Cyclo::zero(order_);
    for (const auto& [e, c] : terms_) {
        Cyclo t = c;
        for (int i = 0; i < nvars_ && !t.is_zero(); ++i) {
            while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * point[i]);
            if (e[i]) t *= powers[i][e[i]];
        }
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("compose: expected " + std::to_string(nvars_) + " images");
    if (images.empty()) throw std::invalid_argument("compose: no images");
    const int m = images[0].nvars();
    for (const auto& img : images)
        if (img.nvars() != m) throw std::invalid_argument("compose: images differ in variable count");
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) powers[i].push_back(constant(m, Cyclo(1)));
    MultiPoly r(m, order_);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = constant(m, c);
        for (int i = 0; i < nvars_ && !t.is_zero(); ++i) {
            if (e[i] == 0) continue;
            while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
            t *= powers[i][e[i]];
        }
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::substitute_linear(const CycloMatrix& map) const {
    if (static_cast<int>(map.size()) != nvars_)
        throw std::invalid_argument("substitute_linear: matrix has " + std::to_string(map.size()) + " rows, expected " +
                                    std::to_string(nvars_));
    std::vector<MultiPoly> images;
    images.reserve(map.size());
    const std::size_t m = map.empty() ? 0 : map[0].size();
    if (m == 0) throw std::invalid_argument("substitute_linear: matrix needs at least one column");
    for (const auto& row : map) {
        if (row.size() != m) throw std::invalid_argument("substitute_linear: ragged matrix");
        images.push_back(linear_form(row));
    }
    return compose(images);
}

MultiPoly MultiPoly::extend_vars(int new_nvars) const {
    if (new_nvars < nvars_) throw std::invalid_argument("extend_vars cannot drop variables");
    MultiPoly r(new_nvars, order_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f.resize(new_nvars, 0);
        r.add_term(f, c);
    }
    return r;
}

std::vector<Cyclo> MultiPoly::to_vector(const MonomialIndex& basis) const {
    std::vector<Cyclo> v(basis.size(), Cyclo::zero(order_));
    for (const auto& [e, c] : terms_) {
        auto idx = basis.find(e);
        if (!idx) throw std::invalid_argument("to_vector: term outside the monomial basis");
        v[*idx] = c;
    }
    return v;
}

MultiPoly MultiPoly::from_vector(std::span<const Cyclo> coeffs, const MonomialIndex& basis, int nvars) {
    if (coeffs.size() != basis.size()) throw std::invalid_argument("from_vector: length mismatch");
    MultiPoly p(nvars);
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(basis.at(i), coeffs[i]);
    return p;
}

std::vector<std::string> default_var_names(int nvars) {
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
    std::vector<std::string> fallback;
    if (names.empty()) {
        fallback = default_var_names(nvars_);
        names = fallback;
    }
    if (static_cast<int>(names.size()) != nvars_) throw std::invalid_argument("to_string: wrong number of names");
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        bool negative = false;
        std::string coef;
        if (c.is_rational()) {
            Rational q = c.rational_part();
            negative = sgn(q) < 0;
            q = abs(q);
            if (q != 1 || mono.empty()) coef = q.get_str();
        } else {
            coef = c.to_expr();
        }
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        s += coef;
        if (!coef.empty() && !mono.empty()) s += "*";
        s += mono;
    }
    return s;
}

bool equal_up_to_scalar(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    const auto& [ef, cf] = f.leading_term();
    const auto& [eg, cg] = g.leading_term();
    if (ef != eg) return false;
    return f * cg == g * cf;
}

ProjPoint::ProjPoint(std::vector<Cyclo> coords) : coords_(std::move(coords)) {
    if (coords_.empty() || std::all_of(coords_.begin(), coords_.end(), [](const Cyclo& c) { return c.is_zero(); }))
        throw std::invalid_argument("projective point needs a nonzero coordinate");
}

ProjPoint ProjPoint::normalized() const {
    auto it = std::find_if(coords_.begin(), coords_.end(), [](const Cyclo& c) { return !c.is_zero(); });
    const Cyclo inv = it->inverse();
    std::vector<Cyclo> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(c * inv);
    return ProjPoint(std::move(out));
}

std::string ProjPoint::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += " : ";
        s += scalar_literal(coords_[i]);
    }
    return s + ")";
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.size() != b.size()) return false;
    const auto na = a.normalized();
    const auto nb = b.normalized();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (na.coords_[i] != nb.coords_[i]) return false;
    return true;
}

}  // namespace fermat
