#include "fermat/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fermat/error.hpp"

namespace fermat {

namespace {

// Exact division of integer polynomials (lowest degree first); divisor monic.
std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const long c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0) throw std::logic_error("cyclotomic division not exact");
    return q;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    static std::mutex mu;
    static std::map<int, std::vector<long>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    // x^n - 1 = prod_{d | n} Phi_d
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div_exact(std::move(p), cyclotomic_polynomial(d));
    std::lock_guard lock(mu);
    cache.emplace(n, p);
    return p;
}

int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi requires n >= 1");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

int lcm_order(int a, int b) { return std::lcm(a, b); }

const CycloContext& cyclo_context(int n) {
    if (n < 1) throw std::invalid_argument("root order must be >= 1, got " + std::to_string(n));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloContext>> registry;
    {
        std::lock_guard lock(mu);
        if (auto it = registry.find(n); it != registry.end()) return *it->second;
    }
    auto ctx = std::make_unique<CycloContext>();
    ctx->order = n;
    ctx->modulus = cyclotomic_polynomial(n);
    ctx->phi = static_cast<int>(ctx->modulus.size()) - 1;
    const int phi = ctx->phi;
    std::vector<Rational> cur(phi, 0);
    cur[0] = 1;
    for (int k = 0; k < n; ++k) {
        ctx->powers.push_back(cur);
        // multiply by x and reduce
        std::vector<Rational> next(phi, 0);
        for (int i = 0; i + 1 < phi; ++i) next[i + 1] = cur[i];
        const Rational top = cur[phi - 1];
        if (phi >= 1 && top != 0)
            for (int j = 0; j < phi; ++j) next[j] -= top * ctx->modulus[j];
        cur = std::move(next);
    }
    std::lock_guard lock(mu);
    auto [it, inserted] = registry.emplace(n, std::move(ctx));
    return *it->second;
}

Cyclo::Cyclo(const Rational& value, int order) : ctx_(&cyclo_context(order)), c_(ctx_->phi, 0) {
    c_[0] = value;
    c_[0].canonicalize();
}

Cyclo Cyclo::root(int n, long k) {
    const CycloContext& ctx = cyclo_context(n);
    long r = k % n;
    if (r < 0) r += n;
    return Cyclo(&ctx, ctx.powers[static_cast<std::size_t>(r)]);
}

bool Cyclo::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool Cyclo::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool Cyclo::is_one() const { return is_rational() && c_[0] == 1; }

Cyclo Cyclo::to_order(int m) const {
    const int n = order();
    if (m == n) return *this;
    if (m % n != 0)
        throw std::invalid_argument("cannot embed Q(e_" + std::to_string(n) + ") into Q(e_" + std::to_string(m) + ")");
    const CycloContext& target = cyclo_context(m);
    std::vector<Rational> out(target.phi, 0);
    const int step = m / n;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
        if (sgn(c_[i]) == 0) continue;
        const auto& pw = target.powers[static_cast<std::size_t>((i * step) % m)];
        for (int j = 0; j < target.phi; ++j)
            if (sgn(pw[j]) != 0) out[j] += c_[i] * pw[j];
    }
    return Cyclo(&target, std::move(out));
}

void Cyclo::unify_with(const Cyclo& o) {
    if (o.ctx_ == ctx_) return;
    if (o.is_rational()) return;
    if (is_rational()) {
        Rational v = c_[0];
        ctx_ = o.ctx_;
        c_.assign(ctx_->phi, 0);
        c_[0] = v;
        return;
    }
    *this = to_order(lcm_order(order(), o.order()));
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (o.ctx_ != ctx_) {
        unify_with(o);
        if (o.ctx_ != ctx_) {
            if (o.is_rational()) {
                c_[0] += o.c_[0];
                return *this;
            }
            return *this += o.to_order(order());
        }
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    if (o.ctx_ != ctx_) {
        unify_with(o);
        if (o.ctx_ != ctx_) {
            if (o.is_rational()) {
                c_[0] -= o.c_[0];
                return *this;
            }
            return *this -= o.to_order(order());
        }
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

void Cyclo::reduce_product(std::vector<Rational>& prod) const {
    const int phi = ctx_->phi;
    const auto& mod = ctx_->modulus;
    for (int i = static_cast<int>(prod.size()) - 1; i >= phi; --i) {
        if (sgn(prod[i]) == 0) continue;
        const Rational top = prod[i];
        for (int j = 0; j < phi; ++j)
            if (mod[j] != 0) prod[i - phi + j] -= top * mod[j];
        prod[i] = 0;
    }
    prod.resize(phi);
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    if (o.ctx_ != ctx_) {
        if (o.is_rational()) {
            const Rational s = o.c_[0];
            for (auto& q : c_) q *= s;
            return *this;
        }
        unify_with(o);
        if (o.ctx_ != ctx_) return *this *= o.to_order(order());
    }
    const int phi = ctx_->phi;
    if (phi == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    std::vector<Rational> prod(2 * phi - 1, 0);
    for (int i = 0; i < phi; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (int j = 0; j < phi; ++j)
            if (sgn(o.c_[j]) != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    reduce_product(prod);
    c_ = std::move(prod);
    return *this;
}

void Cyclo::sub_mul(const Cyclo& a, const Cyclo& b) {
    if (a.ctx_ != ctx_ || b.ctx_ != ctx_) {
        *this -= a * b;
        return;
    }
    const int phi = ctx_->phi;
    if (phi == 1) {
        thread_local Rational t;
        mpq_mul(t.get_mpq_t(), a.c_[0].get_mpq_t(), b.c_[0].get_mpq_t());
        c_[0] -= t;
        return;
    }
    thread_local std::vector<Rational> prod;
    thread_local Rational t;
    prod.assign(2 * phi - 1, 0);
    bool any = false;
    for (int i = 0; i < phi; ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (sgn(b.c_[j]) == 0) continue;
            mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            prod[i + j] += t;
            any = true;
        }
    }
    if (!any) return;
    const auto& mod = ctx_->modulus;
    for (int i = 2 * phi - 2; i >= phi; --i) {
        if (sgn(prod[i]) == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (mod[j] == 0) continue;
            t = prod[i] * mod[j];
            prod[i - phi + j] -= t;
        }
    }
    for (int i = 0; i < phi; ++i)
        if (sgn(prod[i]) != 0) c_[i] -= prod[i];
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(e_" + std::to_string(order()) + ")");
    const int phi = ctx_->phi;
    if (phi == 1 || is_rational()) {
        Cyclo r(ctx_, std::vector<Rational>(phi, 0));
        r.c_[0] = 1 / c_[0];
        return r;
    }
    // Solve M y = e_0 where column j of M is (this * x^j) mod Phi_n.
    std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1, 0));
    Cyclo col = *this;
    const Cyclo x = root(order(), 1);
    for (int j = 0; j < phi; ++j) {
        for (int i = 0; i < phi; ++i) m[i][j] = col.c_[i];
        col *= x;
    }
    m[0][phi] = 1;
    for (int c = 0; c < phi; ++c) {
        int p = c;
        while (p < phi && sgn(m[p][c]) == 0) ++p;
        if (p == phi) throw std::logic_error("singular multiplication matrix in Q(e_n)");
        std::swap(m[p], m[c]);
        const Rational inv = 1 / m[c][c];
        for (int k = c; k <= phi; ++k) m[c][k] *= inv;
        for (int r = 0; r < phi; ++r) {
            if (r == c || sgn(m[r][c]) == 0) continue;
            const Rational f = m[r][c];
            for (int k = c; k <= phi; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<Rational> y(phi);
    for (int i = 0; i < phi; ++i) y[i] = m[i][phi];
    return Cyclo(ctx_, std::move(y));
}

Cyclo& Cyclo::operator/=(const Cyclo& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in Q(e_n)");
    if (o.is_rational()) {
        const Rational inv = 1 / o.c_[0];
        for (auto& q : c_) q *= inv;
        return *this;
    }
    return *this *= o.inverse();
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo result(Rational(1), order());
    Cyclo base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Cyclo Cyclo::conj() const {
    const int n = order();
    Cyclo r = zero(n);
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
        if (sgn(c_[i]) == 0) continue;
        r += Cyclo(c_[i], n) * root(n, -i);
    }
    return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.ctx_ == b.ctx_) return a.c_ == b.c_;
    if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
    const int m = lcm_order(a.order(), b.order());
    return a.to_order(m).c_ == b.to_order(m).c_;
}

int Cyclo::compare(const Cyclo& a, const Cyclo& b) {
    if (a.ctx_ != b.ctx_) {
        const int m = lcm_order(a.order(), b.order());
        return compare(a.to_order(m), b.to_order(m));
    }
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        const int c = cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::complex<double> Cyclo::to_complex() const {
    const double step = 2.0 * std::numbers::pi / order();
    std::complex<double> z = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        z += c_[i].get_d() * std::polar(1.0, step * static_cast<double>(i));
    }
    return z;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string Cyclo::to_string() const {
    std::string s = "cyclo(" + std::to_string(order()) + ")[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ", ";
        s += c_[i].get_str();
    }
    return s + "]";
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    void expect(std::string_view token) {
        skip_ws();
        if (text.substr(pos, token.size()) != token)
            throw ParseError("expected '" + std::string(token) + "'", pos);
        pos += token.size();
    }
    long integer() {
        skip_ws();
        const std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || !std::isdigit(static_cast<unsigned char>(text[pos - 1])))
            throw ParseError("expected integer", start);
        return std::stol(std::string(text.substr(start, pos - start)));
    }
    Rational rational() {
        skip_ws();
        const std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
        std::string tok(text.substr(start, pos - start));
        if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
        Rational q;
        if (tok.empty() || q.set_str(tok, 10) != 0 || sgn(q.get_den()) == 0)
            throw ParseError("expected rational", start);
        q.canonicalize();
        return q;
    }
};

}  // namespace

Cyclo Cyclo::parse(std::string_view text) {
    Cursor cur{text};
    cur.expect("cyclo");
    cur.expect("(");
    const long n = cur.integer();
    if (n < 1) throw ParseError("root order must be >= 1", cur.pos);
    cur.expect(")");
    cur.expect("[");
    const CycloContext& ctx = cyclo_context(static_cast<int>(n));
    std::vector<Rational> c;
    cur.skip_ws();
    if (cur.pos < text.size() && text[cur.pos] != ']') {
        c.push_back(cur.rational());
        for (;;) {
            cur.skip_ws();
            if (cur.pos < text.size() && text[cur.pos] == ',') {
                ++cur.pos;
                c.push_back(cur.rational());
            } else {
                break;
            }
        }
    }
    cur.expect("]");
    cur.skip_ws();
    if (cur.pos != text.size()) throw ParseError("trailing characters", cur.pos);
    if (static_cast<int>(c.size()) != ctx.phi)
        throw ParseError("expected " + std::to_string(ctx.phi) + " coefficients for order " + std::to_string(n), 0);
    return Cyclo(&ctx, std::move(c));
}

std::string Cyclo::to_expr() const {
    if (is_rational()) return c_[0].get_str();
    const std::string root_lit = "e(" + std::to_string(order()) + ")";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        Rational mag = abs(c_[i]);
        const bool neg = sgn(c_[i]) < 0;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        std::string pw = i == 0 ? "" : (i == 1 ? root_lit : root_lit + "^" + std::to_string(i));
        if (i == 0)
            s += mag.get_str();
        else if (mag == 1)
            s += pw;
        else
            s += mag.get_str() + "*" + pw;
    }
    return "(" + s + ")";
}

}  // namespace fermat
