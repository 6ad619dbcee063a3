#include "fermat/parse.hpp"

#include <cctype>
#include <stdexcept>

#include "fermat/error.hpp"

namespace fermat {

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, std::span<const std::string> names)
        : text_(text), names_(names), nvars_(static_cast<int>(std::max<std::size_t>(names.size(), 1))) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    MultiPoly constant(const Cyclo& c) const { return MultiPoly::constant(nvars_, c); }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                MultiPoly d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                if (d.size() != 1 || *d.degree() != 0) throw ParseError("division by a non-constant", at);
                acc *= d.leading_term().second.inverse();
            } else {
                return acc;
            }
        }
    }

    MultiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (accept('^')) {
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError("expected exponent", start);
            base = base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
        }
        return base;
    }

    MultiPoly atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return constant(Cyclo(Rational(mpz_class(std::string(text_.substr(start, pos_ - start))))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string ident(text_.substr(start, pos_ - start));
            if (ident == "e" && accept('(')) {
                skip_ws();
                const std::size_t at = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                if (at == pos_) throw ParseError("expected root order", at);
                const int n = std::stoi(std::string(text_.substr(at, pos_ - at)));
                if (n < 1) throw ParseError("root order must be >= 1", at);
                expect(')');
                return constant(Cyclo::root(n, 1));
            }
            for (std::size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == ident) return MultiPoly::variable(nvars_, static_cast<int>(i));
            throw ParseError("unknown variable '" + ident + "'", start);
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    std::string_view text_;
    std::span<const std::string> names_;
    int nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, std::span<const std::string> names) {
    if (names.empty()) throw std::invalid_argument("parse_poly needs at least one variable name");
    return ExprParser(text, names).parse();
}

MultiPoly parse_poly(std::string_view text, int nvars) {
    const auto names = default_var_names(nvars);
    return parse_poly(text, names);
}

Cyclo parse_scalar(std::string_view text) {
    const std::vector<std::string> none;
    MultiPoly p = ExprParser(text, none).parse();
    if (p.is_zero()) return Cyclo::zero(p.root_order());
    if (p.size() != 1 || *p.degree() != 0) throw ParseError("expected a scalar", 0);
    return p.leading_term().second;
}

std::vector<Cyclo> parse_linear_form(std::string_view text, int nvars) {
    MultiPoly p = parse_poly(text, nvars);
    if (p.is_zero() || !p.is_homogeneous() || *p.degree() != 1) throw ParseError("expected a nonzero linear form", 0);
    std::vector<Cyclo> coeffs;
    for (int i = 0; i < nvars; ++i) {
        Exponent e(nvars, 0);
        e[i] = 1;
        coeffs.push_back(p.coeff(e));
    }
    return coeffs;
}

std::string scalar_literal(const Cyclo& c) {
    if (c.is_rational()) return c.rational_part().get_str();
    const int n = c.order();
    for (int k = 1; k < n; ++k) {
        const Cyclo r = Cyclo::root(n, k);
        const std::string lit = "e(" + std::to_string(n) + ")" + (k > 1 ? "^" + std::to_string(k) : "");
        if (c == r) return lit;
        if (c == -r) return "-" + lit;
    }
    return c.to_expr();
}

std::string linear_form_to_string(std::span<const Cyclo> form) {
    std::string s;
    for (std::size_t i = 0; i < form.size(); ++i) {
        if (form[i].is_zero()) continue;
        std::string lit = scalar_literal(form[i]);
        bool neg = !lit.empty() && lit[0] == '-';
        if (neg) lit.erase(0, 1);
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (lit != "1") s += lit + "*";
        s += "x" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

}  // namespace fermat
