#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace fermat {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = mpq_class;

/// Per-order data for Q(e_n): the cyclotomic polynomial and the reduced powers of e_n.
struct CycloContext {
    int order = 1;
    int phi = 1;
    /// Coefficients of Phi_n, lowest degree first; monic, length phi + 1.
    std::vector<long> modulus;
    /// powers[k] = e_n^k reduced modulo Phi_n, for 0 <= k < order.
    std::vector<std::vector<Rational>> powers;
};

/// Shared, immutable context for order n. Contexts live for the whole process.
const CycloContext& cyclo_context(int n);

/// Integer polynomial Phi_n, lowest degree first.
std::vector<long> cyclotomic_polynomial(int n);

int euler_phi(int n);

/// An element of the cyclotomic field Q(e_n), e_n = exp(2 pi i / n).
///
/// Stored as the coefficient vector of its unique representative of degree
/// < phi(n) in Q[x] / Phi_n(x). Values of different orders interoperate by
/// embedding into the field of the least common multiple of the two orders;
/// rational values adopt the order of the other operand.
class Cyclo {
public:
    Cyclo() : Cyclo(Rational(0), 1) {}
    Cyclo(long value) : Cyclo(Rational(value), 1) {}  // NOLINT(implicit)
    Cyclo(const Rational& value, int order = 1);

    static Cyclo zero(int order) { return Cyclo(Rational(0), order); }
    static Cyclo one(int order) { return Cyclo(Rational(1), order); }

    /// e_n^k; root(n, 0) is 1.
    static Cyclo root(int n, long k);
    /// The rational r viewed as an element of Q(e_n).
    static Cyclo embed(const Rational& r, int n) { return Cyclo(r, n); }

    int order() const { return ctx_->order; }
    int degree() const { return ctx_->phi; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Constant term; meaningful when is_rational().
    const Rational& rational_part() const { return c_[0]; }

    /// Same value as an element of Q(e_m); m must be a multiple of order().
    Cyclo to_order(int m) const;

    Cyclo inverse() const;
    Cyclo pow(long e) const;
    /// Complex conjugate (e_n -> e_n^{-1}).
    Cyclo conj() const;

    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o);
    Cyclo operator-() const;

    /// *this -= a * b without temporaries; a and b must share order() with *this
    /// (or be rational). Hot path of elimination.
    void sub_mul(const Cyclo& a, const Cyclo& b);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    std::complex<double> to_complex() const;

    /// `cyclo(n)[c0, c1, ...]` with rationals written as p/q.
    std::string to_string() const;
    /// Inverse of to_string(). Throws ParseError.
    static Cyclo parse(std::string_view text);
    /// Expression form used inside polynomials: `3/2`, `e(3)`, `(1 - 2*e(3))`.
    std::string to_expr() const;

    /// Lexicographic order on coefficient vectors (after embedding into a common
    /// order). Only used to make sorted outputs deterministic.
    static int compare(const Cyclo& a, const Cyclo& b);

private:
    Cyclo(const CycloContext* ctx, std::vector<Rational> c) : ctx_(ctx), c_(std::move(c)) {}
    void reduce_product(std::vector<Rational>& prod) const;
    void unify_with(const Cyclo& o);

    const CycloContext* ctx_;
    std::vector<Rational> c_;
};

int lcm_order(int a, int b);

std::string rational_to_string(const Rational& r);

}  // namespace fermat
