#pragma once

#include <random>
#include <vector>

#include "fermat/cyclo.hpp"
#include "fermat/mpoly.hpp"

namespace fermat::testing {

inline Rational random_rational(std::mt19937_64& g, long bound = 9) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    return Rational(num(g), den(g));
}

inline Cyclo random_cyclo(std::mt19937_64& g, int n, long bound = 9) {
    Cyclo x = Cyclo::zero(n);
    for (int k = 0; k < n; ++k) x += Cyclo::root(n, k) * Cyclo(random_rational(g, bound));
    return x;
}

inline Cyclo random_nonzero_cyclo(std::mt19937_64& g, int n) {
    for (;;) {
        Cyclo x = random_cyclo(g, n);
        if (!x.is_zero()) return x;
    }
}

// Homogeneous of degree d with `terms` random terms (may collide).
inline MultiPoly random_form(std::mt19937_64& g, int nvars, int d, int n, int terms = 6) {
    const auto basis = monomial_basis(nvars, d);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    MultiPoly f(nvars, n);
    for (int i = 0; i < terms; ++i) f.add_term(basis[pick(g)], random_cyclo(g, n, 5));
    return f;
}

inline std::vector<Cyclo> random_vector(std::mt19937_64& g, int len, long bound = 50) {
    std::uniform_int_distribution<long> c(-bound, bound);
    std::vector<Cyclo> v;
    for (int i = 0; i < len; ++i) v.emplace_back(c(g));
    return v;
}

}  // namespace fermat::testing
