#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fermat/mpoly.hpp"

namespace fermat {

/// Parse a polynomial expression in the variables `names`.
///
/// Grammar: sums and differences of products; `^` with a nonnegative integer
/// exponent; parentheses; integer and `p/q` literals; division by nonzero
/// constants; `e(n)` for the primitive n-th root of unity. This is the grammar
/// MultiPoly::to_string emits. Throws ParseError with the offending position.
MultiPoly parse_poly(std::string_view text, std::span<const std::string> names);

/// Same, with variables x0..x{nvars-1}.
MultiPoly parse_poly(std::string_view text, int nvars);

/// A scalar expression (no variables), e.g. `-e(3)^2` or `(1/2 + e(4))`.
Cyclo parse_scalar(std::string_view text);

/// Coefficients of a linear form in x0..x{nvars-1}; rejects non-linear input.
std::vector<Cyclo> parse_linear_form(std::string_view text, int nvars);

/// Short literal for a scalar: `e(n)^k` / `-e(n)^k` for signed roots of unity,
/// plain rationals, otherwise the parenthesised expression form.
std::string scalar_literal(const Cyclo& c);

/// `c0*x0 + c1*x1 + ...` using scalar_literal for coefficients.
std::string linear_form_to_string(std::span<const Cyclo> form);

}  // namespace fermat
