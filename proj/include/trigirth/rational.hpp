#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trigirth {

/// Exact arbitrary-precision rational; always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Formats as "p/q", including q = 1.
std::string format_rational(const Rational& r);
/// Accepts "p/q" or "p". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Positive rescaling of a vector to coprime integers. Zero vectors are unchanged.
std::vector<Rational> primitive_integer_scaling(std::span<const Rational> v);

}  // namespace trigirth
