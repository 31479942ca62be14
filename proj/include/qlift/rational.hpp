#pragma once

#include <gmpxx.h>

#include <string>

namespace qlift {

using Integer = mpz_class;
using Rational = mpq_class;

// Reduced fraction with positive denominator. Throws on zero denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

std::string to_string(const Rational& r);

// Accepts "n" or "n/d" with optional sign.
Rational parse_rational(const std::string& text);

}  // namespace qlift
