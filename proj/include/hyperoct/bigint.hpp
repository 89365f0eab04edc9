#pragma once

#include <gmpxx.h>

#include <string>

namespace hyperoct {

using BigInt = mpz_class;
/// Exact rational scalar. Every coefficient in the library is carried in this
/// type or in BigInt; nothing is ever rounded.
using Rational = mpq_class;

BigInt factorial(long m);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string toString(const Rational& value);
std::string toString(const BigInt& value);
Rational parseRational(const std::string& text);

inline bool isInteger(const Rational& value) { return value.get_den() == 1; }

}  // namespace hyperoct
