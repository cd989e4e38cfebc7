#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace latorb {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p" or "p/q". Throws Errc::ParseError on malformed input.
Rational rational_from_string(const std::string& s);

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// 2^e for signed e.
Rational pow2_rational(long e);

double to_double(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace latorb
