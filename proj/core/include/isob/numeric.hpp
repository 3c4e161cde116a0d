#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace isob {

using Integer = mpz_class;
using Rational = mpq_class;

/// Small integer vectors used on hot paths (weights in fundamental
/// coordinates, Cartan rows). Overflow is checked where it can occur.
using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVec>;

std::string to_string(const Integer& value);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Accepts "p", "-p", "p/q". Throws Error(InvalidArgument) otherwise.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals, e.g. "2,0,-1/2". Whitespace is ignored.
std::vector<Rational> parse_rational_list(std::string_view text);

Integer factorial(unsigned long n);

bool is_integer(const Rational& value);

/// Narrows an integral rational to int64, throwing on fractional or
/// out-of-range input.
std::int64_t to_int64(const Rational& value);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace isob
