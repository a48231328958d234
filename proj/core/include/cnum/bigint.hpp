#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cnum {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(std::uint32_t n);

// C(n, k); zero when k > n.
BigInt binomial(const BigInt& n, std::uint32_t k);
BigInt binomial(std::uint32_t n, std::uint32_t k);

// (Σ parts)! / Π parts!
BigInt multinomial(std::span<const std::uint32_t> parts);

std::string to_string(const BigInt& value);

// "n" for integers, "n/d" otherwise, denominator positive.
std::string to_string(const Rational& value);

// Decimal rendering with the given number of significant digits, rounded half
// away from zero. Used only at output boundaries.
std::string to_decimal(const Rational& value, int significant_digits = 12);

}  // namespace cnum
