#include "cnum/bigint.hpp"

namespace cnum {

BigInt factorial(std::uint32_t n) {
  BigInt result = 1;
  for (std::uint32_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(const BigInt& n, std::uint32_t k) {
  if (n < k) return 0;
  BigInt result = 1;
  // Each prefix product is itself a binomial coefficient, so the division is exact.
  for (std::uint32_t i = 1; i <= k; ++i) {
    result *= n - (k - i);
    result /= i;
  }
  return result;
}

BigInt binomial(std::uint32_t n, std::uint32_t k) { return binomial(BigInt(n), k); }

BigInt multinomial(std::span<const std::uint32_t> parts) {
  BigInt result = 1;
  std::uint32_t total = 0;
  for (std::uint32_t part : parts) {
    total += part;
    result *= binomial(total, part);
  }
  return result;
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt pow10(int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= 10;
  return r;
}

// round(a / b) half away from zero, a, b > 0
BigInt round_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a % b;
  if (2 * r >= b) ++q;
  return q;
}

}  // namespace

std::string to_decimal(const Rational& value, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (value == 0) return "0";
  const bool negative = value < 0;
  const BigInt a = boost::multiprecision::abs(boost::multiprecision::numerator(value));
  const BigInt b = boost::multiprecision::denominator(value);

  // Find e with 10^e <= a/b < 10^(e+1).
  int e = 0;
  if (a >= b) {
    e = static_cast<int>(BigInt(a / b).str().size()) - 1;
  } else {
    e = -1;
    while (a * pow10(-e) < b) --e;
  }

  auto scaled_at = [&](int exponent) {
    const int k = significant_digits - 1 - exponent;
    return k >= 0 ? round_div(a * pow10(k), b) : round_div(a, b * pow10(-k));
  };
  BigInt scaled = scaled_at(e);
  if (scaled >= pow10(significant_digits)) {
    ++e;
    scaled = scaled_at(e);
  }

  std::string digits = scaled.str();
  std::string out;
  const int n = static_cast<int>(digits.size());
  if (e >= n - 1) {
    out = digits + std::string(static_cast<std::size_t>(e - (n - 1)), '0');
  } else {
    std::string frac;
    if (e >= 0) {
      out = digits.substr(0, static_cast<std::size_t>(e + 1));
      frac = digits.substr(static_cast<std::size_t>(e + 1));
    } else {
      out = "0";
      frac = std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  }
  return negative ? "-" + out : out;
}

}  // namespace cnum
