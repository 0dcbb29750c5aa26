#include "qlines/bigmath.hpp"

#include <cmath>

#include "qlines/errors.hpp"

namespace qlines {

namespace mp = boost::multiprecision;

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("binomial: negative upper index " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  // acc = C(n - k + i, i) after step i, so every division is exact.
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

BigInt power(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

double log10_of(const BigInt& v) {
  if (v <= 0) throw DomainError("log10 of a non-positive value");
  const std::size_t bits = mp::msb(v) + 1;
  if (bits <= 64) return std::log10(static_cast<double>(static_cast<std::uint64_t>(v)));
  const std::size_t shift = bits - 64;
  const auto top = static_cast<std::uint64_t>(v >> shift);
  return std::log10(static_cast<double>(top)) + static_cast<double>(shift) * std::log10(2.0);
}

double log10_of(const BigRational& v) {
  return log10_of(mp::numerator(v)) - log10_of(mp::denominator(v));
}

std::size_t decimal_digits(const BigInt& v) {
  const BigInt a = mp::abs(v);
  if (a == 0) return 1;
  return a.str().size();
}

std::string to_decimal_string(const BigRational& v) {
  if (mp::denominator(v) == 1) return mp::numerator(v).str();
  return mp::numerator(v).str() + "/" + mp::denominator(v).str();
}

}  // namespace qlines
