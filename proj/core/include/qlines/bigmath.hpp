#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qlines {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient C(n, k); 0 when k < 0 or k > n. Throws
/// DomainError for n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// base^exponent by repeated squaring; exponent >= 0.
BigInt power(const BigInt& base, std::uint64_t exponent);

/// log10 of a positive integer, accurate to ~1e-12 relative even for values
/// with hundreds of thousands of digits.
double log10_of(const BigInt& v);
double log10_of(const BigRational& v);

/// Number of decimal digits of |v| (1 for zero).
std::size_t decimal_digits(const BigInt& v);

/// "123" for integers, "7/2" otherwise.
std::string to_decimal_string(const BigRational& v);

}  // namespace qlines
