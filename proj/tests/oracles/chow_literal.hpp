#pragma once

// The Chow-component bound written out literally,
//   binom((d+1)(d+2)/2 * max(d, H^2), d(d+3)/2) ^ (d^2 (d+1)(d+2)/2),
// with the binomial taken from Pascal's triangle rather than the library's
// multiplicative formula.

#include <algorithm>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qlines::oracle {

using boost::multiprecision::cpp_int;

inline cpp_int pascal_binomial(std::int64_t n, std::int64_t k) {
  std::vector<cpp_int> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = std::min(i, k); j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  }
  return row[static_cast<std::size_t>(k)];
}

inline cpp_int literal_chow_bound(std::int64_t d, std::int64_t h2) {
  const std::int64_t top = (d + 1) * (d + 2) / 2 * std::max(d, h2);
  const std::int64_t bottom = d * (d + 3) / 2;
  const auto exponent = static_cast<unsigned>(d * d * (d + 1) * (d + 2) / 2);
  return boost::multiprecision::pow(pascal_binomial(top, bottom), exponent);
}

}  // namespace qlines::oracle
