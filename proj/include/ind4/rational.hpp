#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ind4 {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

/// Parses "p/q" or "p" (optionally signed). Throws on malformed input or q = 0.
Rat parse_rat(std::string_view s);

/// Formats as "p/q", or just "p" when the denominator is 1.
std::string format_rat(const Rat& r);

/// Best rational approximation of x with denominator <= max_den
/// (continued-fraction convergents/semiconvergents).
Rat rat_from_double(double x, std::int64_t max_den);

inline BigInt binom(std::uint64_t n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= BigInt(n - i);
    r /= (i + 1);
  }
  return r;
}

inline std::uint64_t binom_u64(std::uint64_t n, unsigned k) {
  return binom(n, k).convert_to<std::uint64_t>();
}

}  // namespace ind4
