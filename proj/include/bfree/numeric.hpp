#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bfree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Always "p/q", including "n/1" for integers.
std::string rational_to_string(const Rational& r);
/// Accepts "p/q", integers, and exact decimals such as "0.25". Throws BadRational.
Rational parse_rational(std::string_view text);
double to_double(const Rational& r);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Floor modulus: result in [0, m).
inline std::uint64_t mod_floor(std::int64_t value, std::uint64_t m) {
    const auto sm = static_cast<std::int64_t>(m);
    std::int64_t r = value % sm;
    if (r < 0) r += sm;
    return static_cast<std::uint64_t>(r);
}

}  // namespace bfree
