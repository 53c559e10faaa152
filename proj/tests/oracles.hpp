#pragma once

// Brute-force reference computations used only by tests. Each one follows
// the defining formula directly and shares no code path with the library
// routine it checks.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    const auto r = a % m;
    return r < 0 ? r + m : r;
}

inline std::string eta(const std::vector<std::int64_t>& moduli, std::int64_t lo, std::int64_t hi) {
    std::string s;
    for (auto n = lo; n < hi; ++n) {
        bool free = true;
        for (auto b : moduli) free = free && mod(n, b) != 0;
        s += free ? '1' : '0';
    }
    return s;
}

inline std::string phi(const std::vector<std::int64_t>& moduli, const std::vector<std::int64_t>& omega,
                       std::int64_t lo, std::int64_t hi) {
    std::string s;
    for (auto n = lo; n < hi; ++n) {
        bool one = true;
        for (std::size_t k = 0; k < moduli.size(); ++k) one = one && mod(omega[k] + n, moduli[k]) != 0;
        s += one ? '1' : '0';
    }
    return s;
}

inline bool admissible(const std::set<std::int64_t>& support, const std::vector<std::int64_t>& moduli) {
    for (auto b : moduli) {
        std::set<std::int64_t> r;
        for (auto n : support) r.insert(mod(n, b));
        if (static_cast<std::int64_t>(r.size()) >= b) return false;
    }
    return true;
}

inline std::set<std::int64_t> support_of(std::uint64_t mask, std::size_t n) {
    std::set<std::int64_t> s;
    for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1u) s.insert(static_cast<std::int64_t>(i));
    }
    return s;
}

/// Counts admissible words of length n by trying all 2^n of them.
inline std::uint64_t complexity(const std::vector<std::int64_t>& moduli, std::size_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) count += admissible(support_of(m, n), moduli);
    return count;
}

inline void odometer_points(const std::vector<std::int64_t>& moduli, std::size_t k,
                            std::vector<std::int64_t>& cur, std::vector<std::vector<std::int64_t>>& out) {
    if (k == moduli.size()) {
        out.push_back(cur);
        return;
    }
    for (std::int64_t r = 0; r < moduli[k]; ++r) {
        cur.push_back(r);
        odometer_points(moduli, k + 1, cur, out);
        cur.pop_back();
    }
}

/// Haar-uniform odometer enumeration: fraction of omega whose coding
/// matches every prescribed bit.
inline Rational mirsky(const std::vector<std::int64_t>& moduli, const std::map<std::int64_t, bool>& spec) {
    std::vector<std::vector<std::int64_t>> points;
    std::vector<std::int64_t> cur;
    odometer_points(moduli, 0, cur, points);
    std::int64_t hits = 0;
    for (const auto& omega : points) {
        bool ok = true;
        for (const auto& [n, bit] : spec) {
            bool one = true;
            for (std::size_t k = 0; k < moduli.size(); ++k) one = one && mod(omega[k] + n, moduli[k]) != 0;
            ok = ok && one == bit;
        }
        hits += ok;
    }
    return Rational(hits, static_cast<std::int64_t>(points.size()));
}

/// Translation period of a residue set by scanning every j in 1..modulus.
inline std::int64_t period_scan(const std::set<std::int64_t>& set, std::int64_t modulus) {
    for (std::int64_t j = 1; j <= modulus; ++j) {
        std::set<std::int64_t> moved;
        for (auto r : set) moved.insert(mod(r - j, modulus));
        if (moved == set) return j;
    }
    return modulus;
}

}  // namespace oracle
