#include "bfree/sieve.hpp"

#include <algorithm>
#include <string>

#include "bfree/error.hpp"

namespace bfree {

namespace {

BinaryWord allocate(std::int64_t lo, std::int64_t hi, const SieveOptions& options) {
    if (lo >= hi) fail("BadWindow", "window requires lo < hi");
    const auto len = static_cast<std::uint64_t>(hi - lo);
    if (len > options.max_bits) {
        fail("WindowTooLarge", "window of " + std::to_string(len) + " bits exceeds budget of " +
                                   std::to_string(options.max_bits));
    }
    return BinaryWord(lo, static_cast<std::size_t>(len), true);
}

// Clears every n in the window with n = residue mod modulus.
void strike(BinaryWord& w, std::uint64_t residue, std::uint64_t modulus) {
    const std::uint64_t first = mod_floor(static_cast<std::int64_t>(residue) - w.offset(), modulus);
    for (std::uint64_t i = first; i < w.size(); i += modulus) w.reset(static_cast<std::size_t>(i));
}

}  // namespace

std::vector<std::size_t> SAProfile::s() const {
    std::vector<std::size_t> out;
    out.reserve(anchors_.size());
    for (const auto& a : anchors_) out.push_back(a.size());
    return out;
}

Rational SAProfile::density() const {
    Rational d = 1;
    for (std::size_t k = 0; k < anchors_.size(); ++k) {
        const auto b = bset_[k];
        d *= Rational(b - anchors_[k].size(), b);
    }
    return d;
}

std::uint64_t minimal_translation_period(const std::vector<std::uint64_t>& sorted_set,
                                         std::uint64_t modulus) {
    for (std::uint64_t j = 1; j <= modulus; ++j) {
        if (modulus % j != 0) continue;
        std::vector<std::uint64_t> moved;
        moved.reserve(sorted_set.size());
        for (auto r : sorted_set) moved.push_back((r + modulus - j % modulus) % modulus);
        std::sort(moved.begin(), moved.end());
        if (moved == sorted_set) return j;
    }
    return modulus;
}

SAProfile make_sa_profile(const BSet& bset, std::vector<std::vector<std::int64_t>> anchors) {
    if (anchors.size() != bset.size()) fail("LengthMismatch", "one anchor set per modulus required");
    SAProfile p;
    p.bset_ = bset;
    for (std::size_t k = 0; k < anchors.size(); ++k) {
        const auto b = bset[k];
        std::vector<std::uint64_t> set;
        for (auto a : anchors[k]) set.push_back(mod_floor(a, b));
        std::sort(set.begin(), set.end());
        if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
            fail("BadProfile", "anchors for modulus " + std::to_string(b) + " are not distinct");
        }
        if (set.empty() || set.size() > b - 1) {
            fail("BadProfile", "need 1 <= s_k <= b_k - 1 for modulus " + std::to_string(b));
        }
        p.reduced_.push_back(minimal_translation_period(set, b));
        p.anchors_.push_back(std::move(set));
    }
    return p;
}

SAProfile trivial_profile(const BSet& bset) {
    return make_sa_profile(bset, std::vector<std::vector<std::int64_t>>(bset.size(), {0}));
}

BinaryWord eta_window(const BSet& bset, std::int64_t lo, std::int64_t hi, const SieveOptions& options) {
    BinaryWord w = allocate(lo, hi, options);
    for (auto b : bset.moduli()) strike(w, 0, b);
    return w;
}

BinaryWord phi_window(const OdometerPoint& omega, std::int64_t lo, std::int64_t hi,
                      const SieveOptions& options) {
    BinaryWord w = allocate(lo, hi, options);
    for (std::size_t k = 0; k < omega.size(); ++k) {
        const auto b = omega.moduli()[k];
        strike(w, (b - omega[k]) % b, b);
    }
    return w;
}

BinaryWord phi_sa_window(const SAProfile& profile, const OdometerPoint& omega, std::int64_t lo,
                         std::int64_t hi, const SieveOptions& options) {
    if (omega.size() != profile.anchors().size()) {
        fail("LengthMismatch", "odometer point does not match profile");
    }
    BinaryWord w = allocate(lo, hi, options);
    for (std::size_t k = 0; k < omega.size(); ++k) {
        const auto b = profile.bset()[k];
        const auto reduced = profile.reduced_moduli()[k];
        const auto m = omega.moduli()[k];
        if (m != b && m != reduced) {
            fail("LengthMismatch", "odometer modulus " + std::to_string(m) +
                                       " is neither b_k nor b'_k for b_k = " + std::to_string(b));
        }
        const auto r = omega[k] % reduced;
        for (auto a : profile.anchors()[k]) strike(w, (a + b - r) % b, b);
    }
    return w;
}

Rational one_density(const BinaryWord& word) {
    if (word.empty()) fail("EmptyWord", "density of the empty word is undefined");
    return Rational(word.count_ones(), word.size());
}

}  // namespace bfree
