#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bfree/binary_word.hpp"
#include "bfree/bset.hpp"
#include "bfree/numeric.hpp"

namespace bfree {

struct SieveOptions {
    /// Largest window, in bits, any generator will allocate.
    std::size_t max_bits = std::size_t{1} << 30;
};

/// Generalized base: for each modulus b_k, a set of s_k forbidden residue
/// "anchors" a^k. The associated odometer runs over b'_k, the minimal
/// translation period of a^k in Z/b_k.
class SAProfile {
public:
    const BSet& bset() const noexcept { return bset_; }
    /// Sorted, distinct, reduced residues per modulus.
    const std::vector<std::vector<std::uint64_t>>& anchors() const noexcept { return anchors_; }
    std::vector<std::size_t> s() const;
    const std::vector<std::uint64_t>& reduced_moduli() const noexcept { return reduced_; }

    /// Product of (1 - s_k / b_k).
    Rational density() const;

private:
    friend SAProfile make_sa_profile(const BSet&, std::vector<std::vector<std::int64_t>>);

    BSet bset_;
    std::vector<std::vector<std::uint64_t>> anchors_;
    std::vector<std::uint64_t> reduced_;
};

/// Throws LengthMismatch, BadProfile (empty, duplicate or full anchor set).
SAProfile make_sa_profile(const BSet& bset, std::vector<std::vector<std::int64_t>> anchors);

/// The profile with every a^k = {0}; its sequences coincide with phi.
SAProfile trivial_profile(const BSet& bset);

/// Minimal j >= 1 with set - j == set in Z/modulus. Only divisors of the
/// modulus are tried since the stabilizer of a set is a subgroup.
std::uint64_t minimal_translation_period(const std::vector<std::uint64_t>& sorted_set,
                                         std::uint64_t modulus);

/// Indicator of integers in [lo, hi) divisible by no modulus.
BinaryWord eta_window(const BSet& bset, std::int64_t lo, std::int64_t hi,
                      const SieveOptions& options = {});

/// Bit n is 1 iff omega(k) + n != 0 mod b_k for every k.
BinaryWord phi_window(const OdometerPoint& omega, std::int64_t lo, std::int64_t hi,
                      const SieveOptions& options = {});

/// Bit n is 1 iff omega(k) - a + n != 0 mod b_k for every k and every anchor a
/// of a^k. omega may be given mod b'_k or mod b_k; it is reduced mod b'_k.
BinaryWord phi_sa_window(const SAProfile& profile, const OdometerPoint& omega, std::int64_t lo,
                         std::int64_t hi, const SieveOptions& options = {});

/// Exact fraction of ones; throws EmptyWord.
Rational one_density(const BinaryWord& word);

}  // namespace bfree
