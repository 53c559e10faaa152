#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bfree/numeric.hpp"

namespace bfree {

/// A finite, validated truncation of the moduli set: strictly increasing,
/// every modulus >= 2, pairwise coprime. tail_bound is the declared upper
/// bound on the omitted sum of 1/b over the moduli left out (0 for a set
/// that is meant to be finite).
class BSet {
public:
    BSet() = default;

    const std::vector<std::uint64_t>& moduli() const noexcept { return moduli_; }
    const Rational& tail_bound() const noexcept { return tail_bound_; }
    std::size_t size() const noexcept { return moduli_.size(); }
    bool empty() const noexcept { return moduli_.empty(); }
    std::uint64_t operator[](std::size_t k) const noexcept { return moduli_[k]; }

    /// Product of the moduli (the full CRT period).
    BigInt period() const;
    /// Product of (1 - 1/b_k), exact.
    Rational free_density() const;

    friend bool operator==(const BSet&, const BSet&) = default;

private:
    friend BSet validate_bset(std::span<const std::uint64_t>, const Rational&);

    std::vector<std::uint64_t> moduli_;
    Rational tail_bound_{0};
};

/// Throws Error with kind NotCoprime, ModulusTooSmall, NotSorted or
/// NegativeTailBound. Callers holding unsorted input sort it first.
BSet validate_bset(std::span<const std::uint64_t> moduli, const Rational& tail_bound = 0);

/// Convenience: sorts, then validates.
BSet make_bset(std::vector<std::uint64_t> moduli, const Rational& tail_bound = 0);

/// The first `count` prime squares. tail_bound = 1/p_count, which dominates
/// the sum of 1/m^2 over m > p_count.
BSet squarefree_family(std::size_t count);

/// Number of residues in [0, prod b_k) divisible by no modulus, by formula.
BigInt crt_free_count(const BSet& bset);
/// Same count by direct sieve over one period; nullopt when the period
/// exceeds `limit`.
std::optional<BigInt> crt_free_count_sieve(const BSet& bset, std::uint64_t limit = 10'000'000);

/// A residue vector over an arbitrary list of moduli (either a BSet's
/// moduli or the reduced b'_k of a generalized profile).
class OdometerPoint {
public:
    OdometerPoint() = default;
    /// Residues are reduced into range; throws LengthMismatch on size mismatch.
    OdometerPoint(std::vector<std::uint64_t> moduli, std::vector<std::int64_t> residues);

    static OdometerPoint zero(const BSet& bset);
    static OdometerPoint over(const BSet& bset, std::vector<std::int64_t> residues);

    const std::vector<std::uint64_t>& moduli() const noexcept { return moduli_; }
    const std::vector<std::uint64_t>& residues() const noexcept { return residues_; }
    std::size_t size() const noexcept { return residues_.size(); }
    std::uint64_t operator[](std::size_t k) const noexcept { return residues_[k]; }

    /// The odometer map: every residue advanced by t.
    OdometerPoint translated(std::int64_t t) const;

    friend bool operator==(const OdometerPoint&, const OdometerPoint&) = default;

private:
    std::vector<std::uint64_t> moduli_;
    std::vector<std::uint64_t> residues_;
};

/// A cylinder: finitely many coordinates with prescribed bits.
struct CylinderSpec {
    std::map<std::int64_t, bool> entries;

    std::vector<std::int64_t> ones() const;
    std::vector<std::int64_t> zeros() const;
};

}  // namespace bfree
