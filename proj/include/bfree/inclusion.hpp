#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bfree/binary_word.hpp"
#include "bfree/bset.hpp"
#include "bfree/numeric.hpp"

namespace bfree {

/// X_A is contained in X_B iff every modulus of B has a divisor in A.
bool includes(const BSet& a, const BSet& b);

/// X_A == X_B iff the moduli sets coincide.
bool equality(const BSet& a, const BSet& b);

/// {i + e_i * b_prime : i = 1..b_prime}, e_i the product of the small moduli
/// not dividing i (1 when all do). The set misses residue 0 modulo every
/// small modulus and hits every residue modulo b_prime.
/// Throws DivisiblePrecondition, NotCoprime, Overflow.
std::vector<std::int64_t> construct_admissible(const std::vector<std::uint64_t>& small_moduli,
                                               std::uint64_t b_prime);

struct WitnessOptions {
    /// Largest window the confirmation search may scan.
    std::uint64_t max_scan = 100'000'000;
};

/// A word admissible for A but not for B, or nullopt when none exists.
/// When includes(a, b) holds, a bounded search over maximal A-admissible
/// windows confirms that no witness exists. Throws SearchBudgetExceeded.
std::optional<BinaryWord> inclusion_witness(const BSet& a, const BSet& b,
                                            const WitnessOptions& options = {});

/// Exact fraction of s in [1, horizon] with s*c + r free of every modulus.
/// Throws NotCoprimeToC, BadArgument (horizon below the CRT period).
Rational density_estimate(const BSet& bset, std::int64_t c, std::int64_t r, std::uint64_t horizon);

}  // namespace bfree
