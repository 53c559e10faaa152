#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bfree/binary_word.hpp"
#include "bfree/bset.hpp"
#include "bfree/numeric.hpp"

namespace bfree {

/// Per-modulus sets of residues hit by a word's support.
class ResidueHitState {
public:
    static ResidueHitState of(const BinaryWord& word, const BSet& bset);

    std::size_t size() const noexcept { return hit_.size(); }
    std::uint64_t modulus(std::size_t k) const noexcept { return moduli_[k]; }
    /// Residues r mod b_k with no support element congruent to r, ascending.
    std::vector<std::uint64_t> missing(std::size_t k) const;
    std::size_t hit_count(std::size_t k) const noexcept { return counts_[k]; }
    bool proper(std::size_t k) const noexcept { return counts_[k] < moduli_[k]; }
    bool admissible() const noexcept;

private:
    std::vector<std::uint64_t> moduli_;
    std::vector<std::vector<std::uint64_t>> hit_;  // sorted, distinct
    std::vector<std::size_t> counts_;
};

/// True iff the support misses at least one residue class mod every b_k.
bool is_admissible(const BinaryWord& word, const BSet& bset);

struct ComplexityOptions {
    /// Upper bound on the number of reachable transfer states.
    std::size_t max_states = std::size_t{1} << 22;
};

/// p_1..p_{n_max}: exact counts of admissible words of each length, by a
/// transfer recursion over hit-residue states. Throws StateSpaceTooLarge.
std::vector<BigInt> block_complexity(const BSet& bset, std::size_t n_max,
                                     const ComplexityOptions& options = {});

/// log2 of a positive big integer, accurate to double precision.
double big_log2(const BigInt& value);

/// h_n = log2(p_n) / n, bits per symbol.
std::vector<double> entropy_from_complexity(const std::vector<BigInt>& counts);

/// Odometer coordinate candidates recovered from a window, one per modulus.
struct ThetaResult {
    enum class Kind { Unique, Ambiguous, None };
    Kind kind = Kind::None;
    /// Candidate omega(k) values: negatives of the missing residues, ascending.
    std::vector<std::uint64_t> residues;
};

std::vector<ThetaResult> theta_window(const BinaryWord& word, const BSet& bset);

struct SpectrumRecord {
    std::uint64_t modulus = 0;
    std::size_t s = 0;
    std::vector<std::uint64_t> missing;
    std::uint64_t b_prime = 0;

    friend bool operator==(const SpectrumRecord&, const SpectrumRecord&) = default;
};

using SpectrumProfile = std::vector<SpectrumRecord>;

/// Throws Error("Inadmissible") naming the first fully covered modulus.
SpectrumProfile spectrum_profile(const BinaryWord& word, const BSet& bset);

/// All admissible words of length n in lexicographic order ('0' < '1'),
/// each at offset 0. Throws BudgetExceeded past max_words.
std::vector<BinaryWord> admissible_blocks(const BSet& bset, std::size_t n,
                                          std::size_t max_words = 1'000'000);

}  // namespace bfree
