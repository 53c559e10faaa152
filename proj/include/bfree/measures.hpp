#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bfree/binary_word.hpp"
#include "bfree/bset.hpp"
#include "bfree/numeric.hpp"
#include "bfree/sieve.hpp"

namespace bfree {

/// nu_B * Bernoulli(p): draw a Mirsky point, keep each one with probability p.
/// p == 1 is the Mirsky measure itself, p == 1/2 the measure of maximal entropy.
struct ProductMeasureSpec {
    BSet bset;
    double p = 1.0;
};

struct SampleBatch {
    std::vector<BinaryWord> words;
    /// Unmasked phi(omega) windows underlying each word (equal to words when p == 1).
    std::vector<BinaryWord> bases;
    std::uint64_t seed = 0;
    std::string descriptor;
    std::string generator;
};

/// Exact prod_k (1 - |A mod b_k| / b_k).
Rational mirsky_cylinder(const BSet& bset, const std::vector<std::int64_t>& ones);

/// Mirsky probability of an arbitrary cylinder by inclusion-exclusion over
/// its zero positions. Throws TooManyZeros beyond 24 zeros.
Rational mixed_cylinder(const BSet& bset, const CylinderSpec& spec);

/// Receives (sample index, masked word, underlying phi window).
using SampleSink = std::function<void(std::size_t, const BinaryWord&, const BinaryWord&)>;

/// Streaming form of the samplers below; nothing is retained.
void stream_generalized(const SAProfile& profile, double p, std::int64_t lo, std::int64_t hi,
                        std::size_t count, std::uint64_t seed, const SampleSink& sink,
                        const SieveOptions& options = {});

SampleBatch sample_mirsky(const BSet& bset, std::int64_t lo, std::int64_t hi, std::size_t count,
                          std::uint64_t seed, const SieveOptions& options = {});
SampleBatch sample_product(const ProductMeasureSpec& spec, std::int64_t lo, std::int64_t hi,
                           std::size_t count, std::uint64_t seed, const SieveOptions& options = {});
SampleBatch sample_generalized(const SAProfile& profile, double p, std::int64_t lo, std::int64_t hi,
                               std::size_t count, std::uint64_t seed,
                               const SieveOptions& options = {});

/// Generator of mask words for nu_B * kappa with arbitrary kappa:
/// (rng seed, sample index, lo, hi) -> word over [lo, hi).
using MaskSource =
    std::function<BinaryWord(std::uint64_t, std::size_t, std::int64_t, std::int64_t)>;

/// Coordinatewise product of a Mirsky window and a caller-supplied mask.
SampleBatch sample_masked(const BSet& bset, const MaskSource& kappa, std::int64_t lo,
                          std::int64_t hi, std::size_t count, std::uint64_t seed,
                          const SieveOptions& options = {});

/// The odometer point drawn for sample `index`: residue k uniform mod moduli[k].
OdometerPoint draw_odometer(const std::vector<std::uint64_t>& moduli, std::uint64_t seed,
                            std::size_t index);

/// Reads x at the positions of supp(z), in order. Index 0 of the result is
/// the first support position >= 0; earlier support positions get negative
/// indices. Throws EmptySupport, LengthMismatch.
BinaryWord squeeze(const BinaryWord& x, const BinaryWord& z);

/// Inverse of squeeze: places u along supp(z), zeros elsewhere, offset of z.
BinaryWord embed(const BinaryWord& u, const BinaryWord& z);

/// Frequencies of all n-subwords over every word and position of a batch.
std::map<std::string, double> empirical_block_distribution(const SampleBatch& batch, std::size_t n);

}  // namespace bfree
