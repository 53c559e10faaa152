#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "bfree/binary_word.hpp"
#include "bfree/measures.hpp"
#include "bfree/numeric.hpp"

namespace bfree {

/// Unsigned 128-bit fixed point: value v represents v / 2^128 in [0, 1).
using Fixed128 = unsigned __int128;

Fixed128 fixed_from_double(double x);
double fixed_to_double(Fixed128 x);

/// Half-open arc [start, start + length) of the circle R/Z. `full` marks [0, 1).
struct Arc {
    Fixed128 start = 0;
    Fixed128 length = 0;
    bool full = false;

    static Arc from_endpoints(double a, double b);
    static Arc half() { return from_endpoints(0.0, 0.5); }
    double lower() const { return fixed_to_double(start); }
    double upper() const { return full ? 1.0 : fixed_to_double(start) + fixed_to_double(length); }
};

/// Coding of the rotation n -> y + n*alpha by an arc: bit n is 1 iff
/// {y + n*alpha} lies in the arc. Phases are computed exactly in 128-bit
/// fixed point. y and the arc are taken as exact; alpha may be off by one
/// ulp of 2^-128, so the phase at index n is within |n| ulps of the truth.
class RotationCoding {
public:
    static RotationCoding golden_mean(Arc arc = Arc::half());
    static RotationCoding from_fixed(Fixed128 alpha, Fixed128 y, Arc arc);
    static RotationCoding from_double(double alpha, double y = 0.0, Arc arc = Arc::half());

    /// Same coding with alpha moved by delta (computed in fixed point).
    RotationCoding with_alpha_offset(double delta) const;

    Fixed128 alpha_fixed() const noexcept { return alpha_; }
    Fixed128 y_fixed() const noexcept { return y_; }
    const Arc& arc() const noexcept { return arc_; }
    double alpha() const { return fixed_to_double(alpha_); }

    /// Partial quotients [a1, a2, ...] of alpha = [0; a1, a2, ...], listed
    /// while the convergent denominators stay below 2^60.
    std::vector<std::uint64_t> continued_fraction(std::size_t max_terms = 40) const;

    /// Throws PrecisionExhausted when the phase is within its error bound of
    /// an arc endpoint, or when |n| leaves the guaranteed range.
    bool bit(std::int64_t n) const;

private:
    Fixed128 alpha_ = 0;
    Fixed128 y_ = 0;
    Arc arc_;
};

BinaryWord sturmian_window(const RotationCoding& coding, std::int64_t lo, std::int64_t hi);

struct SaturationOptions {
    std::size_t initial_orbit = 1024;
    std::size_t max_orbit = std::size_t{1} << 24;
};

/// Distinct n-blocks (n <= 64) along orbit positions [0, orbit), each packed
/// first-bit-least-significant, sorted.
std::vector<std::uint64_t> orbit_blocks(const RotationCoding& coding, std::size_t n,
                                        std::size_t orbit);

/// n-blocks after the saturation protocol: the orbit doubles until the
/// count is unchanged across two consecutive doublings. Throws NotSaturated.
std::vector<std::uint64_t> saturated_blocks(const RotationCoding& coding, std::size_t n,
                                            const SaturationOptions& options = {});

/// p_1..p_{n_max} by the saturation protocol. n_max <= 64.
std::vector<std::uint64_t> rotation_complexity(const RotationCoding& coding, std::size_t n_max,
                                               const SaturationOptions& options = {});

/// Number of w in {0,1}^n dominated by at least one of the given blocks.
BigInt hereditary_block_count(const std::vector<std::uint64_t>& blocks, std::size_t n);

/// log2(hereditary_block_count) / n over the saturated n-blocks of a coding.
double hereditary_entropy_estimate(const RotationCoding& coding, std::size_t n,
                                   const SaturationOptions& options = {});

/// blocks_n(beta) contained in blocks_n(alpha), both saturated. Throws
/// PreconditionUnmet unless alpha's partial quotients are <= 2 and
/// |alpha - beta| < 1/(48 n^2).
bool close_alpha_block_containment(const RotationCoding& alpha, const RotationCoding& beta,
                                   std::size_t n, const SaturationOptions& options = {});

/// Hereditary closure of the orbit of the periodic point C^infinity.
class PeriodicHereditarySystem {
public:
    /// Throws NotMinimalPeriod, EmptyWord.
    explicit PeriodicHereditarySystem(BinaryWord block);

    const BinaryWord& block() const noexcept { return block_; }
    std::size_t period() const noexcept { return block_.size(); }
    bool symbol(std::int64_t m) const noexcept {
        return block_[static_cast<std::size_t>(mod_floor(m, block_.size()))];
    }

private:
    BinaryWord block_;
};

/// The pair A = 101001000, B = 101000100.
std::pair<PeriodicHereditarySystem, PeriodicHereditarySystem> two_mme_system();

/// Probability that [0, |target|) reads `target` under uniform phase times
/// Bernoulli(p) masking of x_C. Throws TargetTooLong beyond 2|C|.
Rational mme_block_frequency(const PeriodicHereditarySystem& system, const BinaryWord& target,
                             const Rational& p);

/// Samples of the masked periodic measure: uniform phase, keep each one w.p. p.
SampleBatch sample_periodic(const PeriodicHereditarySystem& system, double p, std::int64_t lo,
                            std::int64_t hi, std::size_t count, std::uint64_t seed);

/// Window of x_C with whole C-blocks erased at block indices n where
/// n = k-1 mod p_1...p_k for some k and n != k-1. Throws WindowTooLarge, BadArgument.
BinaryWord minimal_subset_variant(const PeriodicHereditarySystem& system,
                                  const std::vector<std::uint64_t>& primes, std::int64_t lo,
                                  std::int64_t hi, const SieveOptions& options = {});

/// n -> all n-blocks of the hereditary subshift, in lexicographic order.
using BlockCatalogue = std::function<std::vector<BinaryWord>(std::size_t)>;

struct TransitiveOptions {
    /// Largest number of catalogue or dominated blocks a stage may enumerate.
    std::size_t max_stage_blocks = std::size_t{1} << 20;
};

/// Prefix of the transitive point built by alternating catalogue blocks with
/// zero runs of length L*n_k (L = ceil(1/h_bits)) and then all blocks
/// dominated by the prefix of length n_k, with n_k the length built so far.
/// Index 0 of the result is the first coordinate. Throws BudgetExceeded,
/// BadArgument.
BinaryWord transitive_closure_point(const BlockCatalogue& catalogue, double h_bits, std::size_t n1,
                                    std::size_t length, const TransitiveOptions& options = {});

}  // namespace bfree
