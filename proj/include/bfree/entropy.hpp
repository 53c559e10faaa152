#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bfree/binary_word.hpp"
#include "bfree/bset.hpp"
#include "bfree/numeric.hpp"
#include "bfree/sieve.hpp"

namespace bfree {

/// A closed-form entropy value. Unit is always bits (entropy / log 2).
struct EntropyReport {
    double bits = 0.0;
    /// Present when the value is a finite rational product.
    std::optional<Rational> exact;
    std::string formula;
    std::vector<std::pair<std::string, std::string>> inputs;
    /// Empty for intentionally finite moduli sets.
    std::string truncation_note;
};

/// prod_k (1 - 1/b_k).
EntropyReport htop_bfree(const BSet& bset);

/// H2(p) * prod_k (1 - 1/b_k); requires 0 < p < 1.
EntropyReport h_product_type(const BSet& bset, const Rational& p);

/// prod_k (1 - s_k / b_k).
EntropyReport htop_generalized(const SAProfile& profile);

/// |supp C| / |C| for the hereditary closure of the periodic point C^infinity.
/// Throws NotMinimalPeriod when C is a power of a shorter block.
EntropyReport htop_periodic_hereditary(const BinaryWord& block);

/// Smallest p >= 1 with C[i] == C[(i + p) mod |C|] for all i.
std::size_t minimal_cyclic_period(const BinaryWord& block);

/// Binary entropy in bits.
double binary_entropy_bits(double p);

struct EntropyBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Sandwich for the hereditary closure of X: [d, h(X) + d'] in bits.
/// Throws BadDensityOrder unless 0 <= d <= d' <= 1 and h >= 0.
EntropyBounds lm7_bounds(double h_x_bits, double d, double d_prime);

struct CrtBoundReport {
    bool holds = false;
    Rational observed;
    Rational bound;
};

/// Over one full CRT period: ones/length <= prod (1 - s_k/b_k) whenever the
/// word misses at least s_k residues mod each b_k.
/// Throws WrongWindowLength, PreconditionUnmet.
CrtBoundReport crt_density_bound(const SAProfile& profile, const BinaryWord& word);

}  // namespace bfree
