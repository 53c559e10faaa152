#include "bfree/inclusion.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "bfree/admissibility.hpp"
#include "bfree/error.hpp"

namespace bfree {

bool includes(const BSet& a, const BSet& b) {
    for (auto bp : b.moduli()) {
        bool divided = false;
        for (auto m : a.moduli()) {
            if (bp % m == 0) {
                divided = true;
                break;
            }
        }
        if (!divided) return false;
    }
    return true;
}

bool equality(const BSet& a, const BSet& b) { return a.moduli() == b.moduli(); }

std::vector<std::int64_t> construct_admissible(const std::vector<std::uint64_t>& small_moduli,
                                               std::uint64_t b_prime) {
    for (std::size_t i = 0; i < small_moduli.size(); ++i) {
        if (small_moduli[i] < 2) fail("ModulusTooSmall", "small moduli must be >= 2");
        if (b_prime % small_moduli[i] == 0) {
            fail("DivisiblePrecondition", std::to_string(small_moduli[i]) + " divides " +
                                              std::to_string(b_prime));
        }
        for (std::size_t j = i + 1; j < small_moduli.size(); ++j) {
            if (std::gcd(small_moduli[i], small_moduli[j]) != 1) {
                fail("NotCoprime", "small moduli must be pairwise coprime");
            }
        }
    }
    if (b_prime < 2) fail("ModulusTooSmall", "b' must be >= 2");
    std::vector<std::int64_t> out;
    out.reserve(b_prime);
    for (std::uint64_t i = 1; i <= b_prime; ++i) {
        BigInt e = 1;
        for (auto m : small_moduli) {
            if (i % m != 0) e *= m;
        }
        const BigInt value = BigInt(i) + e * b_prime;
        if (value > std::numeric_limits<std::int64_t>::max()) {
            fail("Overflow", "constructed element exceeds 64-bit range");
        }
        out.push_back(value.convert_to<std::int64_t>());
    }
    return out;
}

namespace {

BinaryWord word_from_set(const std::vector<std::int64_t>& set) {
    const auto [lo, hi] = std::minmax_element(set.begin(), set.end());
    BinaryWord w(*lo, static_cast<std::size_t>(*hi - *lo + 1));
    for (auto n : set) w.set(static_cast<std::size_t>(n - *lo));
    return w;
}

// Every A-admissible word is dominated by a translate of eta_A, and being
// inadmissible for a modulus is preserved upward, so scanning eta_A over one
// period of the joint residue pattern decides whether any witness exists.
std::optional<BinaryWord> search_eta_windows(const BSet& a, std::uint64_t b_prime,
                                             std::uint64_t bound, const WitnessOptions& options) {
    BigInt joint = b_prime;
    for (auto m : a.moduli()) joint = boost::multiprecision::lcm(joint, BigInt(m));
    const BigInt length = joint < BigInt(bound) ? joint : BigInt(bound);
    if (length > options.max_scan) {
        fail("SearchBudgetExceeded", "witness search window " + length.str() + " exceeds budget");
    }
    const auto n_max = length.convert_to<std::uint64_t>();
    std::vector<bool> hit(b_prime, false);
    std::uint64_t covered = 0;
    for (std::uint64_t n = 0; n < n_max; ++n) {
        bool free = true;
        for (auto m : a.moduli()) {
            if (n % m == 0) {
                free = false;
                break;
            }
        }
        if (!free || hit[n % b_prime]) continue;
        hit[n % b_prime] = true;
        if (++covered == b_prime) {
            BinaryWord w(0, static_cast<std::size_t>(n + 1));
            for (std::uint64_t j = 0; j <= n; ++j) {
                bool f = true;
                for (auto m : a.moduli()) f = f && (j % m != 0);
                if (f) w.set(static_cast<std::size_t>(j));
            }
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<BinaryWord> inclusion_witness(const BSet& a, const BSet& b,
                                            const WitnessOptions& options) {
    BigInt product = 1;
    for (auto m : a.moduli()) product *= m;
    for (auto m : b.moduli()) product *= m;
    const BigInt bound_big = 4 * product;
    const std::uint64_t bound = bound_big > options.max_scan
                                    ? options.max_scan + 1
                                    : bound_big.convert_to<std::uint64_t>();

    if (!includes(a, b)) {
        for (auto bp : b.moduli()) {
            bool divided = false;
            for (auto m : a.moduli()) divided = divided || bp % m == 0;
            if (divided) continue;
            auto w = word_from_set(construct_admissible(a.moduli(), bp));
            if (is_admissible(w, a) && !is_admissible(w, b)) return w;
            if (auto found = search_eta_windows(a, bp, bound, options)) return found;
            fail("SearchBudgetExceeded", "no witness found within the search bound");
        }
    }
    for (auto bp : b.moduli()) {
        if (auto found = search_eta_windows(a, bp, bound, options)) return found;
    }
    return std::nullopt;
}

Rational density_estimate(const BSet& bset, std::int64_t c, std::int64_t r, std::uint64_t horizon) {
    for (auto b : bset.moduli()) {
        if (std::gcd(mod_floor(c, b), b) != 1) {
            fail("NotCoprimeToC", "c shares a factor with modulus " + std::to_string(b));
        }
    }
    if (BigInt(horizon) < bset.period()) fail("BadArgument", "horizon must cover one CRT period");
    std::uint64_t hits = 0;
    for (std::uint64_t s = 1; s <= horizon; ++s) {
        bool free = true;
        for (auto b : bset.moduli()) {
            // (s*c + r) mod b without overflow.
            const auto v = (static_cast<unsigned __int128>(s % b) * mod_floor(c, b) + mod_floor(r, b)) % b;
            if (v == 0) {
                free = false;
                break;
            }
        }
        if (free) ++hits;
    }
    return Rational(hits, horizon);
}

}  // namespace bfree
