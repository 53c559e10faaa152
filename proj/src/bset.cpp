#include "bfree/bset.hpp"

#include <algorithm>
#include <string>

#include "bfree/error.hpp"

namespace bfree {

BigInt BSet::period() const {
    BigInt p = 1;
    for (auto b : moduli_) p *= b;
    return p;
}

Rational BSet::free_density() const {
    Rational d = 1;
    for (auto b : moduli_) d *= Rational(b - 1, b);
    return d;
}

BSet validate_bset(std::span<const std::uint64_t> moduli, const Rational& tail_bound) {
    for (auto b : moduli) {
        if (b < 2) fail("ModulusTooSmall", "modulus " + std::to_string(b) + " is below 2");
    }
    for (std::size_t i = 1; i < moduli.size(); ++i) {
        if (moduli[i] <= moduli[i - 1]) fail("NotSorted", "moduli must be strictly increasing");
    }
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        for (std::size_t j = i + 1; j < moduli.size(); ++j) {
            if (gcd_u64(moduli[i], moduli[j]) != 1) {
                fail("NotCoprime", "moduli at indices " + std::to_string(i) + " and " +
                                       std::to_string(j) + " share a factor");
            }
        }
    }
    if (tail_bound < 0) fail("NegativeTailBound", "tail_bound must be nonnegative");
    BSet out;
    out.moduli_.assign(moduli.begin(), moduli.end());
    out.tail_bound_ = tail_bound;
    return out;
}

BSet make_bset(std::vector<std::uint64_t> moduli, const Rational& tail_bound) {
    std::sort(moduli.begin(), moduli.end());
    return validate_bset(moduli, tail_bound);
}

BSet squarefree_family(std::size_t count) {
    if (count == 0) fail("BadArgument", "squarefree_family needs count >= 1");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t c = 2; primes.size() < count; ++c) {
        bool prime = true;
        for (auto p : primes) {
            if (p * p > c) break;
            if (c % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(c);
    }
    std::vector<std::uint64_t> squares;
    squares.reserve(count);
    for (auto p : primes) squares.push_back(p * p);
    return validate_bset(squares, Rational(1, primes.back()));
}

BigInt crt_free_count(const BSet& bset) {
    BigInt n = 1;
    for (auto b : bset.moduli()) n *= (b - 1);
    return n;
}

std::optional<BigInt> crt_free_count_sieve(const BSet& bset, std::uint64_t limit) {
    const BigInt period = bset.period();
    if (period > limit) return std::nullopt;
    const auto len = period.convert_to<std::uint64_t>();
    std::vector<bool> free(len, true);
    for (auto b : bset.moduli()) {
        for (std::uint64_t n = 0; n < len; n += b) free[n] = false;
    }
    return BigInt(std::count(free.begin(), free.end(), true));
}

OdometerPoint::OdometerPoint(std::vector<std::uint64_t> moduli, std::vector<std::int64_t> residues)
    : moduli_(std::move(moduli)) {
    if (residues.size() != moduli_.size()) {
        fail("LengthMismatch", "odometer point needs one residue per modulus");
    }
    residues_.reserve(residues.size());
    for (std::size_t k = 0; k < residues.size(); ++k) {
        if (moduli_[k] == 0) fail("ModulusTooSmall", "odometer modulus must be positive");
        residues_.push_back(mod_floor(residues[k], moduli_[k]));
    }
}

OdometerPoint OdometerPoint::zero(const BSet& bset) {
    return OdometerPoint(bset.moduli(), std::vector<std::int64_t>(bset.size(), 0));
}

OdometerPoint OdometerPoint::over(const BSet& bset, std::vector<std::int64_t> residues) {
    return OdometerPoint(bset.moduli(), std::move(residues));
}

OdometerPoint OdometerPoint::translated(std::int64_t t) const {
    std::vector<std::int64_t> r;
    r.reserve(residues_.size());
    for (std::size_t k = 0; k < residues_.size(); ++k) {
        r.push_back(static_cast<std::int64_t>((residues_[k] + mod_floor(t, moduli_[k])) % moduli_[k]));
    }
    return OdometerPoint(moduli_, std::move(r));
}

std::vector<std::int64_t> CylinderSpec::ones() const {
    std::vector<std::int64_t> out;
    for (const auto& [pos, bit] : entries) {
        if (bit) out.push_back(pos);
    }
    return out;
}

std::vector<std::int64_t> CylinderSpec::zeros() const {
    std::vector<std::int64_t> out;
    for (const auto& [pos, bit] : entries) {
        if (!bit) out.push_back(pos);
    }
    return out;
}

}  // namespace bfree
