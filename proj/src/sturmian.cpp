#include "bfree/sturmian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <unordered_set>

#include "bfree/admissibility.hpp"
#include "bfree/entropy.hpp"
#include "bfree/error.hpp"
#include "bfree/rng.hpp"
#include "bfree/sieve.hpp"

namespace bfree {

namespace {

constexpr std::int64_t kMaxIndex = std::int64_t{1} << 62;

Fixed128 circular_distance(Fixed128 a, Fixed128 b) {
    const Fixed128 d1 = a - b;
    const Fixed128 d2 = b - a;
    return d1 < d2 ? d1 : d2;
}

BigInt to_big(Fixed128 x) {
    BigInt v = static_cast<std::uint64_t>(x >> 64);
    v <<= 64;
    v += static_cast<std::uint64_t>(x);
    return v;
}

Fixed128 from_big(const BigInt& v) {
    const BigInt mask = (BigInt(1) << 64) - 1;
    const auto hi = static_cast<std::uint64_t>((v >> 64) & mask);
    const auto lo = static_cast<std::uint64_t>(v & mask);
    return (static_cast<Fixed128>(hi) << 64) | lo;
}

}  // namespace

Fixed128 fixed_from_double(double x) {
    if (!(x >= 0.0 && x < 1.0)) fail("BadArgument", "fixed-point value must lie in [0, 1)");
    if (x == 0.0) return 0;
    int e = 0;
    const double m = std::frexp(x, &e);
    const auto mant = static_cast<std::uint64_t>(std::ldexp(m, 53));
    const int shift = e + 75;
    if (shift >= 0) return static_cast<Fixed128>(mant) << shift;
    if (shift <= -64) return 0;
    return static_cast<Fixed128>(mant >> -shift);
}

double fixed_to_double(Fixed128 x) {
    return std::ldexp(static_cast<double>(static_cast<std::uint64_t>(x >> 64)), -64) +
           std::ldexp(static_cast<double>(static_cast<std::uint64_t>(x)), -128);
}

Arc Arc::from_endpoints(double a, double b) {
    if (!(0.0 <= a && a < b && b <= 1.0)) fail("BadArgument", "arc needs 0 <= a < b <= 1");
    Arc arc;
    if (a == 0.0 && b == 1.0) {
        arc.full = true;
        arc.length = ~Fixed128{0};
        return arc;
    }
    arc.start = fixed_from_double(a);
    arc.length = (b == 1.0 ? Fixed128{0} : fixed_from_double(b)) - arc.start;
    return arc;
}

RotationCoding RotationCoding::golden_mean(Arc arc) {
    // floor(2^128 * (sqrt 5 - 1) / 2) from the integer square root of 5 * 2^256.
    const BigInt root = boost::multiprecision::sqrt(BigInt(5) << 256);
    const BigInt alpha = (root - (BigInt(1) << 128)) / 2;
    return from_fixed(from_big(alpha), 0, arc);
}

RotationCoding RotationCoding::from_fixed(Fixed128 alpha, Fixed128 y, Arc arc) {
    if (alpha == 0) fail("BadArgument", "alpha must lie in (0, 1)");
    RotationCoding c;
    c.alpha_ = alpha;
    c.y_ = y;
    c.arc_ = arc;
    return c;
}

RotationCoding RotationCoding::from_double(double alpha, double y, Arc arc) {
    return from_fixed(fixed_from_double(alpha), fixed_from_double(y), arc);
}

RotationCoding RotationCoding::with_alpha_offset(double delta) const {
    const Fixed128 magnitude = fixed_from_double(std::fabs(delta));
    RotationCoding c = *this;
    c.alpha_ = delta >= 0 ? alpha_ + magnitude : alpha_ - magnitude;
    if (c.alpha_ == 0) fail("BadArgument", "offset alpha leaves (0, 1)");
    return c;
}

std::vector<std::uint64_t> RotationCoding::continued_fraction(std::size_t max_terms) const {
    std::vector<std::uint64_t> terms;
    BigInt num = to_big(alpha_);
    BigInt den = BigInt(1) << 128;
    // alpha = num/den < 1; the first partial quotient comes from den/num.
    BigInt q_prev = 0, q = 1;
    const BigInt limit = BigInt(1) << 60;
    while (num != 0 && terms.size() < max_terms) {
        const BigInt a = den / num;
        const BigInt rem = den % num;
        const BigInt q_next = a * q + q_prev;
        if (q_next >= limit) break;
        terms.push_back(a.convert_to<std::uint64_t>());
        q_prev = q;
        q = q_next;
        den = num;
        num = rem;
    }
    return terms;
}

bool RotationCoding::bit(std::int64_t n) const {
    if (n > kMaxIndex || n < -kMaxIndex) fail("PrecisionExhausted", "index outside exact range");
    const Fixed128 phase = y_ + static_cast<Fixed128>(static_cast<__int128>(n)) * alpha_;
    if (arc_.full) return true;
    // y and the arc are exact as stored; alpha is within one ulp of its
    // intended value, so the phase at index n is within |n| ulps.
    if (n != 0) {
        const auto bound = static_cast<Fixed128>(n < 0 ? -n : n);
        if (circular_distance(phase, arc_.start) <= bound ||
            circular_distance(phase, arc_.start + arc_.length) <= bound) {
            fail("PrecisionExhausted", "phase at index " + std::to_string(n) +
                                           " is within its error bound of an arc endpoint");
        }
    }
    return phase - arc_.start < arc_.length;
}

BinaryWord sturmian_window(const RotationCoding& coding, std::int64_t lo, std::int64_t hi) {
    if (lo >= hi) fail("BadWindow", "window requires lo < hi");
    BinaryWord w(lo, static_cast<std::size_t>(hi - lo));
    for (std::int64_t n = lo; n < hi; ++n) {
        if (coding.bit(n)) w.set(static_cast<std::size_t>(n - lo));
    }
    return w;
}

std::vector<std::uint64_t> orbit_blocks(const RotationCoding& coding, std::size_t n,
                                        std::size_t orbit) {
    if (n == 0 || n > 64) fail("BadArgument", "block length must be in [1, 64]");
    const auto w = sturmian_window(coding, 0, static_cast<std::int64_t>(orbit + n - 1));
    std::vector<std::uint64_t> blocks;
    blocks.reserve(orbit);
    for (std::size_t i = 0; i < orbit; ++i) blocks.push_back(w.extract(i, n));
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    return blocks;
}

std::vector<std::uint64_t> saturated_blocks(const RotationCoding& coding, std::size_t n,
                                            const SaturationOptions& options) {
    std::size_t orbit = std::max(options.initial_orbit, 10 * n);
    if (4 * orbit > options.max_orbit) {
        fail("NotSaturated", "orbit budget " + std::to_string(options.max_orbit) +
                                 " below the first saturation check for n = " + std::to_string(n));
    }
    auto a = orbit_blocks(coding, n, orbit);
    auto b = orbit_blocks(coding, n, 2 * orbit);
    auto c = orbit_blocks(coding, n, 4 * orbit);
    while (a.size() != b.size() || b.size() != c.size()) {
        orbit *= 2;
        if (4 * orbit > options.max_orbit) {
            fail("NotSaturated", std::to_string(n) + "-block count still growing at orbit length " +
                                     std::to_string(2 * orbit));
        }
        a = std::move(b);
        b = std::move(c);
        c = orbit_blocks(coding, n, 4 * orbit);
    }
    return c;
}

std::vector<std::uint64_t> rotation_complexity(const RotationCoding& coding, std::size_t n_max,
                                               const SaturationOptions& options) {
    std::vector<std::uint64_t> p;
    p.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) p.push_back(saturated_blocks(coding, n, options).size());
    return p;
}

BigInt hereditary_block_count(const std::vector<std::uint64_t>& blocks, std::size_t n) {
    if (n == 0 || n > 64) fail("BadArgument", "block length must be in [1, 64]");
    if (n <= 24) {
        // Downward closure by one pass per bit over the full cube.
        std::vector<std::uint8_t> reach(std::size_t{1} << n, 0);
        for (auto b : blocks) reach[static_cast<std::size_t>(b)] = 1;
        for (std::size_t bit = 0; bit < n; ++bit) {
            const std::size_t step = std::size_t{1} << bit;
            for (std::size_t m = 0; m < reach.size(); ++m) {
                if ((m & step) && reach[m]) reach[m ^ step] = 1;
            }
        }
        return BigInt(std::count(reach.begin(), reach.end(), std::uint8_t{1}));
    }
    std::unordered_set<std::uint64_t> seen;
    for (auto b : blocks) {
        if (std::popcount(b) > 26) fail("BudgetExceeded", "dominated enumeration too large");
        for (std::uint64_t s = b;; s = (s - 1) & b) {
            seen.insert(s);
            if (seen.size() > (std::size_t{1} << 26)) {
                fail("BudgetExceeded", "dominated enumeration too large");
            }
            if (s == 0) break;
        }
    }
    return BigInt(seen.size());
}

double hereditary_entropy_estimate(const RotationCoding& coding, std::size_t n,
                                   const SaturationOptions& options) {
    const auto blocks = saturated_blocks(coding, n, options);
    return big_log2(hereditary_block_count(blocks, n)) / static_cast<double>(n);
}

bool close_alpha_block_containment(const RotationCoding& alpha, const RotationCoding& beta,
                                   std::size_t n, const SaturationOptions& options) {
    for (auto a : alpha.continued_fraction()) {
        if (a > 2) fail("PreconditionUnmet", "alpha has a partial quotient above 2");
    }
    const Fixed128 diff = alpha.alpha_fixed() > beta.alpha_fixed()
                              ? alpha.alpha_fixed() - beta.alpha_fixed()
                              : beta.alpha_fixed() - alpha.alpha_fixed();
    // |alpha - beta| < 1/(48 n^2)  <=>  diff * 48 n^2 < 2^128.
    if (to_big(diff) * 48 * n * n >= (BigInt(1) << 128)) {
        fail("PreconditionUnmet", "|alpha - beta| is not below 1/(48 n^2)");
    }
    const auto of_alpha = saturated_blocks(alpha, n, options);
    const auto of_beta = saturated_blocks(beta, n, options);
    return std::includes(of_alpha.begin(), of_alpha.end(), of_beta.begin(), of_beta.end());
}

PeriodicHereditarySystem::PeriodicHereditarySystem(BinaryWord block) : block_(std::move(block)) {
    if (block_.empty()) fail("EmptyWord", "periodic block must be nonempty");
    if (minimal_cyclic_period(block_) != block_.size()) {
        fail("NotMinimalPeriod", "block " + block_.to_string() + " is a power of a shorter block");
    }
    block_ = block_.with_offset(0);
}

std::pair<PeriodicHereditarySystem, PeriodicHereditarySystem> two_mme_system() {
    return {PeriodicHereditarySystem(BinaryWord::from_string("101001000")),
            PeriodicHereditarySystem(BinaryWord::from_string("101000100"))};
}

Rational mme_block_frequency(const PeriodicHereditarySystem& system, const BinaryWord& target,
                             const Rational& p) {
    if (p < 0 || p > 1) fail("BadProbability", "p must lie in [0, 1]");
    const std::size_t period = system.period();
    if (target.size() > 2 * period) fail("TargetTooLong", "target longer than two periods");
    const std::size_t kept = target.count_ones();
    Rational total = 0;
    for (std::size_t j = 0; j < period; ++j) {
        std::size_t window_ones = 0;
        bool dominated = true;
        for (std::size_t i = 0; i < target.size(); ++i) {
            const bool x = system.symbol(static_cast<std::int64_t>(j + i));
            window_ones += x;
            if (target[i] && !x) dominated = false;
        }
        if (!dominated) continue;
        Rational term = 1;
        for (std::size_t i = 0; i < kept; ++i) term *= p;
        for (std::size_t i = kept; i < window_ones; ++i) term *= (1 - p);
        total += term;
    }
    return total / period;
}

SampleBatch sample_periodic(const PeriodicHereditarySystem& system, double p, std::int64_t lo,
                            std::int64_t hi, std::size_t count, std::uint64_t seed) {
    if (!(p > 0.0 && p <= 1.0)) fail("BadProbability", "p must lie in (0, 1]");
    if (lo >= hi) fail("BadWindow", "window requires lo < hi");
    const CounterRng rng(seed);
    SampleBatch batch;
    batch.seed = seed;
    batch.generator = std::string(kGeneratorId);
    batch.descriptor = "periodic block=" + system.block().to_string() + " p=" + std::to_string(p) +
                       " window=" + std::to_string(lo) + ":" + std::to_string(hi);
    const auto len = static_cast<std::size_t>(hi - lo);
    for (std::size_t i = 0; i < count; ++i) {
        const auto phase = static_cast<std::int64_t>(rng.below(system.period(), CounterRng::kPhase, i, 0));
        BinaryWord base(lo, len), word(lo, len);
        for (std::size_t j = 0; j < len; ++j) {
            const std::int64_t n = lo + static_cast<std::int64_t>(j);
            if (!system.symbol(phase + n)) continue;
            base.set(j);
            if (p >= 1.0 || rng.bernoulli(p, CounterRng::kMask, i, n)) word.set(j);
        }
        batch.words.push_back(std::move(word));
        batch.bases.push_back(std::move(base));
    }
    return batch;
}

BinaryWord minimal_subset_variant(const PeriodicHereditarySystem& system,
                                  const std::vector<std::uint64_t>& primes, std::int64_t lo,
                                  std::int64_t hi, const SieveOptions& options) {
    for (std::size_t i = 1; i < primes.size(); ++i) {
        if (primes[i] <= primes[i - 1]) fail("BadArgument", "primes must be strictly increasing");
    }
    if (lo >= hi) fail("BadWindow", "window requires lo < hi");
    if (static_cast<std::uint64_t>(hi - lo) > options.max_bits) {
        fail("WindowTooLarge", "window exceeds the configured budget");
    }
    // Partial products p_1...p_k while they fit; beyond that only n = k-1
    // could match within 64-bit indices, and that case is excluded anyway.
    std::vector<std::int64_t> products;
    BigInt acc = 1;
    for (auto q : primes) {
        acc *= q;
        if (acc > (BigInt(1) << 62)) break;
        products.push_back(acc.convert_to<std::int64_t>());
    }
    const auto period = static_cast<std::int64_t>(system.period());
    auto erased = [&](std::int64_t block_index) {
        for (std::size_t k = 1; k <= products.size(); ++k) {
            const auto target = static_cast<std::int64_t>(k - 1);
            if (block_index != target &&
                mod_floor(block_index - target, static_cast<std::uint64_t>(products[k - 1])) == 0) {
                return true;
            }
        }
        return false;
    };
    BinaryWord w(lo, static_cast<std::size_t>(hi - lo));
    for (std::int64_t m = lo; m < hi; ++m) {
        const std::int64_t block_index =
            (m >= 0 ? m : m - period + 1) / period;
        if (system.symbol(m) && !erased(block_index)) w.set(static_cast<std::size_t>(m - lo));
    }
    return w;
}

BinaryWord transitive_closure_point(const BlockCatalogue& catalogue, double h_bits, std::size_t n1,
                                    std::size_t length, const TransitiveOptions& options) {
    if (!(h_bits > 0.0 && h_bits <= 1.0)) fail("BadArgument", "h_bits must lie in (0, 1]");
    if (n1 == 0) fail("BadArgument", "n1 must be positive");
    const auto zero_factor = static_cast<std::size_t>(std::ceil(1.0 / h_bits - 1e-9));
    std::vector<std::uint8_t> x;
    x.reserve(length);

    auto done = [&] { return x.size() >= length; };
    auto append_zeros = [&](std::size_t n) { x.insert(x.end(), n, std::uint8_t{0}); };
    auto append_block = [&](const BinaryWord& b) {
        for (std::size_t i = 0; i < b.size(); ++i) x.push_back(b[i] ? 1 : 0);
    };
    auto fetch = [&](std::size_t n) {
        auto blocks = catalogue(n);
        if (blocks.size() > options.max_stage_blocks) {
            fail("BudgetExceeded", "catalogue of " + std::to_string(n) + "-blocks exceeds budget");
        }
        for (const auto& b : blocks) {
            if (b.size() != n) fail("BadArgument", "catalogue returned a block of the wrong length");
        }
        return blocks;
    };

    if (length > 0) {
        for (const auto& b : fetch(n1)) {
            append_block(b);
            append_zeros(zero_factor * n1);
            if (done()) break;
        }
    }
    while (!done()) {
        const std::size_t nk = x.size();
        for (const auto& b : fetch(nk)) {
            append_zeros(zero_factor * nk);
            append_block(b);
            if (done()) break;
        }
        if (done()) break;
        // Blocks dominated by the current prefix, lexicographic: the earliest
        // support position is the most significant bit of the counter.
        std::vector<std::size_t> ones;
        for (std::size_t i = 0; i < nk; ++i) {
            if (x[i]) ones.push_back(i);
        }
        if (ones.size() >= 63) fail("BudgetExceeded", "dominated catalogue too large");
        const std::uint64_t total = std::uint64_t{1} << ones.size();
        for (std::uint64_t t = 0; t < total && !done(); ++t) {
            append_zeros(zero_factor * nk);
            const std::size_t start = x.size();
            append_zeros(nk);
            for (std::size_t j = 0; j < ones.size(); ++j) {
                if ((t >> (ones.size() - 1 - j)) & 1u) x[start + ones[j]] = 1;
            }
        }
    }
    BinaryWord w(0, length);
    for (std::size_t i = 0; i < length; ++i) {
        if (x[i]) w.set(i);
    }
    return w;
}

}  // namespace bfree
