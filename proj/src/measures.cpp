#include "bfree/measures.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "bfree/error.hpp"
#include "bfree/rng.hpp"

namespace bfree {

namespace {

void check_probability(double p) {
    if (!(p > 0.0 && p <= 1.0)) fail("BadProbability", "p must lie in (0, 1]");
}

std::string describe(const std::string& measure, const std::vector<std::uint64_t>& moduli, double p,
                     std::int64_t lo, std::int64_t hi) {
    std::ostringstream os;
    os << measure << " moduli=";
    for (std::size_t k = 0; k < moduli.size(); ++k) os << (k ? "," : "") << moduli[k];
    os << " p=" << p << " window=" << lo << ":" << hi;
    return os.str();
}

BinaryWord apply_mask(const BinaryWord& base, double p, const CounterRng& rng, std::size_t index) {
    BinaryWord w = base;
    if (p >= 1.0) return w;
    for (auto n : base.support()) {
        if (!rng.bernoulli(p, CounterRng::kMask, index, n)) {
            w.reset(static_cast<std::size_t>(n - base.offset()));
        }
    }
    return w;
}

}  // namespace

Rational mirsky_cylinder(const BSet& bset, const std::vector<std::int64_t>& ones) {
    Rational prob = 1;
    for (auto b : bset.moduli()) {
        std::vector<std::uint64_t> residues;
        residues.reserve(ones.size());
        for (auto n : ones) residues.push_back(mod_floor(n, b));
        std::sort(residues.begin(), residues.end());
        const auto distinct = static_cast<std::uint64_t>(
            std::unique(residues.begin(), residues.end()) - residues.begin());
        if (distinct >= b) return 0;
        prob *= Rational(b - distinct, b);
    }
    return prob;
}

Rational mixed_cylinder(const BSet& bset, const CylinderSpec& spec) {
    const auto ones = spec.ones();
    const auto zeros = spec.zeros();
    if (zeros.size() > 24) fail("TooManyZeros", "inclusion-exclusion limited to 24 zero positions");
    Rational total = 0;
    const std::uint32_t subsets = 1u << zeros.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        auto set = ones;
        for (std::size_t j = 0; j < zeros.size(); ++j) {
            if (mask >> j & 1u) set.push_back(zeros[j]);
        }
        const auto term = mirsky_cylinder(bset, set);
        if (std::popcount(mask) % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

OdometerPoint draw_odometer(const std::vector<std::uint64_t>& moduli, std::uint64_t seed,
                            std::size_t index) {
    const CounterRng rng(seed);
    std::vector<std::int64_t> r;
    r.reserve(moduli.size());
    for (std::size_t k = 0; k < moduli.size(); ++k) {
        r.push_back(static_cast<std::int64_t>(
            rng.below(moduli[k], CounterRng::kOdometer, index, static_cast<std::int64_t>(k))));
    }
    return OdometerPoint(moduli, std::move(r));
}

void stream_generalized(const SAProfile& profile, double p, std::int64_t lo, std::int64_t hi,
                        std::size_t count, std::uint64_t seed, const SampleSink& sink,
                        const SieveOptions& options) {
    check_probability(p);
    const CounterRng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const auto omega = draw_odometer(profile.reduced_moduli(), seed, i);
        const auto base = phi_sa_window(profile, omega, lo, hi, options);
        sink(i, apply_mask(base, p, rng, i), base);
    }
}

namespace {

SampleBatch collect(const SAProfile& profile, double p, std::int64_t lo, std::int64_t hi,
                    std::size_t count, std::uint64_t seed, const SieveOptions& options,
                    const std::string& measure) {
    SampleBatch batch;
    batch.seed = seed;
    batch.generator = std::string(kGeneratorId);
    batch.descriptor = describe(measure, profile.bset().moduli(), p, lo, hi);
    batch.words.reserve(count);
    batch.bases.reserve(count);
    stream_generalized(profile, p, lo, hi, count, seed,
                       [&](std::size_t, const BinaryWord& w, const BinaryWord& base) {
                           batch.words.push_back(w);
                           batch.bases.push_back(base);
                       },
                       options);
    return batch;
}

}  // namespace

SampleBatch sample_mirsky(const BSet& bset, std::int64_t lo, std::int64_t hi, std::size_t count,
                          std::uint64_t seed, const SieveOptions& options) {
    return collect(trivial_profile(bset), 1.0, lo, hi, count, seed, options, "mirsky");
}

SampleBatch sample_product(const ProductMeasureSpec& spec, std::int64_t lo, std::int64_t hi,
                           std::size_t count, std::uint64_t seed, const SieveOptions& options) {
    return collect(trivial_profile(spec.bset), spec.p, lo, hi, count, seed, options, "product");
}

SampleBatch sample_generalized(const SAProfile& profile, double p, std::int64_t lo, std::int64_t hi,
                               std::size_t count, std::uint64_t seed, const SieveOptions& options) {
    return collect(profile, p, lo, hi, count, seed, options, "generalized");
}

SampleBatch sample_masked(const BSet& bset, const MaskSource& kappa, std::int64_t lo,
                          std::int64_t hi, std::size_t count, std::uint64_t seed,
                          const SieveOptions& options) {
    SampleBatch batch;
    batch.seed = seed;
    batch.generator = std::string(kGeneratorId);
    batch.descriptor = describe("masked", bset.moduli(), 0.0, lo, hi);
    for (std::size_t i = 0; i < count; ++i) {
        const auto base = phi_window(draw_odometer(bset.moduli(), seed, i), lo, hi, options);
        const auto mask = kappa(seed, i, lo, hi);
        if (mask.size() != base.size()) fail("LengthMismatch", "mask word does not cover the window");
        BinaryWord w = base;
        auto limbs = w.limbs();
        const auto mlimbs = mask.limbs();
        for (std::size_t l = 0; l < limbs.size(); ++l) limbs[l] &= mlimbs[l];
        batch.words.push_back(std::move(w));
        batch.bases.push_back(base);
    }
    return batch;
}

BinaryWord squeeze(const BinaryWord& x, const BinaryWord& z) {
    if (x.size() != z.size() || x.offset() != z.offset()) {
        fail("LengthMismatch", "squeeze needs x and z on the same window");
    }
    const auto support = z.support();
    if (support.empty()) fail("EmptySupport", "squeeze along a word with empty support");
    const auto negative = std::count_if(support.begin(), support.end(), [](auto n) { return n < 0; });
    BinaryWord out(-static_cast<std::int64_t>(negative), support.size());
    for (std::size_t j = 0; j < support.size(); ++j) {
        if (x.at(support[j])) out.set(j);
    }
    return out;
}

BinaryWord embed(const BinaryWord& u, const BinaryWord& z) {
    const auto support = z.support();
    if (u.size() != support.size()) {
        fail("LengthMismatch", "embed needs |u| equal to the support size of z");
    }
    BinaryWord out(z.offset(), z.size());
    for (std::size_t j = 0; j < support.size(); ++j) {
        if (u[j]) out.set(static_cast<std::size_t>(support[j] - z.offset()));
    }
    return out;
}

std::map<std::string, double> empirical_block_distribution(const SampleBatch& batch, std::size_t n) {
    std::map<std::string, std::size_t> counts;
    std::size_t total = 0;
    for (const auto& w : batch.words) {
        if (n == 0 || n > w.size()) fail("BadArgument", "block length must be in [1, window length]");
        for (std::size_t i = 0; i + n <= w.size(); ++i) {
            ++counts[w.slice(i, n).to_string()];
            ++total;
        }
    }
    std::map<std::string, double> freq;
    for (const auto& [block, c] : counts) {
        freq[block] = static_cast<double>(c) / static_cast<double>(total);
    }
    return freq;
}

}  // namespace bfree
