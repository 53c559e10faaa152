#include "bfree/entropy.hpp"

#include <cmath>

#include "bfree/admissibility.hpp"
#include "bfree/error.hpp"

namespace bfree {

namespace {

std::string moduli_text(const BSet& bset) {
    std::string s;
    for (std::size_t k = 0; k < bset.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(bset[k]);
    }
    return s;
}

std::string truncation_note(const BSet& bset) {
    if (bset.tail_bound() == 0) return {};
    return "moduli truncated; omitted sum of 1/b <= " + rational_to_string(bset.tail_bound()) +
           ", so the untruncated value lies in [value*(1 - tail), value]";
}

}  // namespace

double binary_entropy_bits(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -(p * std::log2(p) + (1 - p) * std::log2(1 - p));
}

EntropyReport htop_bfree(const BSet& bset) {
    EntropyReport r;
    r.exact = bset.free_density();
    r.bits = to_double(*r.exact);
    r.formula = "prod(1-1/b_k)";
    r.inputs = {{"moduli", moduli_text(bset)}};
    r.truncation_note = truncation_note(bset);
    return r;
}

EntropyReport h_product_type(const BSet& bset, const Rational& p) {
    if (p <= 0 || p >= 1) fail("BadProbability", "product-type entropy needs 0 < p < 1");
    EntropyReport r;
    const auto density = bset.free_density();
    if (p == Rational(1, 2)) {
        r.exact = density;
        r.bits = to_double(density);
    } else {
        r.bits = binary_entropy_bits(to_double(p)) * to_double(density);
    }
    r.formula = "H2(p)*prod(1-1/b_k)";
    r.inputs = {{"moduli", moduli_text(bset)}, {"p", rational_to_string(p)}};
    r.truncation_note = truncation_note(bset);
    return r;
}

EntropyReport htop_generalized(const SAProfile& profile) {
    EntropyReport r;
    r.exact = profile.density();
    r.bits = to_double(*r.exact);
    r.formula = "prod(1-s_k/b_k)";
    std::string s;
    for (auto sk : profile.s()) s += (s.empty() ? "" : ",") + std::to_string(sk);
    r.inputs = {{"moduli", moduli_text(profile.bset())}, {"s", s}};
    r.truncation_note = truncation_note(profile.bset());
    return r;
}

std::size_t minimal_cyclic_period(const BinaryWord& block) {
    const std::size_t n = block.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = 0; i < n && periodic; ++i) periodic = block[i] == block[(i + p) % n];
        if (periodic) return p;
    }
    return n;
}

EntropyReport htop_periodic_hereditary(const BinaryWord& block) {
    if (block.empty()) fail("EmptyWord", "periodic block must be nonempty");
    if (minimal_cyclic_period(block) != block.size()) {
        fail("NotMinimalPeriod", "block " + block.to_string() + " is a power of a shorter block");
    }
    EntropyReport r;
    r.exact = Rational(block.count_ones(), block.size());
    r.bits = to_double(*r.exact);
    r.formula = "|supp C|/|C|";
    r.inputs = {{"block", block.to_string()}};
    return r;
}

EntropyBounds lm7_bounds(double h_x_bits, double d, double d_prime) {
    if (!(0.0 <= d && d <= d_prime && d_prime <= 1.0) || h_x_bits < 0.0) {
        fail("BadDensityOrder", "need 0 <= d <= d' <= 1 and h >= 0");
    }
    return {d, h_x_bits + d_prime};
}

CrtBoundReport crt_density_bound(const SAProfile& profile, const BinaryWord& word) {
    const BigInt period = profile.bset().period();
    if (BigInt(word.size()) != period) {
        fail("WrongWindowLength", "word length must equal the CRT period " + period.str());
    }
    const auto st = ResidueHitState::of(word, profile.bset());
    const auto s = profile.s();
    for (std::size_t k = 0; k < st.size(); ++k) {
        if (st.modulus(k) - st.hit_count(k) < s[k]) {
            fail("PreconditionUnmet", "word misses fewer than s_k residues mod " +
                                          std::to_string(st.modulus(k)));
        }
    }
    CrtBoundReport r;
    r.observed = one_density(word);
    r.bound = profile.density();
    r.holds = r.observed <= r.bound;
    return r;
}

}  // namespace bfree
