#include "bfree/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <string>

#include "bfree/error.hpp"
#include "bfree/sieve.hpp"

namespace bfree {

ResidueHitState ResidueHitState::of(const BinaryWord& word, const BSet& bset) {
    ResidueHitState st;
    st.moduli_ = bset.moduli();
    const auto support = word.support();
    for (auto b : st.moduli_) {
        std::vector<std::uint64_t> hit;
        hit.reserve(support.size());
        for (auto n : support) hit.push_back(mod_floor(n, b));
        std::sort(hit.begin(), hit.end());
        hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
        st.counts_.push_back(hit.size());
        st.hit_.push_back(std::move(hit));
    }
    return st;
}

std::vector<std::uint64_t> ResidueHitState::missing(std::size_t k) const {
    std::vector<std::uint64_t> out;
    auto it = hit_[k].begin();
    for (std::uint64_t r = 0; r < moduli_[k]; ++r) {
        if (it != hit_[k].end() && *it == r) {
            ++it;
        } else {
            out.push_back(r);
        }
    }
    return out;
}

bool ResidueHitState::admissible() const noexcept {
    for (std::size_t k = 0; k < counts_.size(); ++k) {
        if (!proper(k)) return false;
    }
    return true;
}

bool is_admissible(const BinaryWord& word, const BSet& bset) {
    const auto ones = word.count_ones();
    const auto support = word.support();
    for (auto b : bset.moduli()) {
        if (ones < b) continue;
        std::vector<bool> hit(b, false);
        std::uint64_t count = 0;
        for (auto n : support) {
            const auto r = mod_floor(n, b);
            if (!hit[r]) {
                hit[r] = true;
                if (++count == b) return false;
            }
        }
    }
    return true;
}

std::vector<BigInt> block_complexity(const BSet& bset, std::size_t n_max,
                                     const ComplexityOptions& options) {
    std::uint64_t total_bits = 0;
    for (auto b : bset.moduli()) total_bits += b;
    if (total_bits > 64) {
        fail("StateSpaceTooLarge", "sum of moduli " + std::to_string(total_bits) +
                                       " exceeds the 64-bit state encoding");
    }

    // Modulus k owns bits [shift_k, shift_k + b_k) of the state mask.
    std::vector<std::uint64_t> shift, full;
    std::uint64_t acc = 0;
    for (auto b : bset.moduli()) {
        shift.push_back(acc);
        full.push_back((b == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << b) - 1) << acc);
        acc += b;
    }
    auto rejected = [&](std::uint64_t mask) {
        for (auto f : full) {
            if ((mask & f) == f) return true;
        }
        return false;
    };

    // Only reachable states are stored; a step either keeps the state (bit 0)
    // or inserts the current residues (bit 1).
    std::unordered_map<std::uint64_t, std::size_t> index{{0, 0}};
    std::vector<std::uint64_t> states{0};
    std::vector<BigInt> count{1};
    std::vector<std::size_t> order;

    std::vector<BigInt> p;
    p.reserve(n_max);
    for (std::size_t i = 0; i < n_max; ++i) {
        std::uint64_t insert = 0;
        for (std::size_t k = 0; k < bset.size(); ++k) {
            insert |= std::uint64_t{1} << (shift[k] + i % bset[k]);
        }
        // Descending order: a target S | insert is numerically >= S, so it has
        // already absorbed its own transition when S pushes into it.
        order.resize(states.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return states[a] > states[b]; });
        for (auto j : order) {
            const auto s = states[j];
            const auto t = s | insert;
            if (t == s) {
                count[j] += count[j];
                continue;
            }
            if (rejected(t)) continue;
            auto [it, fresh] = index.try_emplace(t, states.size());
            if (fresh) {
                if (states.size() >= options.max_states) {
                    fail("StateSpaceTooLarge", "more than " + std::to_string(options.max_states) +
                                                   " reachable transfer states");
                }
                states.push_back(t);
                count.emplace_back(0);
            }
            count[it->second] += count[j];
        }
        BigInt total = 0;
        for (const auto& c : count) total += c;
        p.push_back(std::move(total));
    }
    return p;
}

double big_log2(const BigInt& value) {
    if (value <= 0) fail("BadArgument", "log2 of a nonpositive integer");
    const auto msb = boost::multiprecision::msb(value);
    if (msb < 53) return std::log2(value.convert_to<double>());
    const BigInt top = value >> (msb - 52);
    return static_cast<double>(msb - 52) + std::log2(top.convert_to<double>());
}

std::vector<double> entropy_from_complexity(const std::vector<BigInt>& counts) {
    std::vector<double> h;
    h.reserve(counts.size());
    for (std::size_t n = 1; n <= counts.size(); ++n) {
        h.push_back(big_log2(counts[n - 1]) / static_cast<double>(n));
    }
    return h;
}

std::vector<ThetaResult> theta_window(const BinaryWord& word, const BSet& bset) {
    const auto st = ResidueHitState::of(word, bset);
    std::vector<ThetaResult> out;
    for (std::size_t k = 0; k < st.size(); ++k) {
        const auto b = st.modulus(k);
        ThetaResult r;
        for (auto m : st.missing(k)) r.residues.push_back((b - m) % b);
        std::sort(r.residues.begin(), r.residues.end());
        if (r.residues.empty()) {
            r.kind = ThetaResult::Kind::None;
        } else if (r.residues.size() == 1) {
            r.kind = ThetaResult::Kind::Unique;
        } else {
            r.kind = ThetaResult::Kind::Ambiguous;
        }
        out.push_back(std::move(r));
    }
    return out;
}

SpectrumProfile spectrum_profile(const BinaryWord& word, const BSet& bset) {
    const auto st = ResidueHitState::of(word, bset);
    SpectrumProfile out;
    for (std::size_t k = 0; k < st.size(); ++k) {
        if (!st.proper(k)) {
            fail("Inadmissible", "support covers every residue mod " + std::to_string(st.modulus(k)) +
                                     " (index " + std::to_string(k) + ")");
        }
        SpectrumRecord rec;
        rec.modulus = st.modulus(k);
        rec.missing = st.missing(k);
        rec.s = rec.missing.size();
        rec.b_prime = minimal_translation_period(rec.missing, rec.modulus);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<BinaryWord> admissible_blocks(const BSet& bset, std::size_t n, std::size_t max_words) {
    // Every word dominated by eta on [0, n) is admissible, which bounds the
    // count from below before any enumeration.
    const auto eta_ones = eta_window(bset, 0, static_cast<std::int64_t>(n)).count_ones();
    if (eta_ones < 64 && (std::uint64_t{1} << eta_ones) > max_words) {
        fail("BudgetExceeded", "at least 2^" + std::to_string(eta_ones) + " admissible " +
                                   std::to_string(n) + "-blocks");
    }
    if (eta_ones >= 64) fail("BudgetExceeded", "at least 2^64 admissible blocks");
    std::vector<BinaryWord> out;
    std::vector<std::vector<std::uint32_t>> hits;
    for (auto b : bset.moduli()) hits.emplace_back(b, 0);
    std::vector<std::size_t> covered(bset.size(), 0);
    BinaryWord current(0, n);

    // Depth-first, trying 0 before 1, which yields lexicographic order.
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            if (out.size() >= max_words) {
                fail("BudgetExceeded", "more than " + std::to_string(max_words) + " admissible " +
                                           std::to_string(n) + "-blocks");
            }
            out.push_back(current);
            return;
        }
        self(self, i + 1);
        bool ok = true;
        for (std::size_t k = 0; k < bset.size(); ++k) {
            const auto r = i % bset[k];
            if (hits[k][r] == 0 && covered[k] + 1 == bset[k]) ok = false;
        }
        if (!ok) return;
        for (std::size_t k = 0; k < bset.size(); ++k) {
            if (hits[k][i % bset[k]]++ == 0) ++covered[k];
        }
        current.set(i);
        self(self, i + 1);
        current.reset(i);
        for (std::size_t k = 0; k < bset.size(); ++k) {
            if (--hits[k][i % bset[k]] == 0) --covered[k];
        }
    };
    if (n == 0) return {BinaryWord()};
    recurse(recurse, 0);
    return out;
}

}  // namespace bfree
