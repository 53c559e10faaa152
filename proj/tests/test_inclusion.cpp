#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "bfree/admissibility.hpp"
#include "bfree/error.hpp"
#include "bfree/inclusion.hpp"
#include "oracles.hpp"

using namespace bfree;

namespace {
std::string kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

// All pairwise coprime sets with one or two moduli in [2, 30].
std::vector<std::vector<std::int64_t>> small_sets() {
    std::vector<std::vector<std::int64_t>> out;
    for (std::int64_t a = 2; a <= 30; ++a) {
        out.push_back({a});
        for (std::int64_t b = a + 1; b <= 30; ++b) {
            if (std::gcd(a, b) == 1) out.push_back({a, b});
        }
    }
    return out;
}

BSet to_bset(const std::vector<std::int64_t>& m) {
    return make_bset(std::vector<std::uint64_t>(m.begin(), m.end()));
}

bool a_free(const std::vector<std::int64_t>& a, std::int64_t n) {
    for (auto m : a) {
        if (n % m == 0) return false;
    }
    return true;
}
}  // namespace

TEST_CASE("includes and equality examples") {
    CHECK(includes(make_bset({2}), make_bset({4})));
    CHECK_FALSE(includes(make_bset({2, 3}), make_bset({5})));
    CHECK(includes(make_bset({2, 9}), make_bset({4, 9})));
    CHECK(equality(make_bset({2, 3}), make_bset({2, 3})));
    CHECK_FALSE(equality(make_bset({2}), make_bset({4})));
    CHECK(equality(make_bset({4, 9}), make_bset({9, 4})));
}

TEST_CASE("includes agrees with word-level containment for all sets of at most two moduli <= 30") {
    // Every phi_A(omega) is a translate of eta_A, and B-admissibility is
    // hereditary, so A-words of any length are B-admissible iff eta_A on one
    // joint period misses a residue of each b'.
    const auto sets = small_sets();
    std::map<std::pair<std::size_t, std::int64_t>, bool> covers;  // (A index, b') -> eta_A hits all of Z/b'
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto& a = sets[i];
        const std::int64_t period = std::accumulate(a.begin(), a.end(), std::int64_t{1}, std::multiplies<>());
        for (std::int64_t bp = 2; bp <= 30; ++bp) {
            const std::int64_t window = std::lcm(period, bp);
            std::vector<bool> hit(static_cast<std::size_t>(bp), false);
            std::int64_t distinct = 0;
            for (std::int64_t n = 0; n < window && distinct < bp; ++n) {
                if (a_free(a, n) && !hit[static_cast<std::size_t>(n % bp)]) {
                    hit[static_cast<std::size_t>(n % bp)] = true;
                    ++distinct;
                }
            }
            covers[{i, bp}] = distinct == bp;
        }
    }
    std::size_t pairs = 0, mismatches = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto a = to_bset(sets[i]);
        for (const auto& bm : sets) {
            bool contained = true;
            for (auto bp : bm) contained = contained && !covers[{i, bp}];
            mismatches += includes(a, to_bset(bm)) != contained;
            ++pairs;
        }
    }
    CHECK(pairs > 70000);
    CHECK(mismatches == 0);
}

TEST_CASE("includes is reflexive and transitive") {
    const auto sets = small_sets();
    std::mt19937_64 gen(3);
    for (const auto& m : sets) CHECK(includes(to_bset(m), to_bset(m)));
    std::size_t chains = 0;
    for (int t = 0; t < 200000; ++t) {
        const auto a = to_bset(sets[gen() % sets.size()]);
        const auto b = to_bset(sets[gen() % sets.size()]);
        const auto c = to_bset(sets[gen() % sets.size()]);
        if (includes(a, b) && includes(b, c)) {
            ++chains;
            CHECK(includes(a, c));
        }
    }
    CHECK(chains > 0);
}

TEST_CASE("equality is mutual inclusion") {
    const auto sets = small_sets();
    for (std::size_t i = 0; i < sets.size(); i += 7) {
        for (std::size_t j = 0; j < sets.size(); j += 5) {
            const auto a = to_bset(sets[i]);
            const auto b = to_bset(sets[j]);
            CHECK(equality(a, b) == (includes(a, b) && includes(b, a)));
        }
    }
}

TEST_CASE("construct_admissible examples") {
    CHECK(construct_admissible({2, 3}, 5) == std::vector<std::int64_t>{31, 17, 13, 19, 35});
    CHECK(construct_admissible({2}, 3) == std::vector<std::int64_t>{7, 5, 9});
    CHECK(construct_admissible({}, 2) == std::vector<std::int64_t>{3, 4});
    CHECK(kind_of([] { construct_admissible({2, 3}, 9); }) == "DivisiblePrecondition");
    CHECK(kind_of([] { construct_admissible({4, 6}, 5); }) == "NotCoprime");
}

TEST_CASE("construct_admissible passes full residue verification on 200 random instances") {
    std::mt19937_64 gen(200);
    int done = 0;
    while (done < 200) {
        std::vector<std::uint64_t> small;
        const int size = static_cast<int>(gen() % 4);
        for (int k = 0; k < size; ++k) {
            const std::uint64_t m = 2 + gen() % 15;
            bool ok = true;
            for (auto s : small) ok = ok && std::gcd(s, m) == 1;
            if (ok) small.push_back(m);
        }
        const std::uint64_t bp = 2 + gen() % 60;
        bool divisible = false;
        for (auto s : small) divisible = divisible || bp % s == 0;
        if (divisible) continue;
        ++done;

        const auto a = construct_admissible(small, bp);
        REQUIRE(a.size() == bp);
        for (std::uint64_t i = 1; i <= bp; ++i) {
            std::int64_t e = 1;
            for (auto s : small) {
                if (i % s != 0) e *= static_cast<std::int64_t>(s);
            }
            CHECK(a[i - 1] == static_cast<std::int64_t>(i) + e * static_cast<std::int64_t>(bp));
        }
        const std::set<std::int64_t> support(a.begin(), a.end());
        std::vector<std::int64_t> signed_small(small.begin(), small.end());
        CHECK(oracle::admissible(support, signed_small));
        for (auto s : signed_small) {
            for (auto n : a) CHECK(oracle::mod(n, s) != 0);
        }
        CHECK_FALSE(oracle::admissible(support, {static_cast<std::int64_t>(bp)}));
    }
}

TEST_CASE("inclusion_witness") {
    const auto w = inclusion_witness(make_bset({2, 3}), make_bset({5}));
    REQUIRE(w.has_value());
    const auto support = w->support();
    CHECK(std::vector<std::int64_t>(support.begin(), support.end()) ==
          std::vector<std::int64_t>{13, 17, 19, 31, 35});
    CHECK(is_admissible(*w, make_bset({2, 3})));
    CHECK_FALSE(is_admissible(*w, make_bset({5})));

    CHECK_FALSE(inclusion_witness(make_bset({2}), make_bset({4})).has_value());
    CHECK_FALSE(inclusion_witness(make_bset({2}), make_bset({2})).has_value());
}

TEST_CASE("inclusion_witness separates every non-included pair it is asked about") {
    const auto sets = small_sets();
    std::mt19937_64 gen(17);
    int separated = 0;
    for (int t = 0; t < 400; ++t) {
        const auto& am = sets[gen() % sets.size()];
        const auto& bm = sets[gen() % sets.size()];
        const auto a = to_bset(am);
        const auto b = to_bset(bm);
        const auto w = inclusion_witness(a, b);
        if (includes(a, b)) {
            CHECK_FALSE(w.has_value());
            continue;
        }
        REQUIRE(w.has_value());
        const auto supp = w->support();
        const std::set<std::int64_t> s(supp.begin(), supp.end());
        CHECK(oracle::admissible(s, am));
        CHECK_FALSE(oracle::admissible(s, bm));
        ++separated;
    }
    CHECK(separated > 100);
}

TEST_CASE("inclusion_witness search budget") {
    WitnessOptions tiny;
    tiny.max_scan = 10;
    CHECK(kind_of([&] { inclusion_witness(make_bset({2, 3}), make_bset({4, 9}), tiny); }) ==
          "SearchBudgetExceeded");
}

TEST_CASE("density_estimate") {
    CHECK(density_estimate(make_bset({2, 3}), 1, 0, 6) == Rational(2, 6));
    const auto d = density_estimate(make_bset({2, 3}), 5, 0, 60000);
    CHECK(std::abs(to_double(d) - 1.0 / 3) <= 2.0 * 6 / 60000);
    const auto e = density_estimate(make_bset({2}), 3, 1, 100001);
    CHECK(std::abs(to_double(e) - 0.5) <= 1.0 * 2 / 100001);
    CHECK(kind_of([] { density_estimate(make_bset({2, 3}), 4, 1, 600); }) == "NotCoprimeToC");
    CHECK(kind_of([] { density_estimate(make_bset({2, 3}), 5, 1, 5); }) == "BadArgument");
}

TEST_CASE("density_estimate stays within (#moduli) * period / horizon of the product") {
    std::mt19937_64 gen(8);
    for (auto m : std::vector<std::vector<std::uint64_t>>{{2, 3}, {4, 9}, {4, 9, 25}, {2, 3, 5, 7}}) {
        const auto b = make_bset(m);
        const double target = to_double(b.free_density());
        const double period = to_double(Rational(b.period()));
        for (int t = 0; t < 5; ++t) {
            std::int64_t c;
            do {
                c = 1 + static_cast<std::int64_t>(gen() % 500);
            } while (std::gcd(c, static_cast<std::int64_t>(static_cast<std::uint64_t>(b.period()))) != 1);
            const std::int64_t r = static_cast<std::int64_t>(gen() % 1000) - 500;
            const std::uint64_t horizon = static_cast<std::uint64_t>(period) * (3 + gen() % 20) + gen() % 97;
            const double est = to_double(density_estimate(b, c, r, horizon));
            CHECK(std::abs(est - target) <= static_cast<double>(m.size()) * period / static_cast<double>(horizon));
        }
    }
}
