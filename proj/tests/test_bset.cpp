#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bfree/bset.hpp"
#include "bfree/error.hpp"
#include "bfree/numeric.hpp"

using namespace bfree;

namespace {
std::string kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}
}  // namespace

TEST_CASE("validate_bset accepts coprime sorted moduli") {
    const std::vector<std::uint64_t> squares{4, 9, 25};
    CHECK(validate_bset(squares).moduli() == squares);
    const std::vector<std::uint64_t> pair{2, 3};
    CHECK(validate_bset(pair).size() == 2);
}

TEST_CASE("validate_bset rejects bad input") {
    const std::vector<std::uint64_t> shared{2, 4};
    CHECK(kind_of([&] { validate_bset(shared); }) == "NotCoprime");
    const std::vector<std::uint64_t> small{1, 3};
    CHECK(kind_of([&] { validate_bset(small); }) == "ModulusTooSmall");
    const std::vector<std::uint64_t> unsorted{9, 4};
    CHECK(kind_of([&] { validate_bset(unsorted); }) == "NotSorted");
    CHECK(kind_of([&] { validate_bset(std::vector<std::uint64_t>{2, 3}, Rational(-1, 2)); }) ==
          "NegativeTailBound");
}

TEST_CASE("validate_bset is idempotent") {
    const auto b = make_bset({25, 4, 9}, Rational(1, 5));
    const auto again = validate_bset(b.moduli(), b.tail_bound());
    CHECK(again == b);
}

TEST_CASE("squarefree_family builds prime squares with a harmonic tail bound") {
    CHECK(squarefree_family(1).moduli() == std::vector<std::uint64_t>{4});
    CHECK(squarefree_family(3).moduli() == std::vector<std::uint64_t>{4, 9, 25});
    const auto five = squarefree_family(5);
    CHECK(five.moduli() == std::vector<std::uint64_t>{4, 9, 25, 49, 121});
    CHECK(five.tail_bound() == Rational(1, 11));

    // The declared bound dominates a long partial sum of the true tail.
    Rational partial = 0;
    for (std::uint64_t p : {13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) partial += Rational(1, p * p);
    CHECK(partial < five.tail_bound());
}

TEST_CASE("crt_free_count by formula and sieve") {
    CHECK(crt_free_count(make_bset({2, 3, 5})) == 8);
    CHECK(*crt_free_count_sieve(make_bset({2, 3, 5})) == 8);
    CHECK(crt_free_count(make_bset({2})) == 1);
    CHECK(crt_free_count(make_bset({2, 3})) == 2);

    for (auto moduli : std::vector<std::vector<std::uint64_t>>{{4, 9}, {4, 9, 25}, {7, 11, 13}, {3, 8, 25}}) {
        const auto b = make_bset(moduli);
        CHECK(crt_free_count_sieve(b).value() == crt_free_count(b));
    }
    CHECK_FALSE(crt_free_count_sieve(squarefree_family(6)).has_value());
}

TEST_CASE("odometer points reduce residues and translate") {
    const auto b = make_bset({2, 3});
    const auto w = OdometerPoint::over(b, {-1, 7});
    CHECK(w.residues() == std::vector<std::uint64_t>{1, 1});
    CHECK(w.translated(1).residues() == std::vector<std::uint64_t>{0, 2});
    CHECK(w.translated(-7).residues() == std::vector<std::uint64_t>{0, 0});
    CHECK(kind_of([&] { OdometerPoint::over(b, {1}); }) == "LengthMismatch");
}

TEST_CASE("cylinder spec splits ones and zeros") {
    CylinderSpec c;
    c.entries = {{-2, true}, {0, false}, {5, true}};
    CHECK(c.ones() == std::vector<std::int64_t>{-2, 5});
    CHECK(c.zeros() == std::vector<std::int64_t>{0});
}

TEST_CASE("rational strings") {
    CHECK(rational_to_string(Rational(2, 6)) == "1/3");
    CHECK(rational_to_string(Rational(3)) == "3/1");
    CHECK(parse_rational("16/25") == Rational(16, 25));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(kind_of([] { parse_rational("1/0"); }) == "BadRational");
    CHECK(kind_of([] { parse_rational("x"); }) == "BadRational");
}
