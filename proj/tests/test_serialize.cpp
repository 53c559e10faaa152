#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "bfree/error.hpp"
#include "bfree/serialize.hpp"

using namespace bfree;

TEST_CASE("BSet JSON round trip") {
    for (const auto& b : {make_bset({2, 3}), make_bset({4, 9, 25}), squarefree_family(6)}) {
        const auto j = to_json(b);
        const auto back = bset_from_json(nlohmann::json::parse(j.dump()));
        CHECK(std::vector<std::uint64_t>(back.moduli().begin(), back.moduli().end()) ==
              std::vector<std::uint64_t>(b.moduli().begin(), b.moduli().end()));
        CHECK(back.tail_bound() == b.tail_bound());
    }
    const auto j = to_json(squarefree_family(2));
    CHECK(j.at("moduli") == nlohmann::json({4, 9}));
    CHECK(j.at("tail_bound") == "1/3");
}

TEST_CASE("word JSON round trip") {
    std::mt19937_64 gen(1);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = gen() % 200;
        BinaryWord w(static_cast<std::int64_t>(gen() % 100) - 50, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (gen() % 2) w.set(i);
        }
        CHECK(word_from_json(nlohmann::json::parse(to_json(w).dump())) == w);
    }
    CHECK(to_json(BinaryWord::from_string("0110", -2)) == nlohmann::json({{"offset", -2}, {"bits", "0110"}}));
}

TEST_CASE("packed round trip") {
    const auto w = BinaryWord::from_string("1011000111010", 7);
    std::stringstream ss;
    write_packed(ss, w);
    CHECK(ss.str().size() == 2);
    CHECK(static_cast<unsigned char>(ss.str()[0]) == 0b10001101);
    CHECK(read_packed(ss, 13, 7) == w);
}

TEST_CASE("spectrum and entropy documents") {
    SpectrumProfile prof = {{9, 3, {0, 3, 6}, 3}};
    CHECK(to_json(prof) ==
          nlohmann::json::parse(R"([{"b":9,"s":3,"missing":[0,3,6],"b_prime":3}])"));
    const auto e = to_json(htop_bfree(make_bset({2, 3})));
    CHECK(e.at("exact") == "1/3");
    CHECK(e.at("unit") == "bits");
    CHECK(e.at("bits").get<double>() == doctest::Approx(1.0 / 3));
    CHECK(to_json(h_product_type(make_bset({2, 3}), Rational(1, 4))).at("exact").is_null());
}

TEST_CASE("coding document and hex") {
    const auto j = to_json(RotationCoding::golden_mean());
    CHECK(j.at("alpha_fixed") == "9e3779b97f4a7c15f39cc0605cedc834");
    CHECK(j.at("interval") == nlohmann::json({0.0, 0.5}));
    CHECK(j.at("alpha_cf").at(0) == 1);
    const Fixed128 x = (static_cast<Fixed128>(0x0123456789abcdefULL) << 64) | 0xfedcba9876543210ULL;
    CHECK(fixed_to_hex(x) == "0123456789abcdeffedcba9876543210");
    CHECK(fixed_from_hex(fixed_to_hex(x)) == x);
}

TEST_CASE("batch metadata and CSV") {
    const auto batch = sample_mirsky(make_bset({2, 3}), 0, 6, 3, 9);
    const auto meta = batch_metadata(batch);
    CHECK(meta.at("seed") == 9);
    CHECK(meta.at("generator") == "splitmix64-counter-v1");
    CHECK(meta.at("count") == 3);
    std::ostringstream os;
    write_csv(os, batch);
    std::istringstream lines(os.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "offset,bits");
    int rows = 0;
    while (std::getline(lines, line)) {
        CHECK(line.rfind("0,", 0) == 0);
        CHECK(line.size() == 8);
        ++rows;
    }
    CHECK(rows == 3);
}
