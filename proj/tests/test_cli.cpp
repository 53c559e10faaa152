#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bfree/cli.hpp"

#ifndef BFREE_GOLDEN_DIR
#error "BFREE_GOLDEN_DIR must point at tests/golden"
#endif

namespace {
struct Case {
    std::string name;
    int code = 0;
    std::vector<std::string> args;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<Case> load_cases() {
    std::ifstream in(std::filesystem::path(BFREE_GOLDEN_DIR) / "cases.txt");
    std::vector<Case> cases;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string name, code, args;
        std::getline(fields, name, '|');
        std::getline(fields, code, '|');
        std::getline(fields, args);
        Case c{trim(name), std::stoi(trim(code)), {}};
        std::istringstream words(args);
        for (std::string w; words >> w;) c.args.push_back(w);
        cases.push_back(std::move(c));
    }
    return cases;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(const std::vector<std::string>& args, std::string& out, std::string& err) {
    std::ostringstream o, e;
    const int code = bfree::cli::run(args, o, e);
    out = o.str();
    err = e.str();
    return code;
}
}  // namespace

TEST_CASE("every subcommand reproduces its golden output") {
    const auto cases = load_cases();
    REQUIRE(cases.size() > 30);
    for (const auto& c : cases) {
        CAPTURE(c.name);
        std::string out, err;
        const int code = run(c.args, out, err);
        CHECK(code == c.code);
        const auto expected = slurp(std::filesystem::path(BFREE_GOLDEN_DIR) / (c.name + ".out"));
        CHECK((c.code == 0 ? out : err) == expected);
    }
}

TEST_CASE("every subcommand is covered by a golden case") {
    std::set<std::string> covered;
    for (const auto& c : load_cases()) covered.insert(c.args.front());
    for (const char* sub : {"eta", "phi", "admissible", "complexity", "entropy", "mirsky", "sample", "spectrum",
                            "theta", "include", "witness", "construct-admissible", "density", "sturmian",
                            "counterexample", "transitive", "squeeze", "embed"}) {
        CHECK(covered.count(sub) == 1);
    }
}

TEST_CASE("output documents carry the schema version") {
    std::string out, err;
    REQUIRE(run({"entropy", "--formula", "bfree", "--bset", "2,3"}, out, err) == 0);
    const auto j = nlohmann::json::parse(out);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("exact") == "1/3");
    CHECK(j.at("unit") == "bits");
}

TEST_CASE("randomized commands are deterministic in the seed") {
    std::string a, b, c, err;
    const std::vector<std::string> base = {"sample", "--measure", "mme", "--bset", "4,9,25",
                                           "--window", "0:64", "--count", "20"};
    auto with_seed = [&](const std::string& seed) {
        auto v = base;
        v.insert(v.end(), {"--seed", seed});
        return v;
    };
    REQUIRE(run(with_seed("5"), a, err) == 0);
    REQUIRE(run(with_seed("5"), b, err) == 0);
    REQUIRE(run(with_seed("6"), c, err) == 0);
    CHECK(a == b);
    CHECK(a != c);
    const auto j = nlohmann::json::parse(a);
    CHECK(j.at("seed") == 5);
    CHECK(j.at("generator") == "splitmix64-counter-v1");
}

TEST_CASE("--out writes the document to a file") {
    const auto path = std::filesystem::temp_directory_path() / "bfree_cli_out_test.json";
    std::filesystem::remove(path);
    std::string out, err;
    REQUIRE(run({"eta", "--bset", "2,3", "--window", "0:6", "--out", path.string()}, out, err) == 0);
    CHECK(out.empty());
    CHECK(nlohmann::json::parse(slurp(path)).at("bits") == "010001");
    std::filesystem::remove(path);
}

TEST_CASE("domain errors are JSON objects on stderr") {
    std::string out, err;
    CHECK(run({"squeeze", "--x", "110", "--z", "000"}, out, err) == 1);
    const auto j = nlohmann::json::parse(err);
    CHECK(j.at("error").at("kind") == "EmptySupport");
    CHECK(out.empty());
}

TEST_CASE("usage errors exit 2") {
    std::string out, err;
    CHECK(run({}, out, err) == 2);
    CHECK(run({"nonsense"}, out, err) == 2);
    CHECK(run({"eta", "--bset", "2,3", "--window", "6"}, out, err) == 2);
    CHECK(run({"sample", "--measure", "uniform", "--bset", "2", "--window", "0:4"}, out, err) == 2);
}
