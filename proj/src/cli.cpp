#include "bfree/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfree/admissibility.hpp"
#include "bfree/entropy.hpp"
#include "bfree/error.hpp"
#include "bfree/inclusion.hpp"
#include "bfree/measures.hpp"
#include "bfree/rng.hpp"
#include "bfree/serialize.hpp"
#include "bfree/sieve.hpp"
#include "bfree/sturmian.hpp"

namespace bfree::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    return parts;
}

std::vector<std::int64_t> parse_ints(const std::string& text) {
    std::vector<std::int64_t> out;
    if (text.empty()) return out;
    for (const auto& p : split(text, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(p, &used));
            if (used != p.size()) throw std::invalid_argument(p);
        } catch (const std::logic_error&) {
            fail("BadArgument", "not an integer list: '" + text + "'");
        }
    }
    return out;
}

std::vector<std::uint64_t> parse_moduli(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (auto v : parse_ints(text)) {
        if (v < 0) fail("ModulusTooSmall", "moduli must be positive");
        out.push_back(static_cast<std::uint64_t>(v));
    }
    return out;
}

BSet parse_bset(const std::string& text) { return make_bset(parse_moduli(text)); }

std::pair<std::int64_t, std::int64_t> parse_window(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) fail("BadWindow", "window must be LO:HI");
    const auto lo = parse_ints(parts[0]);
    const auto hi = parse_ints(parts[1]);
    if (lo.size() != 1 || hi.size() != 1) fail("BadWindow", "window must be LO:HI");
    return {lo[0], hi[0]};
}

// "0,2;0,3,6" -> one anchor set per modulus.
std::vector<std::vector<std::int64_t>> parse_anchors(const std::string& text) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& group : split(text, ';')) out.push_back(parse_ints(group));
    return out;
}

double parse_probability(const std::string& text) { return to_double(parse_rational(text)); }

struct Globals {
    std::string bset;
    std::string window;
    std::string format = "json";
    std::uint64_t seed = 42;
    std::string out;
};

struct Emitter {
    std::ostream& out;
    const Globals& globals;

    void json_doc(json j) const {
        if (j.is_object() && !j.contains("schema")) j["schema"] = kSchemaVersion;
        write(j.dump() + "\n");
    }
    void text(const std::string& s) const { write(s); }

    void write(const std::string& s) const {
        if (globals.out.empty()) {
            out << s;
            return;
        }
        std::ofstream f(globals.out, std::ios::binary);
        if (!f) fail("IoError", "cannot open output file " + globals.out);
        f << s;
    }
};

bool csv(const Globals& g) { return g.format == "csv"; }

std::string word_csv(const BinaryWord& w) {
    return "offset,bits\n" + std::to_string(w.offset()) + "," + w.to_string() + "\n";
}

void emit_word(const Emitter& em, const BinaryWord& w, json extra = json::object()) {
    if (csv(em.globals)) {
        em.text(word_csv(w));
        return;
    }
    json j = to_json(w);
    for (auto& [k, v] : extra.items()) j[k] = v;
    em.json_doc(std::move(j));
}

RotationCoding parse_coding(const std::string& alpha, double y, const std::string& interval) {
    const auto ends = split(interval, ',');
    if (ends.size() != 2) fail("BadArgument", "interval must be a,b");
    const Arc arc = Arc::from_endpoints(std::stod(ends[0]), std::stod(ends[1]));
    RotationCoding coding = alpha == "golden" ? RotationCoding::golden_mean(arc)
                                              : RotationCoding::from_double(std::stod(alpha), 0.0, arc);
    if (y != 0.0) coding = RotationCoding::from_fixed(coding.alpha_fixed(), fixed_from_double(y), arc);
    return coding;
}

json theta_to_json(const std::vector<ThetaResult>& results, const BSet& bset) {
    json arr = json::array();
    for (std::size_t k = 0; k < results.size(); ++k) {
        const char* kind = results[k].kind == ThetaResult::Kind::Unique      ? "unique"
                           : results[k].kind == ThetaResult::Kind::Ambiguous ? "ambiguous"
                                                                             : "none";
        arr.push_back({{"b", bset[k]}, {"kind", kind}, {"residues", results[k].residues}});
    }
    return arr;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computations on B-free and hereditary shift spaces", "bfree"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--bset", g.bset, "Comma-separated moduli, e.g. 4,9,25");
    app.add_option("--window", g.window, "Coordinate window LO:HI")
        ->check(CLI::Validator(
            [](std::string& text) -> std::string {
                try {
                    parse_window(text);
                } catch (const Error& e) {
                    return e.what();
                }
                return {};
            },
            "LO:HI"));
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", g.seed, "Seed for randomized commands");
    app.add_option("--out", g.out, "Write output to PATH instead of stdout");

    std::string word_bits, other_bits, omega_text, anchors_text, formula = "bfree", p_text = "1/2";
    std::string measure = "mirsky", ones_text, zeros_text, small_text, other_bset, alpha_text = "golden";
    std::string interval_text = "0,0.5", primes_text, binary_path;
    std::int64_t word_offset = 0, c_value = 1, r_value = 0;
    std::size_t n_value = 10, count = 1, n1 = 1, length = 64;
    std::uint64_t b_prime = 0, horizon = 0;
    double y_value = 0.0, h_value = 0.0;

    auto* eta = app.add_subcommand("eta", "Indicator of B-free integers over a window");
    eta->add_option("--binary", binary_path, "Also write the bit-packed window to PATH");

    auto* phi = app.add_subcommand("phi", "Coding phi(omega), or phi_{s,a} with --anchors");
    phi->add_option("--omega", omega_text, "Residues, comma-separated")->required();
    phi->add_option("--anchors", anchors_text, "Anchor sets per modulus, e.g. 0,2;0,3,6");

    auto* admissible = app.add_subcommand("admissible", "Admissibility of a word");
    admissible->add_option("--word", word_bits)->required();
    admissible->add_option("--offset", word_offset);

    auto* complexity = app.add_subcommand("complexity", "Exact block complexity p_1..p_n");
    complexity->add_option("--n", n_value)->required();

    auto* entropy = app.add_subcommand("entropy", "Closed-form entropy");
    entropy->add_option("--formula", formula)
        ->check(CLI::IsMember({"bfree", "product", "generalized", "periodic"}));
    entropy->add_option("--p", p_text);
    entropy->add_option("--anchors", anchors_text);
    entropy->add_option("--block", word_bits);

    auto* mirsky = app.add_subcommand("mirsky", "Mirsky probability of a cylinder");
    mirsky->add_option("--ones", ones_text, "Positions fixed to 1");
    mirsky->add_option("--zeros", zeros_text, "Positions fixed to 0");

    auto* sample = app.add_subcommand("sample", "Sample windows from a measure");
    sample->add_option("--measure", measure)
        ->check(CLI::IsMember({"mirsky", "mme", "product", "generalized"}));
    auto* sample_p = sample->add_option("--p", p_text, "Bernoulli keep probability (product: default 1/2, generalized: default 1)");
    sample->add_option("--count", count);
    sample->add_option("--anchors", anchors_text);

    auto* spectrum = app.add_subcommand("spectrum", "Spectrum profile of a word");
    spectrum->add_option("--word", word_bits)->required();
    spectrum->add_option("--offset", word_offset);

    auto* theta = app.add_subcommand("theta", "Odometer coordinates compatible with a word");
    theta->add_option("--word", word_bits)->required();
    theta->add_option("--offset", word_offset);

    auto* include = app.add_subcommand("include", "Decide X_bset contained in X_other");
    include->add_option("--other", other_bset)->required();
    auto* witness = app.add_subcommand("witness", "Word admissible for --bset but not --other");
    witness->add_option("--other", other_bset)->required();

    auto* construct = app.add_subcommand("construct-admissible", "Admissible set hitting all residues mod b'");
    construct->add_option("--small", small_text);
    construct->add_option("--bprime", b_prime)->required();

    auto* density = app.add_subcommand("density", "Density of s with s*c + r B-free");
    density->add_option("--c", c_value);
    density->add_option("--r", r_value);
    density->add_option("--horizon", horizon)->required();

    auto* sturmian = app.add_subcommand("sturmian", "Rotation coding window and complexity");
    sturmian->add_option("--alpha", alpha_text, "'golden' or a decimal in (0,1)");
    sturmian->add_option("--y", y_value);
    sturmian->add_option("--interval", interval_text, "a,b");
    sturmian->add_option("--complexity", n_value, "Also report p_1..p_n");

    auto* counterexample = app.add_subcommand("counterexample", "Reproduce constructions");
    counterexample->require_subcommand(1);
    auto* two_mme = counterexample->add_subcommand("two-mme", "Two measures of maximal entropy");
    two_mme->add_option("--p", p_text);
    two_mme->add_option("--primes", primes_text, "Erasure primes for the one-minimal-subset variant");

    auto* transitive = app.add_subcommand("transitive", "Prefix of a transitive enlarging point");
    transitive->add_option("--h-bits", h_value, "Entropy in bits (default: that of --bset)");
    transitive->add_option("--n1", n1);
    transitive->add_option("--length", length);

    auto* squeeze_cmd = app.add_subcommand("squeeze", "Read x along supp(z)");
    squeeze_cmd->add_option("--x", word_bits)->required();
    squeeze_cmd->add_option("--z", other_bits)->required();
    squeeze_cmd->add_option("--offset", word_offset);
    auto* embed_cmd = app.add_subcommand("embed", "Place u along supp(z)");
    embed_cmd->add_option("--u", word_bits)->required();
    embed_cmd->add_option("--z", other_bits)->required();
    embed_cmd->add_option("--offset", word_offset);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    const Emitter em{out, g};
    auto need_bset = [&] {
        if (g.bset.empty()) fail("MissingArgument", "--bset is required");
        return parse_bset(g.bset);
    };
    auto need_window = [&] {
        if (g.window.empty()) fail("MissingArgument", "--window is required");
        return parse_window(g.window);
    };

    try {
        if (*eta) {
            const auto [lo, hi] = need_window();
            const auto w = eta_window(need_bset(), lo, hi);
            if (!binary_path.empty()) {
                std::ofstream f(binary_path, std::ios::binary);
                if (!f) fail("IoError", "cannot open " + binary_path);
                write_packed(f, w);
            }
            emit_word(em, w);
        } else if (*phi) {
            const auto bset = need_bset();
            const auto [lo, hi] = need_window();
            const auto residues = parse_ints(omega_text);
            if (anchors_text.empty()) {
                emit_word(em, phi_window(OdometerPoint::over(bset, residues), lo, hi));
            } else {
                const auto profile = make_sa_profile(bset, parse_anchors(anchors_text));
                // Accept omega mod b'_k; phi_sa_window also accepts mod b_k.
                const OdometerPoint omega(profile.reduced_moduli(), residues);
                emit_word(em, phi_sa_window(profile, omega, lo, hi),
                          {{"b_prime", profile.reduced_moduli()}});
            }
        } else if (*admissible) {
            const auto w = BinaryWord::from_string(word_bits, word_offset);
            em.json_doc({{"admissible", is_admissible(w, need_bset())}});
        } else if (*complexity) {
            const auto p = block_complexity(need_bset(), n_value);
            const auto h = entropy_from_complexity(p);
            if (csv(g)) {
                std::ostringstream os;
                os << "n,p_n,h_n\n" << std::setprecision(17);
                for (std::size_t n = 0; n < p.size(); ++n) os << n + 1 << ',' << p[n] << ',' << h[n] << '\n';
                em.text(os.str());
            } else {
                json ps = json::array();
                for (const auto& v : p) ps.push_back(v.str());
                em.json_doc({{"p", ps}, {"h", h}});
            }
        } else if (*entropy) {
            EntropyReport r;
            if (formula == "bfree") {
                r = htop_bfree(need_bset());
            } else if (formula == "product") {
                r = h_product_type(need_bset(), parse_rational(p_text));
            } else if (formula == "generalized") {
                r = htop_generalized(make_sa_profile(need_bset(), parse_anchors(anchors_text)));
            } else {
                r = htop_periodic_hereditary(BinaryWord::from_string(word_bits));
            }
            em.json_doc(to_json(r));
        } else if (*mirsky) {
            CylinderSpec spec;
            for (auto n : parse_ints(ones_text)) spec.entries[n] = true;
            for (auto n : parse_ints(zeros_text)) {
                if (spec.entries.count(n)) fail("BadArgument", "position fixed to both 0 and 1");
                spec.entries[n] = false;
            }
            const auto prob = mixed_cylinder(need_bset(), spec);
            em.json_doc({{"probability", rational_to_string(prob)}, {"float", to_double(prob)}});
        } else if (*sample) {
            const auto bset = need_bset();
            const auto [lo, hi] = need_window();
            SampleBatch batch;
            if (measure == "mirsky") {
                batch = sample_mirsky(bset, lo, hi, count, g.seed);
            } else if (measure == "mme") {
                batch = sample_product({bset, 0.5}, lo, hi, count, g.seed);
            } else if (measure == "product") {
                batch = sample_product({bset, parse_probability(p_text)}, lo, hi, count, g.seed);
            } else {
                const auto profile = make_sa_profile(bset, parse_anchors(anchors_text));
                batch = sample_generalized(profile, sample_p->count() ? parse_probability(p_text) : 1.0, lo, hi,
                                           count, g.seed);
            }
            if (csv(g)) {
                std::ostringstream os;
                os << "# " << batch_metadata(batch).dump() << '\n';
                write_csv(os, batch);
                em.text(os.str());
            } else {
                em.json_doc(to_json(batch));
            }
        } else if (*spectrum) {
            const auto w = BinaryWord::from_string(word_bits, word_offset);
            em.json_doc({{"profile", to_json(spectrum_profile(w, need_bset()))}});
        } else if (*theta) {
            const auto bset = need_bset();
            const auto w = BinaryWord::from_string(word_bits, word_offset);
            em.json_doc({{"theta", theta_to_json(theta_window(w, bset), bset)}});
        } else if (*include || *witness) {
            const auto a = need_bset();
            const auto b = parse_bset(other_bset);
            const auto found = inclusion_witness(a, b);
            json j = {{"witness", found ? to_json(*found) : json(nullptr)}};
            if (*include) {
                j["includes"] = includes(a, b);
                j["equal"] = equality(a, b);
            }
            em.json_doc(std::move(j));
        } else if (*construct) {
            const auto set = construct_admissible(parse_moduli(small_text), b_prime);
            em.json_doc({{"set", set}});
        } else if (*density) {
            const auto bset = need_bset();
            const auto d = density_estimate(bset, c_value, r_value, horizon);
            em.json_doc({{"density", rational_to_string(d)},
                         {"float", to_double(d)},
                         {"limit", rational_to_string(bset.free_density())}});
        } else if (*sturmian) {
            const auto coding = parse_coding(alpha_text, y_value, interval_text);
            json j = {{"coding", to_json(coding)}};
            if (!g.window.empty()) {
                const auto [lo, hi] = parse_window(g.window);
                j["window"] = to_json(sturmian_window(coding, lo, hi));
            }
            if (sturmian->count("--complexity")) j["complexity"] = rotation_complexity(coding, n_value);
            em.json_doc(std::move(j));
        } else if (*counterexample) {
            const auto [a, b] = two_mme_system();
            const auto p = parse_rational(p_text);
            json j;
            j["A"] = {{"block", a.block().to_string()},
                      {"entropy", to_json(htop_periodic_hereditary(a.block()))},
                      {"freq_A", rational_to_string(mme_block_frequency(a, a.block(), p))}};
            j["B"] = {{"block", b.block().to_string()},
                      {"entropy", to_json(htop_periodic_hereditary(b.block()))},
                      {"freq_A", rational_to_string(mme_block_frequency(b, a.block(), p))}};
            if (!primes_text.empty()) {
                const auto [lo, hi] = need_window();
                const auto primes = parse_moduli(primes_text);
                j["A"]["variant"] = to_json(minimal_subset_variant(a, primes, lo, hi));
                j["B"]["variant"] = to_json(minimal_subset_variant(b, primes, lo, hi));
            }
            em.json_doc(std::move(j));
        } else if (*transitive) {
            const auto bset = need_bset();
            const double h = h_value > 0 ? h_value : htop_bfree(bset).bits;
            const auto x = transitive_closure_point(
                [&](std::size_t n) { return admissible_blocks(bset, n); }, h, n1, length);
            emit_word(em, x, {{"L", static_cast<int>(std::ceil(1.0 / h - 1e-9))}});
        } else if (*squeeze_cmd) {
            const auto x = BinaryWord::from_string(word_bits, word_offset);
            const auto z = BinaryWord::from_string(other_bits, word_offset);
            emit_word(em, squeeze(x, z));
        } else if (*embed_cmd) {
            const auto u = BinaryWord::from_string(word_bits);
            const auto z = BinaryWord::from_string(other_bits, word_offset);
            emit_word(em, embed(u, z));
        }
    } catch (const Error& e) {
        err << json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << json{{"error", {{"kind", "BadArgument"}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace bfree::cli
