#include "bfree/serialize.hpp"

#include <istream>
#include <iterator>
#include <ostream>
#include <vector>

#include "bfree/error.hpp"

namespace bfree {

using nlohmann::json;

json to_json(const BSet& bset) {
    return {{"moduli", bset.moduli()}, {"tail_bound", rational_to_string(bset.tail_bound())}};
}

BSet bset_from_json(const json& j) {
    try {
        auto moduli = j.at("moduli").get<std::vector<std::uint64_t>>();
        Rational tail = 0;
        if (j.contains("tail_bound")) tail = parse_rational(j.at("tail_bound").get<std::string>());
        return validate_bset(moduli, tail);
    } catch (const json::exception& e) {
        fail("BadJson", e.what());
    }
}

json to_json(const BinaryWord& word) {
    return {{"offset", word.offset()}, {"bits", word.to_string()}};
}

BinaryWord word_from_json(const json& j) {
    try {
        return BinaryWord::from_string(j.at("bits").get<std::string>(),
                                       j.value("offset", std::int64_t{0}));
    } catch (const json::exception& e) {
        fail("BadJson", e.what());
    }
}

json to_json(const SpectrumProfile& profile) {
    json arr = json::array();
    for (const auto& rec : profile) {
        arr.push_back({{"b", rec.modulus}, {"s", rec.s}, {"missing", rec.missing}, {"b_prime", rec.b_prime}});
    }
    return arr;
}

json to_json(const EntropyReport& report) {
    json j;
    j["bits"] = report.bits;
    j["exact"] = report.exact ? json(rational_to_string(*report.exact)) : json(nullptr);
    j["formula"] = report.formula;
    j["unit"] = "bits";
    json inputs = json::object();
    for (const auto& [k, v] : report.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    j["truncation_note"] = report.truncation_note.empty() ? json(nullptr) : json(report.truncation_note);
    return j;
}

std::string fixed_to_hex(Fixed128 x) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s(32, '0');
    for (int i = 31; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[static_cast<unsigned>(x & 0xf)];
        x >>= 4;
    }
    return s;
}

Fixed128 fixed_from_hex(const std::string& hex) {
    if (hex.empty() || hex.size() > 32) fail("BadHex", "fixed-point hex must have 1..32 digits");
    Fixed128 x = 0;
    for (char c : hex) {
        unsigned v = 0;
        if (c >= '0' && c <= '9') {
            v = static_cast<unsigned>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            v = static_cast<unsigned>(c - 'a' + 10);
        } else if (c >= 'A' && c <= 'F') {
            v = static_cast<unsigned>(c - 'A' + 10);
        } else {
            fail("BadHex", "invalid hex digit");
        }
        x = (x << 4) | v;
    }
    return x;
}

json to_json(const RotationCoding& coding) {
    return {{"alpha_cf", coding.continued_fraction(20)},
            {"alpha_fixed", fixed_to_hex(coding.alpha_fixed())},
            {"y", fixed_to_hex(coding.y_fixed())},
            {"interval", {coding.arc().lower(), coding.arc().upper()}}};
}

json batch_metadata(const SampleBatch& batch) {
    return {{"schema", kSchemaVersion},
            {"spec", batch.descriptor},
            {"seed", batch.seed},
            {"generator", batch.generator},
            {"count", batch.words.size()}};
}

json to_json(const SampleBatch& batch) {
    json j = batch_metadata(batch);
    json words = json::array();
    for (const auto& w : batch.words) words.push_back(to_json(w));
    j["words"] = std::move(words);
    return j;
}

void write_csv(std::ostream& os, const SampleBatch& batch) {
    os << "offset,bits\n";
    for (const auto& w : batch.words) os << w.offset() << ',' << w.to_string() << '\n';
}

void write_packed(std::ostream& os, const BinaryWord& word) {
    const auto bytes = word.to_packed_bytes();
    os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

BinaryWord read_packed(std::istream& is, std::size_t length, std::int64_t offset) {
    std::vector<std::uint8_t> bytes((length + 7) / 8);
    is.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (static_cast<std::size_t>(is.gcount()) != bytes.size()) fail("BadWord", "truncated packed word");
    return BinaryWord::from_packed_bytes(bytes, length, offset);
}

}  // namespace bfree
