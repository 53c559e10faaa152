#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bfree/admissibility.hpp"
#include "bfree/binary_word.hpp"
#include "bfree/bset.hpp"
#include "bfree/entropy.hpp"
#include "bfree/measures.hpp"
#include "bfree/sturmian.hpp"

namespace bfree {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const BSet& bset);
BSet bset_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BinaryWord& word);
BinaryWord word_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SpectrumProfile& profile);
nlohmann::json to_json(const EntropyReport& report);
nlohmann::json to_json(const RotationCoding& coding);

/// Batch metadata: spec descriptor, seed, generator identifier.
nlohmann::json batch_metadata(const SampleBatch& batch);
nlohmann::json to_json(const SampleBatch& batch);
/// One word per row as an ASCII 0/1 string, preceded by an "offset,bits" header.
void write_csv(std::ostream& os, const SampleBatch& batch);

/// Raw dump: bit i of the word is bit (i % 8) of byte i / 8.
void write_packed(std::ostream& os, const BinaryWord& word);
BinaryWord read_packed(std::istream& is, std::size_t length, std::int64_t offset = 0);

std::string fixed_to_hex(Fixed128 x);
Fixed128 fixed_from_hex(const std::string& hex);

}  // namespace bfree
