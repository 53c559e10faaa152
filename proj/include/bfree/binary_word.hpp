#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bfree {

/// A finite 0/1 block anchored at an integer offset: bit i sits at
/// coordinate offset + i.
///
/// Bits are packed into 64-bit limbs, bit i in limb i / 64 at position
/// i % 64. Bits past size() are kept zero so limb-level popcounts are exact.
class BinaryWord {
public:
    BinaryWord() = default;
    BinaryWord(std::int64_t offset, std::size_t length, bool fill = false);

    /// Parses an ASCII 0/1 string; throws Error("BadWord") on other characters.
    static BinaryWord from_string(std::string_view bits, std::int64_t offset = 0);
    /// Little-endian bit order within bytes, length bits total.
    static BinaryWord from_packed_bytes(std::span<const std::uint8_t> bytes, std::size_t length,
                                        std::int64_t offset = 0);

    std::int64_t offset() const noexcept { return offset_; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool operator[](std::size_t i) const noexcept { return (limbs_[i >> 6] >> (i & 63)) & 1u; }
    /// Bit at absolute coordinate n; coordinates outside the window read as 0.
    bool at(std::int64_t n) const noexcept;

    void set(std::size_t i, bool value = true) noexcept {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (value) {
            limbs_[i >> 6] |= bit;
        } else {
            limbs_[i >> 6] &= ~bit;
        }
    }
    void reset(std::size_t i) noexcept { set(i, false); }

    std::size_t count_ones() const noexcept;
    /// Absolute coordinates of the ones, ascending.
    std::vector<std::int64_t> support() const;

    BinaryWord shifted(std::int64_t t) const;
    BinaryWord with_offset(std::int64_t offset) const;
    /// Sub-word of bits [begin, begin + length), offset moved accordingly.
    BinaryWord slice(std::size_t begin, std::size_t length) const;
    /// Up to 64 bits starting at index i, first bit in the least significant position.
    std::uint64_t extract(std::size_t i, std::size_t n) const noexcept;

    /// Coordinatewise w <= other; both words must have equal length.
    bool dominated_by(const BinaryWord& other) const;

    std::string to_string() const;
    std::vector<std::uint8_t> to_packed_bytes() const;

    std::span<const std::uint64_t> limbs() const noexcept { return limbs_; }
    std::span<std::uint64_t> limbs() noexcept { return limbs_; }

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

private:
    void clear_tail() noexcept;

    std::int64_t offset_ = 0;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> limbs_;
};

/// Concatenation keeping the offset of the first word.
BinaryWord concat(const BinaryWord& head, const BinaryWord& tail);

}  // namespace bfree
