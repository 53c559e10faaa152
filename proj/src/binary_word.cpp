#include "bfree/binary_word.hpp"

#include <bit>

#include "bfree/error.hpp"

namespace bfree {

namespace {
std::size_t limb_count(std::size_t bits) { return (bits + 63) / 64; }
}  // namespace

BinaryWord::BinaryWord(std::int64_t offset, std::size_t length, bool fill)
    : offset_(offset), size_(length), limbs_(limb_count(length), fill ? ~std::uint64_t{0} : 0) {
    clear_tail();
}

BinaryWord BinaryWord::from_string(std::string_view bits, std::int64_t offset) {
    BinaryWord w(offset, bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            w.set(i);
        } else if (bits[i] != '0') {
            fail("BadWord", "word contains a character other than 0/1");
        }
    }
    return w;
}

BinaryWord BinaryWord::from_packed_bytes(std::span<const std::uint8_t> bytes, std::size_t length,
                                         std::int64_t offset) {
    if (bytes.size() * 8 < length) fail("BadWord", "packed buffer shorter than declared length");
    BinaryWord w(offset, length);
    for (std::size_t i = 0; i < length; ++i) {
        if ((bytes[i >> 3] >> (i & 7)) & 1u) w.set(i);
    }
    return w;
}

bool BinaryWord::at(std::int64_t n) const noexcept {
    if (n < offset_) return false;
    const auto i = static_cast<std::uint64_t>(n - offset_);
    if (i >= size_) return false;
    return (*this)[i];
}

std::size_t BinaryWord::count_ones() const noexcept {
    std::size_t total = 0;
    for (auto limb : limbs_) total += static_cast<std::size_t>(std::popcount(limb));
    return total;
}

std::vector<std::int64_t> BinaryWord::support() const {
    std::vector<std::int64_t> out;
    out.reserve(count_ones());
    for (std::size_t l = 0; l < limbs_.size(); ++l) {
        std::uint64_t limb = limbs_[l];
        while (limb != 0) {
            const int b = std::countr_zero(limb);
            out.push_back(offset_ + static_cast<std::int64_t>(l * 64 + static_cast<std::size_t>(b)));
            limb &= limb - 1;
        }
    }
    return out;
}

BinaryWord BinaryWord::shifted(std::int64_t t) const { return with_offset(offset_ + t); }

BinaryWord BinaryWord::with_offset(std::int64_t offset) const {
    BinaryWord w = *this;
    w.offset_ = offset;
    return w;
}

BinaryWord BinaryWord::slice(std::size_t begin, std::size_t length) const {
    if (begin + length > size_) fail("OutOfRange", "slice exceeds word length");
    BinaryWord w(offset_ + static_cast<std::int64_t>(begin), length);
    if ((begin & 63) == 0) {
        for (std::size_t l = 0; l < w.limbs_.size(); ++l) w.limbs_[l] = limbs_[(begin >> 6) + l];
        w.clear_tail();
        return w;
    }
    for (std::size_t i = 0; i < length; i += 64) {
        const std::size_t n = std::min<std::size_t>(64, length - i);
        w.limbs_[i >> 6] = extract(begin + i, n);
    }
    return w;
}

std::uint64_t BinaryWord::extract(std::size_t i, std::size_t n) const noexcept {
    if (n == 0) return 0;
    const std::size_t limb = i >> 6;
    const std::size_t shift = i & 63;
    std::uint64_t v = limbs_[limb] >> shift;
    if (shift != 0 && limb + 1 < limbs_.size()) v |= limbs_[limb + 1] << (64 - shift);
    if (n < 64) v &= (std::uint64_t{1} << n) - 1;
    return v;
}

bool BinaryWord::dominated_by(const BinaryWord& other) const {
    if (size_ != other.size_) fail("LengthMismatch", "domination requires equal lengths");
    for (std::size_t l = 0; l < limbs_.size(); ++l) {
        if ((limbs_[l] & ~other.limbs_[l]) != 0) return false;
    }
    return true;
}

std::string BinaryWord::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if ((*this)[i]) s[i] = '1';
    }
    return s;
}

std::vector<std::uint8_t> BinaryWord::to_packed_bytes() const {
    std::vector<std::uint8_t> out((size_ + 7) / 8, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>(limbs_[i >> 3] >> (8 * (i & 7)));
    }
    return out;
}

void BinaryWord::clear_tail() noexcept {
    if (size_ & 63) limbs_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
}

BinaryWord concat(const BinaryWord& head, const BinaryWord& tail) {
    BinaryWord w(head.offset(), head.size() + tail.size());
    for (std::size_t i = 0; i < head.size(); ++i) {
        if (head[i]) w.set(i);
    }
    for (std::size_t i = 0; i < tail.size(); ++i) {
        if (tail[i]) w.set(head.size() + i);
    }
    return w;
}

}  // namespace bfree
