#pragma once
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lblk/errors.hpp"

namespace lblk {

// Arbitrary-length bit vector. Bit index 0 is the least-significant bit of
// byte 0 in serialized form; integers convert little-endian (bit i of the
// value becomes bit i of the string). Values up to 64 bits live entirely in
// an inline word, so desk-scale arithmetic never touches the heap.
class BitStr {
public:
    BitStr() = default;

    static BitStr zeros(std::size_t nbits);
    // Takes the low n bits of v, n <= 64.
    static BitStr from_uint(std::uint64_t v, std::size_t nbits);
    // nbits <= 8 * bytes.size(); bits beyond nbits are ignored.
    static BitStr from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits);
    static BitStr from_hex(const std::string& hex, std::size_t nbits);

    std::size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool bit(std::size_t i) const {
        return (word(i >> 6) >> (i & 63)) & 1u;
    }
    void set_bit(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        set_word(i >> 6, v ? (word(i >> 6) | m) : (word(i >> 6) & ~m));
    }

    // Reads count <= 64 bits starting at pos; positions past the end read 0.
    std::uint64_t bits_at(std::size_t pos, std::size_t count) const;

    // Whole value as an integer; requires size() <= 64.
    std::uint64_t to_uint() const;

    // ceil(size/8) bytes, unused high bits of the last byte are zero.
    std::vector<std::uint8_t> to_bytes() const;
    // Lowercase hex of the serialized bytes, byte 0 first.
    std::string to_hex() const;

    BitStr& operator^=(const BitStr& o);
    friend BitStr operator^(BitStr a, const BitStr& b) { a ^= b; return a; }

    // len bits starting at pos; pos + len must stay in range.
    BitStr slice(std::size_t pos, std::size_t len) const;
    BitStr prefix(std::size_t len) const { return slice(0, len); }

    friend BitStr concat(const BitStr& a, const BitStr& b);

    bool operator==(const BitStr& o) const;
    // Orders by length, then by numeric value of the little-endian encoding.
    std::strong_ordering operator<=>(const BitStr& o) const;

    std::size_t hash() const;

private:
    std::size_t word_count() const { return (nbits_ + 63) >> 6; }
    std::uint64_t word(std::size_t i) const { return i == 0 ? w0_ : rest_[i - 1]; }
    void set_word(std::size_t i, std::uint64_t v) {
        if (i == 0) w0_ = v; else rest_[i - 1] = v;
    }
    void resize_words(std::size_t nbits);
    void mask_tail();

    std::size_t nbits_ = 0;
    std::uint64_t w0_ = 0;
    std::vector<std::uint64_t> rest_;
};

struct BitStrHash {
    std::size_t operator()(const BitStr& b) const { return b.hash(); }
};

// (first l bits, remaining bits); requires m.size() > l so neither half of a
// block can be empty.
std::pair<BitStr, BitStr> split(const BitStr& m, std::size_t l);

} // namespace lblk
