#include "lblk/bitstr.hpp"

namespace lblk {

namespace {
constexpr std::uint64_t kAllOnes = ~std::uint64_t{0};
} // namespace

void BitStr::resize_words(std::size_t nbits) {
    nbits_ = nbits;
    const std::size_t words = word_count();
    rest_.assign(words > 1 ? words - 1 : 0, 0);
    w0_ = 0;
}

void BitStr::mask_tail() {
    const std::size_t tail = nbits_ & 63;
    if (nbits_ != 0 && tail != 0)
        set_word(word_count() - 1, word(word_count() - 1) & (kAllOnes >> (64 - tail)));
}

BitStr BitStr::zeros(std::size_t nbits) {
    BitStr b;
    b.resize_words(nbits);
    return b;
}

BitStr BitStr::from_uint(std::uint64_t v, std::size_t nbits) {
    if (nbits > 64)
        throw dimension_error("from_uint: width " + std::to_string(nbits) + " exceeds 64 bits");
    BitStr b = zeros(nbits);
    if (nbits != 0)
        b.w0_ = v & (kAllOnes >> (64 - nbits));
    return b;
}

BitStr BitStr::from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits) {
    if (nbits > bytes.size() * 8)
        throw dimension_error("from_bytes: " + std::to_string(nbits) + " bits need more than " +
                              std::to_string(bytes.size()) + " bytes");
    BitStr b = zeros(nbits);
    const std::size_t nbytes = (nbits + 7) / 8;
    for (std::size_t i = 0; i < nbytes; ++i)
        b.set_word(i >> 3, b.word(i >> 3) | (std::uint64_t{bytes[i]} << ((i & 7) * 8)));
    b.mask_tail();
    return b;
}

BitStr BitStr::from_hex(const std::string& hex, std::size_t nbits) {
    if (hex.size() % 2 != 0)
        throw format_error("from_hex: odd digit count");
    std::vector<std::uint8_t> bytes(hex.size() / 2);
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw format_error("from_hex: bad digit");
    };
    for (std::size_t i = 0; i < bytes.size(); ++i)
        bytes[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
    return from_bytes(bytes, nbits);
}

std::uint64_t BitStr::bits_at(std::size_t pos, std::size_t count) const {
    if (count == 0) return 0;
    if (count > 64)
        throw dimension_error("bits_at: count exceeds 64");
    const std::size_t words = word_count();
    const std::size_t w = pos >> 6;
    const std::size_t s = pos & 63;
    std::uint64_t v = w < words ? word(w) >> s : 0;
    if (s != 0 && w + 1 < words)
        v |= word(w + 1) << (64 - s);
    if (count < 64)
        v &= kAllOnes >> (64 - count);
    return v;
}

std::uint64_t BitStr::to_uint() const {
    if (nbits_ > 64)
        throw dimension_error("to_uint: value is " + std::to_string(nbits_) + " bits wide");
    return w0_;
}

std::vector<std::uint8_t> BitStr::to_bytes() const {
    std::vector<std::uint8_t> out((nbits_ + 7) / 8);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>(word(i >> 3) >> ((i & 7) * 8));
    return out;
}

std::string BitStr::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    const auto bytes = to_bytes();
    s.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xF]);
    }
    return s;
}

BitStr& BitStr::operator^=(const BitStr& o) {
    if (nbits_ != o.nbits_)
        throw dimension_error("xor: length mismatch (" + std::to_string(nbits_) + " vs " +
                              std::to_string(o.nbits_) + ")");
    w0_ ^= o.w0_;
    for (std::size_t i = 0; i < rest_.size(); ++i)
        rest_[i] ^= o.rest_[i];
    return *this;
}

BitStr BitStr::slice(std::size_t pos, std::size_t len) const {
    if (pos + len > nbits_)
        throw dimension_error("slice: range " + std::to_string(pos) + "+" + std::to_string(len) +
                              " exceeds " + std::to_string(nbits_) + " bits");
    BitStr out = zeros(len);
    const std::size_t words = out.word_count();
    for (std::size_t j = 0; j < words; ++j)
        out.set_word(j, bits_at(pos + (j << 6), 64));
    out.mask_tail();
    return out;
}

BitStr concat(const BitStr& a, const BitStr& b) {
    BitStr out = BitStr::zeros(a.nbits_ + b.nbits_);
    for (std::size_t j = 0; j < a.word_count(); ++j)
        out.set_word(j, a.word(j));
    const std::size_t base = a.nbits_ >> 6;
    const std::size_t s = a.nbits_ & 63;
    for (std::size_t j = 0; j < b.word_count(); ++j) {
        out.set_word(base + j, out.word(base + j) | (b.word(j) << s));
        if (s != 0 && base + j + 1 < out.word_count())
            out.set_word(base + j + 1, out.word(base + j + 1) | (b.word(j) >> (64 - s)));
    }
    return out;
}

bool BitStr::operator==(const BitStr& o) const {
    if (nbits_ != o.nbits_ || w0_ != o.w0_) return false;
    return rest_ == o.rest_;
}

std::strong_ordering BitStr::operator<=>(const BitStr& o) const {
    if (auto c = nbits_ <=> o.nbits_; c != 0) return c;
    for (std::size_t i = word_count(); i-- > 0;)
        if (auto c = word(i) <=> o.word(i); c != 0) return c;
    return std::strong_ordering::equal;
}

std::size_t BitStr::hash() const {
    // FNV-1a over the words plus the length.
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t v) {
        h = (h ^ v) * 1099511628211ull;
    };
    mix(nbits_);
    for (std::size_t i = 0; i < word_count(); ++i)
        mix(word(i));
    return static_cast<std::size_t>(h);
}

std::pair<BitStr, BitStr> split(const BitStr& m, std::size_t l) {
    if (m.size() <= l)
        throw dimension_error("split: need more than " + std::to_string(l) + " bits, have " +
                              std::to_string(m.size()));
    return {m.slice(0, l), m.slice(l, m.size() - l)};
}

} // namespace lblk
