#pragma once
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lblk/ciphers.hpp"

namespace lblk {

// Encrypted-file container: a 10-byte header followed by the ciphertext
// block. One file is one wide block.
//
//   bytes 0..3  magic "LBLK"
//   byte  4     version, currently 1
//   byte  5     scheme id (1=BEAR 2=LION 3=LIONESS 4=BEAR2 5=LION2)
//   bytes 6..9  left-half width in bits, big-endian (256 for version 1)
struct FileHeader {
    static constexpr std::array<std::uint8_t, 4> kMagic{'L', 'B', 'L', 'K'};
    static constexpr std::size_t kBytes = 10;

    std::uint8_t version = 1;
    SchemeId scheme = SchemeId::lion;
    std::uint32_t l_bits = 256;

    std::array<std::uint8_t, kBytes> encode() const;
    static FileHeader decode(std::span<const std::uint8_t> bytes);
};

constexpr std::size_t kProdLeftBits = 256;
constexpr std::size_t kProdKeyHalfBits = 512; // BEAR-family hash keys, k > l

// Exact key-file length in bytes: the concatenated subkeys at production
// widths (l = 256, k = 512).
std::size_t prod_key_bytes(SchemeId id);

// Production scheme for a message of the given bit length (r = bits - 256).
Scheme production_scheme(SchemeId id, std::size_t message_bits);

// header || ciphertext. The message must be longer than 64 bytes so the
// right half stays wider than the left.
std::vector<std::uint8_t> encrypt_file_bytes(SchemeId id, std::span<const std::uint8_t> key,
                                             std::span<const std::uint8_t> plain);
std::vector<std::uint8_t> decrypt_file_bytes(SchemeId id, std::span<const std::uint8_t> key,
                                             std::span<const std::uint8_t> file);

} // namespace lblk
