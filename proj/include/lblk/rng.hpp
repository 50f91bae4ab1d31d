#pragma once
#include <cstdint>

#include "lblk/bitstr.hpp"

namespace lblk {

// All experiment randomness flows from a single 64-bit seed through this
// splitmix64 recurrence (state += 0x9E3779B97F4A7C15, then two xor-multiply
// finalizing rounds). Generators are explicit values passed by reference,
// never global, so every transcript is reproducible from its seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
        for (;;) {
            const std::uint64_t v = next();
            if (v < limit || limit == 0) return v % bound;
        }
    }

private:
    std::uint64_t state_;
};

// Stateless mix of the same flavor, used to derive per-trial child seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// One generator draw per 64 bits; draw i fills bits [64*i, 64*i + 64).
inline BitStr random_bits(std::size_t nbits, Rng& rng) {
    if (nbits <= 64)
        return BitStr::from_uint(nbits == 0 ? 0 : rng.next(), nbits);
    std::vector<std::uint8_t> bytes((nbits + 7) / 8);
    for (std::size_t pos = 0; pos < bytes.size(); pos += 8) {
        const std::uint64_t w = rng.next();
        for (std::size_t b = 0; b < 8 && pos + b < bytes.size(); ++b)
            bytes[pos + b] = static_cast<std::uint8_t>(w >> (8 * b));
    }
    return BitStr::from_bytes(bytes, nbits);
}

} // namespace lblk
