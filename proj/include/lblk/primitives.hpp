#pragma once
#include <memory>
#include <string>

#include "lblk/bitstr.hpp"

namespace lblk {

// Deterministic keystream expansion from a short seed. The output length is
// a call argument so one instance serves every r (and makes prefix tests
// possible); seed width is fixed per instance.
class StreamCipher {
public:
    virtual ~StreamCipher() = default;
    virtual std::size_t seed_bits() const = 0;
    virtual BitStr keystream(const BitStr& seed, std::size_t out_bits) const = 0;
    virtual std::string name() const = 0;
};

// Keyed hash H_K(M) = H'(f(K, M)) with f injective for fixed key width.
class KeyedHash {
public:
    virtual ~KeyedHash() = default;
    virtual std::size_t key_bits() const = 0;
    virtual std::size_t out_bits() const = 0;
    virtual BitStr digest(const BitStr& key, const BitStr& msg) const = 0;
    virtual std::string name() const = 0;
};

class UnkeyedHash {
public:
    virtual ~UnkeyedHash() = default;
    virtual std::size_t out_bits() const = 0;
    virtual BitStr digest(const BitStr& msg) const = 0;
    virtual std::string name() const = 0;
};

// Desk-scale primitives (l <= 16).
//
// Stream: interpret the seed as y0, iterate y <- (5y + 1) mod 2^l and emit
// bit l-1 of each iterate. a = 5, c = 1 give the recurrence full period mod
// 2^l; the emitted bit is the high one because the low bits of such a
// recurrence have short periods.
//
// Hash: fold l-bit chunks (zero-padded) through h <- ((h ^ chunk)*5 + 3)
// mod 2^l starting from 0, then finalize h <- (5h + 3) mod 2^l. The keyed
// form digests concat(key, msg); fixed-width concatenation is injective.
std::shared_ptr<const StreamCipher> toy_stream(std::size_t l);
std::shared_ptr<const UnkeyedHash> toy_hash(std::size_t l);
std::shared_ptr<const KeyedHash> toy_keyed_hash(std::size_t l, std::size_t k);

// Degenerate all-zero primitives; with these every scheme is the identity
// map, which pins down the XOR wiring in tests.
std::shared_ptr<const StreamCipher> stub_stream(std::size_t l);
std::shared_ptr<const UnkeyedHash> stub_hash(std::size_t l);
std::shared_ptr<const KeyedHash> stub_keyed_hash(std::size_t l, std::size_t k);

// digest(K, M) = first l bits of K; surjective in the key for every message.
std::shared_ptr<const KeyedHash> key_echo_hash(std::size_t l, std::size_t k);

// Production primitives over SHA-256 (l = 256).
//
// Stream: block i = SHA-256(seed bytes || i as big-endian 64-bit counter),
// blocks concatenated and truncated to the requested length, so shorter
// outputs are prefixes of longer ones.
//
// Keyed hash: SHA-256(key bytes || message bytes); key-prepend only.
constexpr std::size_t kProdHashBits = 256;
std::shared_ptr<const StreamCipher> prod_stream();
std::shared_ptr<const KeyedHash> prod_keyed_hash(std::size_t k);
std::shared_ptr<const UnkeyedHash> prod_hash();

} // namespace lblk
