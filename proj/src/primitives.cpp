#include "lblk/primitives.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstring>

#include "lblk/errors.hpp"

namespace lblk {

namespace {

void require_toy_width(std::size_t l, const char* who) {
    if (l == 0 || l > 16)
        throw dimension_error(std::string(who) + ": toy primitives need 1 <= l <= 16, got " +
                              std::to_string(l));
}

class ToyStream final : public StreamCipher {
public:
    explicit ToyStream(std::size_t l) : l_(l) { require_toy_width(l, "toy_stream"); }

    std::size_t seed_bits() const override { return l_; }

    BitStr keystream(const BitStr& seed, std::size_t out_bits) const override {
        if (seed.size() != l_)
            throw dimension_error("toy_stream: seed must be " + std::to_string(l_) + " bits, got " +
                                  std::to_string(seed.size()));
        const std::uint64_t mask = (std::uint64_t{1} << l_) - 1;
        std::uint64_t y = seed.to_uint();
        BitStr out = BitStr::zeros(out_bits);
        for (std::size_t i = 0; i < out_bits; ++i) {
            y = (5 * y + 1) & mask;
            if ((y >> (l_ - 1)) & 1)
                out.set_bit(i, true);
        }
        return out;
    }

    std::string name() const override { return "toy"; }

private:
    std::size_t l_;
};

std::uint64_t toy_fold(const BitStr& first, const BitStr& second, std::size_t l) {
    const std::uint64_t mask = (std::uint64_t{1} << l) - 1;
    const std::size_t total = first.size() + second.size();
    const std::size_t nchunks = (total + l - 1) / l;
    std::uint64_t h = 0;
    for (std::size_t c = 0; c < nchunks; ++c) {
        const std::size_t pos = c * l;
        std::uint64_t chunk;
        if (pos + l <= first.size() || pos >= first.size()) {
            const BitStr& src = pos < first.size() ? first : second;
            const std::size_t off = pos < first.size() ? pos : pos - first.size();
            chunk = src.bits_at(off, l);
        } else {
            // chunk straddles the boundary between the two segments
            const std::size_t head = first.size() - pos;
            chunk = first.bits_at(pos, head) | (second.bits_at(0, l - head) << head);
        }
        h = (((h ^ chunk) * 5) + 3) & mask;
    }
    return (5 * h + 3) & mask;
}

class ToyHash final : public UnkeyedHash {
public:
    explicit ToyHash(std::size_t l) : l_(l) { require_toy_width(l, "toy_hash"); }
    std::size_t out_bits() const override { return l_; }
    BitStr digest(const BitStr& msg) const override {
        return BitStr::from_uint(toy_fold(msg, BitStr(), l_), l_);
    }
    std::string name() const override { return "toy"; }

private:
    std::size_t l_;
};

class ToyKeyedHash final : public KeyedHash {
public:
    ToyKeyedHash(std::size_t l, std::size_t k) : l_(l), k_(k) {
        require_toy_width(l, "toy_keyed_hash");
        if (k == 0)
            throw dimension_error("toy_keyed_hash: k must be positive");
    }
    std::size_t key_bits() const override { return k_; }
    std::size_t out_bits() const override { return l_; }
    BitStr digest(const BitStr& key, const BitStr& msg) const override {
        if (key.size() != k_)
            throw dimension_error("toy_keyed_hash: key must be " + std::to_string(k_) +
                                  " bits, got " + std::to_string(key.size()));
        return BitStr::from_uint(toy_fold(key, msg, l_), l_);
    }
    std::string name() const override { return "toy"; }

private:
    std::size_t l_, k_;
};

class StubStream final : public StreamCipher {
public:
    explicit StubStream(std::size_t l) : l_(l) {}
    std::size_t seed_bits() const override { return l_; }
    BitStr keystream(const BitStr& seed, std::size_t out_bits) const override {
        if (seed.size() != l_)
            throw dimension_error("stub_stream: seed must be " + std::to_string(l_) + " bits");
        return BitStr::zeros(out_bits);
    }
    std::string name() const override { return "stub"; }

private:
    std::size_t l_;
};

class StubHash final : public UnkeyedHash {
public:
    explicit StubHash(std::size_t l) : l_(l) {}
    std::size_t out_bits() const override { return l_; }
    BitStr digest(const BitStr&) const override { return BitStr::zeros(l_); }
    std::string name() const override { return "stub"; }

private:
    std::size_t l_;
};

class StubKeyedHash final : public KeyedHash {
public:
    StubKeyedHash(std::size_t l, std::size_t k) : l_(l), k_(k) {}
    std::size_t key_bits() const override { return k_; }
    std::size_t out_bits() const override { return l_; }
    BitStr digest(const BitStr& key, const BitStr&) const override {
        if (key.size() != k_)
            throw dimension_error("stub_keyed_hash: key must be " + std::to_string(k_) + " bits");
        return BitStr::zeros(l_);
    }
    std::string name() const override { return "stub"; }

private:
    std::size_t l_, k_;
};

class KeyEchoHash final : public KeyedHash {
public:
    KeyEchoHash(std::size_t l, std::size_t k) : l_(l), k_(k) {
        if (k < l)
            throw dimension_error("key_echo_hash: needs k >= l");
    }
    std::size_t key_bits() const override { return k_; }
    std::size_t out_bits() const override { return l_; }
    BitStr digest(const BitStr& key, const BitStr&) const override {
        if (key.size() != k_)
            throw dimension_error("key_echo_hash: key must be " + std::to_string(k_) + " bits");
        return key.prefix(l_);
    }
    std::string name() const override { return "key-echo"; }

private:
    std::size_t l_, k_;
};

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> a,
                                    std::span<const std::uint8_t> b = {}) {
    std::array<std::uint8_t, 32> out{};
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr ||
        EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        (!a.empty() && EVP_DigestUpdate(ctx, a.data(), a.size()) != 1) ||
        (!b.empty() && EVP_DigestUpdate(ctx, b.data(), b.size()) != 1) ||
        EVP_DigestFinal_ex(ctx, out.data(), nullptr) != 1) {
        EVP_MD_CTX_free(ctx);
        throw std::runtime_error("sha256: EVP failure");
    }
    EVP_MD_CTX_free(ctx);
    return out;
}

class ProdStream final : public StreamCipher {
public:
    std::size_t seed_bits() const override { return kProdHashBits; }

    BitStr keystream(const BitStr& seed, std::size_t out_bits) const override {
        if (seed.size() != kProdHashBits)
            throw dimension_error("prod_stream: seed must be 256 bits, got " +
                                  std::to_string(seed.size()));
        const auto seed_bytes = seed.to_bytes();
        std::vector<std::uint8_t> buf;
        buf.reserve((out_bits + 7) / 8 + 32);
        std::array<std::uint8_t, 8> ctr{};
        for (std::uint64_t i = 0; buf.size() * 8 < out_bits; ++i) {
            for (int b = 0; b < 8; ++b)
                ctr[b] = static_cast<std::uint8_t>(i >> (56 - 8 * b));
            const auto block = sha256(seed_bytes, ctr);
            buf.insert(buf.end(), block.begin(), block.end());
        }
        return BitStr::from_bytes(buf, out_bits);
    }

    std::string name() const override { return "sha256-ctr"; }
};

class ProdKeyedHash final : public KeyedHash {
public:
    explicit ProdKeyedHash(std::size_t k) : k_(k) {
        if (k == 0)
            throw dimension_error("prod_keyed_hash: k must be positive");
    }
    std::size_t key_bits() const override { return k_; }
    std::size_t out_bits() const override { return kProdHashBits; }
    BitStr digest(const BitStr& key, const BitStr& msg) const override {
        if (key.size() != k_)
            throw dimension_error("prod_keyed_hash: key must be " + std::to_string(k_) +
                                  " bits, got " + std::to_string(key.size()));
        const auto d = sha256(key.to_bytes(), msg.to_bytes());
        return BitStr::from_bytes(d, kProdHashBits);
    }
    std::string name() const override { return "sha256-keyed"; }

private:
    std::size_t k_;
};

class ProdHash final : public UnkeyedHash {
public:
    std::size_t out_bits() const override { return kProdHashBits; }
    BitStr digest(const BitStr& msg) const override {
        const auto d = sha256(msg.to_bytes());
        return BitStr::from_bytes(d, kProdHashBits);
    }
    std::string name() const override { return "sha256"; }
};

} // namespace

std::shared_ptr<const StreamCipher> toy_stream(std::size_t l) {
    return std::make_shared<ToyStream>(l);
}
std::shared_ptr<const UnkeyedHash> toy_hash(std::size_t l) {
    return std::make_shared<ToyHash>(l);
}
std::shared_ptr<const KeyedHash> toy_keyed_hash(std::size_t l, std::size_t k) {
    return std::make_shared<ToyKeyedHash>(l, k);
}
std::shared_ptr<const StreamCipher> stub_stream(std::size_t l) {
    return std::make_shared<StubStream>(l);
}
std::shared_ptr<const UnkeyedHash> stub_hash(std::size_t l) {
    return std::make_shared<StubHash>(l);
}
std::shared_ptr<const KeyedHash> stub_keyed_hash(std::size_t l, std::size_t k) {
    return std::make_shared<StubKeyedHash>(l, k);
}
std::shared_ptr<const KeyedHash> key_echo_hash(std::size_t l, std::size_t k) {
    return std::make_shared<KeyEchoHash>(l, k);
}
std::shared_ptr<const StreamCipher> prod_stream() {
    return std::make_shared<ProdStream>();
}
std::shared_ptr<const KeyedHash> prod_keyed_hash(std::size_t k) {
    return std::make_shared<ProdKeyedHash>(k);
}
std::shared_ptr<const UnkeyedHash> prod_hash() {
    return std::make_shared<ProdHash>();
}

} // namespace lblk
