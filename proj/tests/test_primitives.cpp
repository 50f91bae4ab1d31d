#include "doctest.h"

#include "lblk/primitives.hpp"
#include "lblk/rng.hpp"

using namespace lblk;

TEST_CASE("toy stream golden vectors, l=4 r=8") {
    const auto s = toy_stream(4);
    CHECK(s->keystream(BitStr::from_uint(3, 4), 8).to_uint() == 0xB8);
    CHECK(s->keystream(BitStr::from_uint(0, 4), 8).to_uint() == 0xDC);
    CHECK(s->keystream(BitStr::from_uint(7, 4), 8).to_uint() == 0x84);
    // first step from seed 0: y1 = 1, bit 3 of 1 is 0
    CHECK_FALSE(s->keystream(BitStr::from_uint(0, 4), 8).bit(0));
}

TEST_CASE("toy stream dimension checks") {
    CHECK_THROWS_AS(toy_stream(0), dimension_error);
    CHECK_THROWS_AS(toy_stream(17), dimension_error);
    CHECK_THROWS_AS(toy_stream(4)->keystream(BitStr::from_uint(0, 5), 8), dimension_error);
}

TEST_CASE("toy stream is deterministic") {
    const auto s = toy_stream(6);
    Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        const BitStr seed = random_bits(6, rng);
        REQUIRE(s->keystream(seed, 16) == s->keystream(seed, 16));
    }
}

TEST_CASE("toy hash golden vectors, l=4") {
    const auto h = toy_hash(4);
    CHECK(h->digest(BitStr::from_uint(0, 8)).to_uint() == 13);
    const auto kh4 = toy_keyed_hash(4, 4);
    CHECK(kh4->digest(BitStr::from_uint(0, 4), BitStr::from_uint(0, 8)).to_uint() == 4);
    const auto kh5 = toy_keyed_hash(4, 5);
    CHECK(kh5->digest(BitStr::from_uint(0, 5), BitStr::from_uint(0, 8)).to_uint() == 7);
    CHECK(kh5->digest(BitStr::from_uint(0, 5), BitStr::from_uint(0x84, 8)).to_uint() == 6);
}

TEST_CASE("keyed toy hash equals unkeyed hash of concat(key, msg), exhaustive") {
    const auto h = toy_hash(4);
    const auto kh = toy_keyed_hash(4, 4);
    for (std::uint64_t k = 0; k < 16; ++k)
        for (std::uint64_t m = 0; m < 256; ++m) {
            const BitStr key = BitStr::from_uint(k, 4);
            const BitStr msg = BitStr::from_uint(m, 8);
            REQUIRE(kh->digest(key, msg) == h->digest(concat(key, msg)));
        }
}

TEST_CASE("fixed-width concatenation is injective") {
    // recovering (key, msg) from concat(key, msg) is a split
    Rng rng(2);
    for (int i = 0; i < 200; ++i) {
        const BitStr key = random_bits(5, rng);
        const BitStr msg = random_bits(8, rng);
        const auto [k2, m2] = split(concat(key, msg), 5);
        REQUIRE(k2 == key);
        REQUIRE(m2 == msg);
    }
}

TEST_CASE("stub primitives are all-zero") {
    const auto s = stub_stream(4);
    const auto h = stub_hash(4);
    const auto kh = stub_keyed_hash(4, 5);
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        CHECK(s->keystream(random_bits(4, rng), 8) == BitStr::zeros(8));
        CHECK(h->digest(random_bits(8, rng)) == BitStr::zeros(4));
        CHECK(kh->digest(random_bits(5, rng), random_bits(8, rng)) == BitStr::zeros(4));
    }
}

TEST_CASE("key-echo hash returns the key prefix") {
    const auto kh = key_echo_hash(4, 5);
    CHECK(kh->digest(BitStr::from_uint(0b10110, 5), BitStr::from_uint(99, 8)).to_uint() == 0b0110);
    CHECK_THROWS_AS(key_echo_hash(5, 4), dimension_error);
}

TEST_CASE("production hash known answer") {
    // SHA-256 of the empty string, from the algorithm's published vectors
    const auto h = prod_hash();
    CHECK(h->digest(BitStr()).to_hex() ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("production keystream: counter mode, prefix property") {
    const auto s = prod_stream();
    Rng rng(77);
    const BitStr seed = random_bits(256, rng);

    const BitStr k512 = s->keystream(seed, 512);
    const BitStr k100 = s->keystream(seed, 100);
    CHECK(k512.slice(0, 100) == k100);

    // first block is the hash of seed || zero counter
    const auto kh = prod_keyed_hash(256);
    const BitStr ctr0 = BitStr::zeros(64);
    CHECK(k512.slice(0, 256) == kh->digest(seed, ctr0));

    CHECK(s->keystream(seed, 512) == k512);
    CHECK_THROWS_AS(s->keystream(BitStr::zeros(128), 256), dimension_error);
}

TEST_CASE("production keyed hash prepends the key") {
    const auto kh = prod_keyed_hash(512);
    const auto h = prod_hash();
    Rng rng(5);
    const BitStr key = random_bits(512, rng);
    const BitStr msg = random_bits(800, rng);
    CHECK(kh->digest(key, msg) == h->digest(concat(key, msg)));
    CHECK_THROWS_AS(kh->digest(BitStr::zeros(256), msg), dimension_error);
}

TEST_CASE("primitives are deterministic under repetition") {
    const auto s = toy_stream(5);
    const auto kh = toy_keyed_hash(5, 7);
    Rng rng(123);
    const BitStr seed = random_bits(5, rng);
    const BitStr key = random_bits(7, rng);
    const BitStr msg = random_bits(12, rng);
    const BitStr ks = s->keystream(seed, 12);
    const BitStr dg = kh->digest(key, msg);
    for (int i = 0; i < 1000; ++i) {
        REQUIRE(s->keystream(seed, 12) == ks);
        REQUIRE(kh->digest(key, msg) == dg);
    }
}
