#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "lblk/bitstr.hpp"
#include "lblk/rng.hpp"

namespace lblk {

enum class SchemeId : std::uint8_t {
    bear = 1,
    lion = 2,
    lioness = 3,
    bear2 = 4,
    lion2 = 5,
};

const char* scheme_name(SchemeId id);
SchemeId scheme_from_name(const std::string& name);

// Scheme dimensions: left half l, right half r (always r > l), key-half
// width k. LION ignores k (its subkeys are l bits wide).
struct Params {
    std::size_t l = 0;
    std::size_t r = 0;
    std::size_t k = 0;
};

struct Block {
    BitStr left;
    BitStr right;

    bool operator==(const Block&) const = default;
};

// Ordered subkey tuple. Widths by scheme:
//   BEAR    (K1, K2)          k, k
//   LION    (K1, K2)          l, l
//   LIONESS (K1, K2, K3, K4)  l, k, l, k
//   BEAR2   (K1, K2, K3)      k, l, k
//   LION2   (K1, K2, K3)      l, k, l
struct KeyMaterial {
    SchemeId scheme = SchemeId::bear;
    std::vector<BitStr> subkeys;

    bool operator==(const KeyMaterial&) const = default;
};

std::vector<std::size_t> subkey_widths(SchemeId id, const Params& p);

// r > l for every scheme; BEAR and BEAR2 additionally require k > l.
void validate_params(SchemeId id, const Params& p);
void validate_key(const KeyMaterial& key, SchemeId id, const Params& p);
void validate_block(const Block& b, const Params& p, const char* what);

} // namespace lblk
