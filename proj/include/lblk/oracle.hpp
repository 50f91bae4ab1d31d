#pragma once
#include <cstdint>
#include <vector>

#include "lblk/ciphers.hpp"

namespace lblk {

struct PtCtPair {
    Block pt;
    Block ct;
};

// Known plaintext/ciphertext pairs, n >= 1, all blocks sharing one Params.
struct PairSet {
    std::vector<PtCtPair> items;

    std::size_t size() const { return items.size(); }
};

enum class OracleMode {
    first_consistent,
    all_consistent,
};

const char* oracle_mode_name(OracleMode m);
OracleMode oracle_mode_from_name(const std::string& name);

// Keys come back in increasing order of the integer whose little-endian bit
// expansion is the concatenated subkey encoding. keys_scanned is the
// sequential-equivalent cost: candidates up to and including the first hit
// in first_consistent mode, the whole space otherwise.
struct OracleAnswer {
    OracleMode mode = OracleMode::all_consistent;
    std::vector<KeyMaterial> keys;
    std::uint64_t keys_scanned = 0;
};

// Abstract key-recovery adversary: hand it pairs, get consistent keys back.
class KeyRecoveryOracle {
public:
    virtual ~KeyRecoveryOracle() = default;
    virtual OracleAnswer recover(const PairSet& pairs) const = 0;
};

constexpr std::uint64_t kDefaultKeyBitsCap = 24;

// Exhaustive scan of the scheme's full key space. Refuses key spaces above
// the bit cap with a cost estimate instead of silently grinding. Worker
// partitioning must return exactly the sequential result; with
// first_consistent the lowest-index hit wins.
class BruteForceOracle final : public KeyRecoveryOracle {
public:
    BruteForceOracle(Scheme scheme, OracleMode mode,
                     std::uint64_t max_key_bits = kDefaultKeyBitsCap, unsigned threads = 1);

    OracleAnswer recover(const PairSet& pairs) const override;

    const Scheme& scheme() const { return scheme_; }
    OracleMode mode() const { return mode_; }

private:
    Scheme scheme_;
    OracleMode mode_;
    std::uint64_t max_key_bits_;
    unsigned threads_;
};

// Process-wide count of candidate keys tried by exhaustive searches (this
// oracle and the analysis equation solvers). Reductions snapshot it to show
// their own code never enumerates key space.
std::uint64_t keyspace_enum_count();
void add_keyspace_enum(std::uint64_t n);

struct ConsistencyPoint {
    std::size_t n = 0;
    double mean_consistent = 0.0;
};

// For n = 1..n_max: plant a random key, sample n random plaintexts, count
// keys consistent with the resulting pairs; mean over `trials` plantings.
std::vector<ConsistencyPoint> consistent_count_profile(const Scheme& scheme, std::size_t n_max,
                                                       std::size_t trials, Rng& rng,
                                                       std::uint64_t max_key_bits = kDefaultKeyBitsCap);

} // namespace lblk
