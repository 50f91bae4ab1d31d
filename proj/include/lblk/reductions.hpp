#pragma once
#include <optional>
#include <string>

#include "lblk/oracle.hpp"

namespace lblk {

// Each task turns a key-recovery oracle for one scheme into a solver for a
// primitive problem: it fabricates pairs that are consistent with a hidden
// primitive secret, asks the oracle for consistent keys, and reads the
// secret off the answer. Task ids name scheme and target:
//
//   R-LION-S1  single pair, recover a stream seed from its output
//   R-LION-H1  single pair, hash collision / preimage (two run modes)
//   R-BEAR-H   n pairs, solve Z = H_K1(R) for K1
//   R-BEAR2-H  n pairs, same equation through BEAR2
//   R-BEAR2-S  n pairs, solve Z = S(X ^ K2) for K2
//   R-LION-S   n pairs, solve Z = S(L ^ K1) for K1
//   R-LION2-S  n pairs, same equation through LION2
//   R-LION2-H  n pairs, solve Z = H_K2(X) for K2
//   R-LNS-S    n pairs, solve Z = S(L ^ K1) through LIONESS
//   R-LNS-H    n pairs, solve Z = H_K4(R') through LIONESS
enum class TaskId {
    lion_seed_single,
    lion_hash_single,
    bear_hash,
    bear2_hash,
    bear2_stream,
    lion_stream,
    lion2_stream,
    lion2_hash,
    lioness_stream,
    lioness_hash,
};

inline constexpr TaskId kAllTasks[] = {
    TaskId::lion_seed_single, TaskId::lion_hash_single, TaskId::bear_hash,
    TaskId::bear2_hash,       TaskId::bear2_stream,     TaskId::lion_stream,
    TaskId::lion2_stream,     TaskId::lion2_hash,       TaskId::lioness_stream,
    TaskId::lioness_hash,
};

const char* task_name(TaskId id);
TaskId task_from_name(const std::string& name);
bool task_is_single_pair(TaskId id);
SchemeId task_scheme(TaskId id);

enum class HashMode { collision, preimage };

// Planted instances. The planting harness knows the secret; the solver code
// paths receive only the target members.
struct PlantedSeed {
    BitStr m; // secret seed
    BitStr y; // public: y = S(m)
};

struct PlantedStreamEq {
    BitStr key; // secret K
    BitStr x;   // public
    BitStr z;   // public: z = S(x ^ key)
};

struct PlantedHashEq {
    BitStr key; // secret K
    BitStr msg; // public
    BitStr z;   // public: z = H_key(msg)
};

struct PlantedPreimage {
    BitStr source; // secret: a stream output with H(source) = y
    BitStr y;      // public target
};

PlantedSeed plant_seed_recovery(const Scheme& lion, Rng& rng);
PlantedStreamEq plant_stream_equation(const Scheme& scheme, Rng& rng);
PlantedHashEq plant_hash_equation(const Scheme& scheme, Rng& rng);
// Target drawn from H(Im(S)), so a preimage inside the image exists.
PlantedPreimage plant_solvable_preimage(const Scheme& lion, Rng& rng);

struct ReductionReport {
    std::string task;
    std::string variant; // "collision"/"preimage" for R-LION-H1, else empty
    std::uint64_t seed = 0;
    std::size_t n = 0;

    PairSet pairs;
    KeyMaterial witness; // full key the pairs are consistent with
    bool pair_valid = false;

    OracleAnswer answer;
    BitStr extracted;
    bool pass = false;
    std::string note;

    // collision/preimage bookkeeping: the digest target and, in collision
    // mode, the off-image partner of the extracted value
    BitStr h1_target;
    BitStr h1_partner;

    std::uint64_t oracle_cost = 0;         // candidate keys the oracle tried
    std::uint64_t reduction_cost = 0;      // primitive evaluations outside the oracle
    std::uint64_t enum_outside_oracle = 0; // keyspace enumeration outside the oracle (must be 0)

    // task, seed, n, verdict, oracle cost, reduction cost, extracted hex
    std::string tsv_line() const;
};

ReductionReport reduce_lion_seed_single(const Scheme& lion, const PlantedSeed& planted,
                                        const KeyRecoveryOracle& oracle, Rng& rng);
ReductionReport reduce_lion_hash_single(const Scheme& lion, HashMode mode,
                                        const std::optional<PlantedPreimage>& planted,
                                        const KeyRecoveryOracle& oracle, Rng& rng,
                                        std::size_t retry_cap = 64);
ReductionReport reduce_bear_hash(const Scheme& bear, const PlantedHashEq& planted, std::size_t n,
                                 const KeyRecoveryOracle& oracle, Rng& rng);
ReductionReport reduce_bear2_hash(const Scheme& bear2, const PlantedHashEq& planted, std::size_t n,
                                  const KeyRecoveryOracle& oracle, Rng& rng);
ReductionReport reduce_bear2_stream(const Scheme& bear2, const PlantedStreamEq& planted,
                                    std::size_t n, const KeyRecoveryOracle& oracle, Rng& rng);
ReductionReport reduce_lion_stream(const Scheme& lion, const PlantedStreamEq& planted, std::size_t n,
                                   const KeyRecoveryOracle& oracle, Rng& rng);
ReductionReport reduce_lion2_stream(const Scheme& lion2, const PlantedStreamEq& planted,
                                    std::size_t n, const KeyRecoveryOracle& oracle, Rng& rng);
ReductionReport reduce_lion2_hash(const Scheme& lion2, const PlantedHashEq& planted, std::size_t n,
                                  const KeyRecoveryOracle& oracle, Rng& rng);
ReductionReport reduce_lioness_stream(const Scheme& lioness, const PlantedStreamEq& planted,
                                      std::size_t n, const KeyRecoveryOracle& oracle, Rng& rng);
ReductionReport reduce_lioness_hash(const Scheme& lioness, const PlantedHashEq& planted,
                                    std::size_t n, const KeyRecoveryOracle& oracle, Rng& rng);

// Toy-scale driver shared by the CLI and the acceptance suite: builds the
// task's scheme over toy primitives, plants an instance from trial_seed,
// runs the task against a fresh brute-force oracle. R-LION-H1 yields two
// reports (collision, then preimage); every other task yields one.
struct TrialConfig {
    TaskId id = TaskId::lion_seed_single;
    Params params{4, 8, 5};
    std::size_t n = 1;
    OracleMode mode = OracleMode::all_consistent;
    std::uint64_t max_key_bits = kDefaultKeyBitsCap;
    unsigned threads = 1;
};

Scheme toy_scheme_for(TaskId id, const Params& p);
std::vector<ReductionReport> run_trial(const TrialConfig& cfg, std::uint64_t trial_seed);

} // namespace lblk
