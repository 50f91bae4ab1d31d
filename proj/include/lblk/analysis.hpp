#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lblk/primitives.hpp"
#include "lblk/rng.hpp"

namespace lblk {

// Exact image of a stream cipher over all 2^l seeds, with one witness seed
// per distinct output.
struct StreamImage {
    std::size_t seed_bits = 0;
    std::size_t out_bits = 0;
    std::vector<BitStr> outputs; // sorted, unique

    bool contains(const BitStr& v) const;
    // Some seed mapping to v, if v is in the image.
    std::optional<BitStr> seed_for(const BitStr& v) const;

    std::vector<BitStr> seeds_; // seeds_[i] maps to outputs[i]
};

StreamImage image_of_stream(const StreamCipher& s, std::size_t l, std::size_t r,
                            std::size_t max_l = 20);

enum class HistStatus { exact, sampled, skipped };

// How much of the digest space a (stream, hash) pair can reach jointly: a
// value Y counts as covered when some stream output hashes to it. The
// fraction is always exact (computed forward through the image); the
// preimage-size histogram is exact only when 2^r is enumerable.
struct PairingProfile {
    std::size_t l = 0, r = 0;
    std::uint64_t covered = 0;
    std::uint64_t total = 0;
    std::uint64_t image_size = 0;
    std::map<std::uint64_t, std::uint64_t> preimage_hist; // |H^-1(Y)| -> #Y
    HistStatus hist_status = HistStatus::skipped;
    std::uint64_t hist_samples = 0;

    double fraction() const { return static_cast<double>(covered) / static_cast<double>(total); }
};

PairingProfile good_pairing_profile(const StreamCipher& s, const UnkeyedHash& h, std::size_t l,
                                    std::size_t r, std::size_t hist_sample_count = 0,
                                    Rng* rng = nullptr, std::size_t max_l = 16,
                                    std::size_t exhaustive_r_cap = 20);

// Fraction of right-half values R for which K |-> H_K(R) covers the whole
// digest space. Needs 2^k >= 2^l to be nonzero at all, so k < l shortcuts
// to zero without sweeping.
struct SurjectivityReport {
    std::size_t l = 0, k = 0;
    std::uint64_t surjective = 0;
    std::uint64_t examined = 0;
    bool exhaustive = false; // examined every R in F^r instead of sampling

    double fraction() const {
        return examined == 0 ? 0.0 : static_cast<double>(surjective) / static_cast<double>(examined);
    }
};

SurjectivityReport hr_surjectivity(const KeyedHash& h, std::size_t l, std::size_t r,
                                   std::size_t sample_count, Rng& rng, bool exhaustive_r = false,
                                   std::size_t max_k = 20);

// Baseline equation solvers: every key satisfying the equation, found by
// plain enumeration. Reduction verdicts are cross-checked against these.
std::vector<BitStr> solve_keyed_hash_equation(const KeyedHash& h, const BitStr& z, const BitStr& msg,
                                              std::uint64_t max_key_bits = 24);
std::vector<BitStr> solve_stream_equation(const StreamCipher& s, const BitStr& z, const BitStr& l_half,
                                          std::uint64_t max_key_bits = 24);

} // namespace lblk
