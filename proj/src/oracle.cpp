#include "lblk/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace lblk {

namespace {

std::atomic<std::uint64_t> g_keyspace_enum{0};

void validate_pairs(const PairSet& pairs, const Params& p) {
    if (pairs.items.empty())
        throw dimension_error("oracle: pair set must not be empty");
    for (const PtCtPair& pc : pairs.items) {
        validate_block(pc.pt, p, "oracle pair plaintext");
        validate_block(pc.ct, p, "oracle pair ciphertext");
    }
}

} // namespace

std::uint64_t keyspace_enum_count() { return g_keyspace_enum.load(); }
void add_keyspace_enum(std::uint64_t n) { g_keyspace_enum.fetch_add(n); }

const char* oracle_mode_name(OracleMode m) {
    return m == OracleMode::first_consistent ? "first-consistent" : "all-consistent";
}

OracleMode oracle_mode_from_name(const std::string& name) {
    if (name == "first-consistent") return OracleMode::first_consistent;
    if (name == "all-consistent") return OracleMode::all_consistent;
    throw dimension_error("unknown oracle mode '" + name + "'");
}

BruteForceOracle::BruteForceOracle(Scheme scheme, OracleMode mode, std::uint64_t max_key_bits,
                                   unsigned threads)
    : scheme_(std::move(scheme)), mode_(mode), max_key_bits_(max_key_bits),
      threads_(threads == 0 ? 1 : threads) {
    if (max_key_bits_ > 48)
        throw cap_error("oracle: key caps above 48 bits are not supported");
}

OracleAnswer BruteForceOracle::recover(const PairSet& pairs) const {
    validate_pairs(pairs, scheme_.params());
    const std::size_t bits = scheme_.key_bits();
    if (bits > max_key_bits_)
        throw cap_error("oracle: key space is 2^" + std::to_string(bits) +
                        " but the cap is 2^" + std::to_string(max_key_bits_) +
                        " (full scan would cost about 2^" + std::to_string(bits) + " x " +
                        std::to_string(pairs.size()) + " trial encryptions)");
    const std::uint64_t total = std::uint64_t{1} << bits;

    // hits from one stripe, in index order
    auto scan = [&](std::uint64_t lo, std::uint64_t hi, bool stop_at_first,
                    std::vector<std::uint64_t>& hits) {
        KeyMaterial cand;
        for (std::uint64_t c = lo; c < hi; ++c) {
            scheme_.key_from_bits_into(BitStr::from_uint(c, bits), cand);
            bool ok = true;
            for (const PtCtPair& pc : pairs.items) {
                if (scheme_.encrypt(cand, pc.pt) != pc.ct) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                hits.push_back(c);
                if (stop_at_first) return;
            }
        }
    };

    const bool first_only = mode_ == OracleMode::first_consistent;
    std::vector<std::uint64_t> hits;
    if (threads_ <= 1 || total < 4096) {
        scan(0, total, first_only, hits);
    } else {
        const unsigned nt = threads_;
        std::vector<std::vector<std::uint64_t>> per(nt);
        std::vector<std::thread> workers;
        const std::uint64_t stripe = (total + nt - 1) / nt;
        for (unsigned t = 0; t < nt; ++t) {
            const std::uint64_t lo = stripe * t;
            const std::uint64_t hi = lo + stripe < total ? lo + stripe : total;
            if (lo >= hi) continue;
            workers.emplace_back([&, lo, hi, t] { scan(lo, hi, first_only, per[t]); });
        }
        for (auto& w : workers) w.join();
        for (auto& stripe_hits : per)
            hits.insert(hits.end(), stripe_hits.begin(), stripe_hits.end());
        if (first_only && hits.size() > 1) {
            const std::uint64_t best = *std::min_element(hits.begin(), hits.end());
            hits.assign(1, best);
        }
    }

    OracleAnswer ans;
    ans.mode = mode_;
    for (std::uint64_t c : hits)
        ans.keys.push_back(scheme_.key_from_bits(BitStr::from_uint(c, bits)));
    ans.keys_scanned = first_only ? (hits.empty() ? total : hits.front() + 1) : total;
    add_keyspace_enum(ans.keys_scanned);

    // soundness pass, separate from the scan above
    for (const KeyMaterial& key : ans.keys)
        for (const PtCtPair& pc : pairs.items)
            if (scheme_.encrypt(key, pc.pt) != pc.ct)
                throw std::logic_error("oracle: inconsistent key survived the scan");
    return ans;
}

std::vector<ConsistencyPoint> consistent_count_profile(const Scheme& scheme, std::size_t n_max,
                                                       std::size_t trials, Rng& rng,
                                                       std::uint64_t max_key_bits) {
    const BruteForceOracle oracle(scheme, OracleMode::all_consistent, max_key_bits);
    std::vector<ConsistencyPoint> out;
    for (std::size_t n = 1; n <= n_max && trials > 0; ++n) {
        double sum = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            const KeyMaterial key = scheme.random_key(rng);
            PairSet pairs;
            for (std::size_t i = 0; i < n; ++i) {
                Block pt{random_bits(scheme.params().l, rng), random_bits(scheme.params().r, rng)};
                pairs.items.push_back({pt, scheme.encrypt(key, pt)});
            }
            sum += static_cast<double>(oracle.recover(pairs).keys.size());
        }
        out.push_back({n, sum / static_cast<double>(trials)});
    }
    return out;
}

} // namespace lblk
