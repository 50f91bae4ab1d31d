#include "lblk/analysis.hpp"

#include <algorithm>

#include "lblk/oracle.hpp"

namespace lblk {

bool StreamImage::contains(const BitStr& v) const {
    return std::binary_search(outputs.begin(), outputs.end(), v);
}

std::optional<BitStr> StreamImage::seed_for(const BitStr& v) const {
    const auto it = std::lower_bound(outputs.begin(), outputs.end(), v);
    if (it == outputs.end() || *it != v) return std::nullopt;
    return seeds_[static_cast<std::size_t>(it - outputs.begin())];
}

StreamImage image_of_stream(const StreamCipher& s, std::size_t l, std::size_t r, std::size_t max_l) {
    if (l != s.seed_bits())
        throw dimension_error("image_of_stream: l does not match the stream's seed width");
    if (l > max_l)
        throw cap_error("image_of_stream: 2^" + std::to_string(l) +
                        " seeds exceed the exhaustive cap of 2^" + std::to_string(max_l));
    std::vector<std::pair<BitStr, BitStr>> pairs; // (output, seed)
    pairs.reserve(std::size_t{1} << l);
    for (std::uint64_t seed = 0; seed < (std::uint64_t{1} << l); ++seed) {
        BitStr in = BitStr::from_uint(seed, l);
        pairs.emplace_back(s.keystream(in, r), std::move(in));
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    StreamImage img;
    img.seed_bits = l;
    img.out_bits = r;
    for (auto& [out, seed] : pairs) {
        if (!img.outputs.empty() && img.outputs.back() == out) continue;
        img.outputs.push_back(std::move(out));
        img.seeds_.push_back(std::move(seed));
    }
    return img;
}

PairingProfile good_pairing_profile(const StreamCipher& s, const UnkeyedHash& h, std::size_t l,
                                    std::size_t r, std::size_t hist_sample_count, Rng* rng,
                                    std::size_t max_l, std::size_t exhaustive_r_cap) {
    if (l > max_l)
        throw cap_error("good_pairing_profile: l exceeds the exhaustive cap of " +
                        std::to_string(max_l));
    if (h.out_bits() != l)
        throw dimension_error("good_pairing_profile: hash output width must equal l");

    PairingProfile prof;
    prof.l = l;
    prof.r = r;
    prof.total = std::uint64_t{1} << l;

    const StreamImage img = image_of_stream(s, l, r, max_l);
    prof.image_size = img.outputs.size();

    std::vector<bool> hit(prof.total, false);
    for (const BitStr& x : img.outputs)
        hit[h.digest(x).to_uint()] = true;
    prof.covered = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), true));

    // preimage-size census over F^r, exact when enumerable
    std::vector<std::uint64_t> counts(prof.total, 0);
    if (r <= exhaustive_r_cap) {
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << r); ++x)
            ++counts[h.digest(BitStr::from_uint(x, r)).to_uint()];
        prof.hist_status = HistStatus::exact;
        prof.hist_samples = std::uint64_t{1} << r;
    } else if (hist_sample_count > 0) {
        if (rng == nullptr)
            throw dimension_error("good_pairing_profile: sampling needs a generator");
        for (std::size_t i = 0; i < hist_sample_count; ++i)
            ++counts[h.digest(random_bits(r, *rng)).to_uint()];
        prof.hist_status = HistStatus::sampled;
        prof.hist_samples = hist_sample_count;
    } else {
        prof.hist_status = HistStatus::skipped;
        return prof;
    }
    for (std::uint64_t y = 0; y < prof.total; ++y)
        ++prof.preimage_hist[counts[y]];
    return prof;
}

SurjectivityReport hr_surjectivity(const KeyedHash& h, std::size_t l, std::size_t r,
                                   std::size_t sample_count, Rng& rng, bool exhaustive_r,
                                   std::size_t max_k) {
    const std::size_t k = h.key_bits();
    if (h.out_bits() != l)
        throw dimension_error("hr_surjectivity: hash output width must equal l");
    if (k > max_k)
        throw cap_error("hr_surjectivity: 2^" + std::to_string(k) +
                        " keys exceed the exhaustive cap of 2^" + std::to_string(max_k));
    SurjectivityReport rep;
    rep.l = l;
    rep.k = k;
    rep.exhaustive = exhaustive_r;
    if (exhaustive_r && r > 20)
        throw cap_error("hr_surjectivity: exhaustive right-half sweep needs r <= 20");

    const std::uint64_t targets = std::uint64_t{1} << l;
    if (k < l) {
        // pigeonhole: 2^k keys cannot cover 2^l digests
        rep.examined = exhaustive_r ? (std::uint64_t{1} << r) : sample_count;
        return rep;
    }

    auto surjective_for = [&](const BitStr& right) {
        std::vector<bool> seen(targets, false);
        std::uint64_t reached = 0;
        for (std::uint64_t kk = 0; kk < (std::uint64_t{1} << k); ++kk) {
            const std::uint64_t y = h.digest(BitStr::from_uint(kk, k), right).to_uint();
            if (!seen[y]) {
                seen[y] = true;
                if (++reached == targets) {
                    add_keyspace_enum(kk + 1);
                    return true;
                }
            }
        }
        add_keyspace_enum(std::uint64_t{1} << k);
        return false;
    };

    if (exhaustive_r) {
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << r); ++x) {
            ++rep.examined;
            if (surjective_for(BitStr::from_uint(x, r)))
                ++rep.surjective;
        }
    } else {
        for (std::size_t i = 0; i < sample_count; ++i) {
            ++rep.examined;
            if (surjective_for(random_bits(r, rng)))
                ++rep.surjective;
        }
    }
    return rep;
}

std::vector<BitStr> solve_keyed_hash_equation(const KeyedHash& h, const BitStr& z, const BitStr& msg,
                                              std::uint64_t max_key_bits) {
    const std::size_t k = h.key_bits();
    if (z.size() != h.out_bits())
        throw dimension_error("solve_keyed_hash_equation: target width must match digest width");
    if (k > max_key_bits)
        throw cap_error("solve_keyed_hash_equation: 2^" + std::to_string(k) +
                        " keys exceed the cap of 2^" + std::to_string(max_key_bits));
    std::vector<BitStr> solutions;
    for (std::uint64_t kk = 0; kk < (std::uint64_t{1} << k); ++kk) {
        BitStr key = BitStr::from_uint(kk, k);
        if (h.digest(key, msg) == z)
            solutions.push_back(std::move(key));
    }
    add_keyspace_enum(std::uint64_t{1} << k);
    return solutions;
}

std::vector<BitStr> solve_stream_equation(const StreamCipher& s, const BitStr& z, const BitStr& l_half,
                                          std::uint64_t max_key_bits) {
    const std::size_t l = s.seed_bits();
    if (l_half.size() != l)
        throw dimension_error("solve_stream_equation: left half must match the seed width");
    if (l > max_key_bits)
        throw cap_error("solve_stream_equation: 2^" + std::to_string(l) +
                        " keys exceed the cap of 2^" + std::to_string(max_key_bits));
    std::vector<BitStr> solutions;
    for (std::uint64_t kk = 0; kk < (std::uint64_t{1} << l); ++kk) {
        BitStr key = BitStr::from_uint(kk, l);
        if (s.keystream(l_half ^ key, z.size()) == z)
            solutions.push_back(std::move(key));
    }
    add_keyspace_enum(std::uint64_t{1} << l);
    return solutions;
}

} // namespace lblk
