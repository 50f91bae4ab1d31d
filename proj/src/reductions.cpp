#include "lblk/reductions.hpp"

#include <algorithm>

#include "lblk/analysis.hpp"

namespace lblk {

namespace {

struct TaskNameRow {
    TaskId id;
    const char* name;
};

constexpr TaskNameRow kTaskNames[] = {
    {TaskId::lion_seed_single, "R-LION-S1"}, {TaskId::lion_hash_single, "R-LION-H1"},
    {TaskId::bear_hash, "R-BEAR-H"},         {TaskId::bear2_hash, "R-BEAR2-H"},
    {TaskId::bear2_stream, "R-BEAR2-S"},     {TaskId::lion_stream, "R-LION-S"},
    {TaskId::lion2_stream, "R-LION2-S"},     {TaskId::lion2_hash, "R-LION2-H"},
    {TaskId::lioness_stream, "R-LNS-S"},     {TaskId::lioness_hash, "R-LNS-H"},
};

// Everything the solver side produced, before the planting harness attaches
// the witness. `chosen` holds the subkeys the solver picked for itself.
struct AdvResult {
    PairSet pairs;
    std::vector<BitStr> chosen;
    OracleAnswer answer;
    BitStr extracted;
    bool pass = false;
    std::string note;
    BitStr h1_target;
    BitStr h1_partner;
    std::uint64_t prim = 0;
    std::uint64_t oracle_cost = 0;
    std::uint64_t enum_outside = 0;
};

void require_width(const BitStr& v, std::size_t bits, const char* what) {
    if (v.size() != bits)
        throw dimension_error(std::string(what) + ": expected " + std::to_string(bits) +
                              " bits, got " + std::to_string(v.size()));
}

std::vector<BitStr> sample_distinct(std::size_t count, std::size_t bits, Rng& rng) {
    if (bits < 63 && count > (std::uint64_t{1} << bits))
        throw dimension_error("cannot sample " + std::to_string(count) +
                              " distinct values from a " + std::to_string(bits) + "-bit space");
    std::vector<BitStr> out;
    while (out.size() < count) {
        BitStr v = random_bits(bits, rng);
        if (std::find(out.begin(), out.end(), v) == out.end())
            out.push_back(std::move(v));
    }
    return out;
}

// build() fabricates the pairs, extract() reads the secret off the oracle
// answer; the keyspace-enumeration meter is sampled around the oracle call
// so solver-side enumeration would show up in enum_outside.
template <typename BuildFn, typename ExtractFn>
AdvResult run_solver(const KeyRecoveryOracle& oracle, BuildFn&& build, ExtractFn&& extract) {
    AdvResult res;
    const std::uint64_t e0 = keyspace_enum_count();
    build(res);
    const std::uint64_t e1 = keyspace_enum_count();
    res.answer = oracle.recover(res.pairs);
    const std::uint64_t e2 = keyspace_enum_count();
    extract(res);
    const std::uint64_t e3 = keyspace_enum_count();
    res.enum_outside = (e1 - e0) + (e3 - e2);
    res.oracle_cost = res.answer.keys_scanned;
    return res;
}

std::uint64_t prims_per_encrypt(SchemeId id) {
    return id == SchemeId::lioness ? 4 : 3;
}

ReductionReport finish(const char* task, const Scheme& scheme, KeyMaterial witness,
                       AdvResult&& res, std::size_t n) {
    ReductionReport rep;
    rep.task = task;
    rep.n = n;
    rep.pairs = std::move(res.pairs);
    rep.witness = std::move(witness);
    rep.pair_valid = true;
    if (!rep.witness.subkeys.empty()) {
        for (const PtCtPair& pc : rep.pairs.items) {
            res.prim += prims_per_encrypt(scheme.id());
            if (scheme.encrypt(rep.witness, pc.pt) != pc.ct) {
                rep.pair_valid = false;
                break;
            }
        }
    }
    rep.answer = std::move(res.answer);
    rep.extracted = std::move(res.extracted);
    rep.pass = res.pass;
    rep.note = std::move(res.note);
    rep.h1_target = std::move(res.h1_target);
    rep.h1_partner = std::move(res.h1_partner);
    rep.oracle_cost = res.oracle_cost;
    rep.reduction_cost = res.prim;
    rep.enum_outside_oracle = res.enum_outside;
    return rep;
}

void note_failure(AdvResult& res, const char* equation) {
    if (res.answer.keys.empty())
        res.note = "oracle returned no consistent key";
    else
        res.note = std::string("no returned key satisfies ") + equation;
}

} // namespace

const char* task_name(TaskId id) {
    for (const auto& row : kTaskNames)
        if (row.id == id) return row.name;
    throw dimension_error("unknown task id");
}

TaskId task_from_name(const std::string& name) {
    for (const auto& row : kTaskNames)
        if (name == row.name) return row.id;
    throw dimension_error("unknown reduction task '" + name + "'");
}

bool task_is_single_pair(TaskId id) {
    return id == TaskId::lion_seed_single || id == TaskId::lion_hash_single;
}

SchemeId task_scheme(TaskId id) {
    switch (id) {
    case TaskId::lion_seed_single:
    case TaskId::lion_hash_single:
    case TaskId::lion_stream: return SchemeId::lion;
    case TaskId::bear_hash: return SchemeId::bear;
    case TaskId::bear2_hash:
    case TaskId::bear2_stream: return SchemeId::bear2;
    case TaskId::lion2_stream:
    case TaskId::lion2_hash: return SchemeId::lion2;
    case TaskId::lioness_stream:
    case TaskId::lioness_hash: return SchemeId::lioness;
    }
    throw dimension_error("unknown task id");
}

PlantedSeed plant_seed_recovery(const Scheme& lion, Rng& rng) {
    PlantedSeed ps;
    ps.m = random_bits(lion.params().l, rng);
    ps.y = lion.stream().keystream(ps.m, lion.params().r);
    return ps;
}

PlantedStreamEq plant_stream_equation(const Scheme& scheme, Rng& rng) {
    PlantedStreamEq pe;
    const Params& p = scheme.params();
    pe.key = random_bits(p.l, rng);
    pe.x = random_bits(p.l, rng);
    pe.z = scheme.stream().keystream(pe.x ^ pe.key, p.r);
    return pe;
}

PlantedHashEq plant_hash_equation(const Scheme& scheme, Rng& rng) {
    PlantedHashEq pe;
    pe.key = random_bits(scheme.keyed_hash().key_bits(), rng);
    pe.msg = random_bits(scheme.params().r, rng);
    pe.z = scheme.keyed_hash().digest(pe.key, pe.msg);
    return pe;
}

PlantedPreimage plant_solvable_preimage(const Scheme& lion, Rng& rng) {
    const Params& p = lion.params();
    const StreamImage img = image_of_stream(lion.stream(), p.l, p.r);
    PlantedPreimage pp;
    pp.source = img.outputs[rng.below(img.outputs.size())];
    pp.y = lion.unkeyed_hash().digest(pp.source);
    return pp;
}

std::string ReductionReport::tsv_line() const {
    std::string s = task;
    s += '\t';
    s += std::to_string(seed);
    s += '\t';
    s += std::to_string(n);
    s += '\t';
    s += pass ? "pass" : "fail";
    s += '\t';
    s += std::to_string(oracle_cost);
    s += '\t';
    s += std::to_string(reduction_cost);
    s += '\t';
    s += extracted.empty() ? "-" : extracted.to_hex();
    s += '\n';
    return s;
}

ReductionReport reduce_lion_seed_single(const Scheme& lion, const PlantedSeed& planted,
                                        const KeyRecoveryOracle& oracle, Rng& rng) {
    const Params& p = lion.params();
    require_width(planted.y, p.r, "R-LION-S1 target");
    const StreamCipher& S = lion.stream();
    const UnkeyedHash& H = lion.unkeyed_hash();
    const BitStr& y = planted.y;

    AdvResult res = run_solver(
        oracle,
        [&](AdvResult& r) {
            const BitStr left = random_bits(p.l, rng);
            const BitStr right = random_bits(p.r, rng);
            const BitStr k2 = random_bits(p.l, rng);
            const BitStr rbar = right ^ y;
            r.prim += 2;
            const BitStr lp = left ^ H.digest(rbar);
            const BitStr rp = rbar ^ S.keystream(lp ^ k2, p.r);
            r.pairs.items.push_back({{left, right}, {lp, rp}});
            r.chosen = {k2};
        },
        [&](AdvResult& r) {
            const BitStr& left = r.pairs.items[0].pt.left;
            for (const KeyMaterial& cand : r.answer.keys) {
                BitStr m = left ^ cand.subkeys[0];
                ++r.prim;
                if (S.keystream(m, p.r) == y) {
                    r.extracted = std::move(m);
                    r.pass = true;
                    break;
                }
            }
            if (!r.pass) note_failure(r, "S(M) = Y");
        });

    KeyMaterial witness{SchemeId::lion, {planted.m ^ res.pairs.items[0].pt.left, res.chosen[0]}};
    return finish("R-LION-S1", lion, std::move(witness), std::move(res), 1);
}

ReductionReport reduce_lion_hash_single(const Scheme& lion, HashMode mode,
                                        const std::optional<PlantedPreimage>& planted,
                                        const KeyRecoveryOracle& oracle, Rng& rng,
                                        std::size_t retry_cap) {
    const Params& p = lion.params();
    if (mode == HashMode::collision && p.r <= p.l)
        throw dimension_error("R-LION-H1 collision mode needs r > l");
    if (mode == HashMode::preimage && !planted.has_value())
        throw dimension_error("R-LION-H1 preimage mode needs a target");
    const StreamCipher& S = lion.stream();
    const UnkeyedHash& H = lion.unkeyed_hash();

    AdvResult res;
    const std::uint64_t e0 = keyspace_enum_count();

    // desk-scale aid: the exact image supports off-image sampling and the
    // feasibility precheck; it is seed-space work, not key-space work
    const StreamImage img = image_of_stream(S, p.l, p.r);
    res.prim += std::uint64_t{1} << p.l;

    auto feasible = [&](const BitStr& target) {
        for (const BitStr& x : img.outputs) {
            ++res.prim;
            if (H.digest(x) == target) return true;
        }
        return false;
    };

    BitStr target;
    BitStr off_image;
    bool have_instance = false;
    if (mode == HashMode::collision) {
        for (std::size_t attempt = 0; attempt < retry_cap && !have_instance; ++attempt) {
            BitStr cand = random_bits(p.r, rng);
            if (img.contains(cand)) continue;
            ++res.prim;
            BitStr yc = H.digest(cand);
            if (!feasible(yc)) continue; // try another off-image point
            off_image = std::move(cand);
            target = std::move(yc);
            have_instance = true;
        }
        if (!have_instance)
            res.note = "good-pairing violation: no off-image point with a reachable digest after " +
                       std::to_string(retry_cap) + " draws";
    } else {
        target = planted->y;
        require_width(target, p.l, "R-LION-H1 preimage target");
        have_instance = feasible(target);
        if (!have_instance)
            res.note = "good-pairing violation: target digest is not reachable from Im(S)";
    }

    KeyMaterial witness;
    if (have_instance) {
        const BitStr left = random_bits(p.l, rng);
        const BitStr zero_r = BitStr::zeros(p.r);
        res.pairs.items.push_back({{left, zero_r}, {left ^ target, zero_r}});

        const std::uint64_t e1 = keyspace_enum_count();
        res.answer = oracle.recover(res.pairs);
        const std::uint64_t e2 = keyspace_enum_count();

        for (const KeyMaterial& cand : res.answer.keys) {
            ++res.prim;
            BitStr x = S.keystream(left ^ cand.subkeys[0], p.r);
            ++res.prim;
            if (H.digest(x) != target) continue;
            if (mode == HashMode::collision && x == off_image) continue;
            res.extracted = std::move(x);
            res.pass = true;
            break;
        }
        if (!res.pass) note_failure(res, "H(X) = Y");
        res.oracle_cost = res.answer.keys_scanned;
        const std::uint64_t e3 = keyspace_enum_count();
        res.enum_outside = (e1 - e0) + (e3 - e2);

        // witness: pick an image point hashing to the target and step back
        // through its seed
        for (const BitStr& x : img.outputs) {
            if (H.digest(x) == target) {
                const BitStr seed = *img.seed_for(x);
                witness = KeyMaterial{SchemeId::lion, {left ^ seed, left ^ target ^ seed}};
                break;
            }
        }
    } else {
        res.enum_outside = keyspace_enum_count() - e0;
    }

    res.h1_target = target;
    res.h1_partner = off_image;
    ReductionReport rep = finish("R-LION-H1", lion, std::move(witness), std::move(res), 1);
    rep.variant = mode == HashMode::collision ? "collision" : "preimage";
    return rep;
}

ReductionReport reduce_bear_hash(const Scheme& bear, const PlantedHashEq& planted, std::size_t n,
                                 const KeyRecoveryOracle& oracle, Rng& rng) {
    const Params& p = bear.params();
    if (n == 0)
        throw dimension_error("R-BEAR-H: pair count must be at least 1");
    require_width(planted.z, p.l, "R-BEAR-H target digest");
    require_width(planted.msg, p.r, "R-BEAR-H target message");
    const StreamCipher& S = bear.stream();
    const KeyedHash& H = bear.keyed_hash();
    const BitStr& z = planted.z;
    const BitStr& msg = planted.msg;

    AdvResult res = run_solver(
        oracle,
        [&](AdvResult& r) {
            const BitStr k2 = random_bits(p.k, rng);
            for (const BitStr& li : sample_distinct(n, p.l, rng)) {
                const BitStr lbar = li ^ z;
                r.prim += 2;
                const BitStr rp = msg ^ S.keystream(lbar, p.r);
                const BitStr lp = lbar ^ H.digest(k2, rp);
                r.pairs.items.push_back({{li, msg}, {lp, rp}});
            }
            r.chosen = {k2};
        },
        [&](AdvResult& r) {
            for (const KeyMaterial& cand : r.answer.keys) {
                ++r.prim;
                if (H.digest(cand.subkeys[0], msg) == z) {
                    r.extracted = cand.subkeys[0];
                    r.pass = true;
                    break;
                }
            }
            if (!r.pass) note_failure(r, "H_K1(R) = Z");
        });

    KeyMaterial witness{SchemeId::bear, {planted.key, res.chosen[0]}};
    return finish("R-BEAR-H", bear, std::move(witness), std::move(res), n);
}

ReductionReport reduce_bear2_hash(const Scheme& bear2, const PlantedHashEq& planted, std::size_t n,
                                  const KeyRecoveryOracle& oracle, Rng& rng) {
    const Params& p = bear2.params();
    if (n == 0)
        throw dimension_error("R-BEAR2-H: pair count must be at least 1");
    require_width(planted.z, p.l, "R-BEAR2-H target digest");
    require_width(planted.msg, p.r, "R-BEAR2-H target message");
    const StreamCipher& S = bear2.stream();
    const KeyedHash& H = bear2.keyed_hash();
    const BitStr& z = planted.z;
    const BitStr& msg = planted.msg;

    AdvResult res = run_solver(
        oracle,
        [&](AdvResult& r) {
            const BitStr k2 = random_bits(p.l, rng);
            const BitStr k3 = random_bits(p.k, rng);
            for (const BitStr& li : sample_distinct(n, p.l, rng)) {
                const BitStr lbar = li ^ z;
                r.prim += 2;
                const BitStr rp = msg ^ S.keystream(lbar ^ k2, p.r);
                const BitStr lp = lbar ^ H.digest(k3, rp);
                r.pairs.items.push_back({{li, msg}, {lp, rp}});
            }
            r.chosen = {k2, k3};
        },
        [&](AdvResult& r) {
            for (const KeyMaterial& cand : r.answer.keys) {
                ++r.prim;
                if (H.digest(cand.subkeys[0], msg) == z) {
                    r.extracted = cand.subkeys[0];
                    r.pass = true;
                    break;
                }
            }
            if (!r.pass) note_failure(r, "H_K1(R) = Z");
        });

    KeyMaterial witness{SchemeId::bear2, {planted.key, res.chosen[0], res.chosen[1]}};
    return finish("R-BEAR2-H", bear2, std::move(witness), std::move(res), n);
}

ReductionReport reduce_bear2_stream(const Scheme& bear2, const PlantedStreamEq& planted,
                                    std::size_t n, const KeyRecoveryOracle& oracle, Rng& rng) {
    const Params& p = bear2.params();
    if (n == 0)
        throw dimension_error("R-BEAR2-S: pair count must be at least 1");
    require_width(planted.z, p.r, "R-BEAR2-S target keystream");
    require_width(planted.x, p.l, "R-BEAR2-S target seed offset");
    const StreamCipher& S = bear2.stream();
    const KeyedHash& H = bear2.keyed_hash();
    const BitStr& z = planted.z;
    const BitStr& x = planted.x;

    AdvResult res = run_solver(
        oracle,
        [&](AdvResult& r) {
            const BitStr k1 = random_bits(p.k, rng);
            const BitStr k3 = random_bits(p.k, rng);
            for (const BitStr& ri : sample_distinct(n, p.r, rng)) {
                r.prim += 2;
                const BitStr li = x ^ H.digest(k1, ri); // makes Lbar = x exactly
                const BitStr rp = ri ^ z;
                const BitStr lp = x ^ H.digest(k3, rp);
                r.pairs.items.push_back({{li, ri}, {lp, rp}});
            }
            r.chosen = {k1, k3};
        },
        [&](AdvResult& r) {
            for (const KeyMaterial& cand : r.answer.keys) {
                ++r.prim;
                if (S.keystream(x ^ cand.subkeys[1], p.r) == z) {
                    r.extracted = cand.subkeys[1];
                    r.pass = true;
                    break;
                }
            }
            if (!r.pass) note_failure(r, "S(X ^ K2) = Z");
        });

    KeyMaterial witness{SchemeId::bear2, {res.chosen[0], planted.key, res.chosen[1]}};
    return finish("R-BEAR2-S", bear2, std::move(witness), std::move(res), n);
}

ReductionReport reduce_lion_stream(const Scheme& lion, const PlantedStreamEq& planted, std::size_t n,
                                   const KeyRecoveryOracle& oracle, Rng& rng) {
    const Params& p = lion.params();
    if (n == 0)
        throw dimension_error("R-LION-S: pair count must be at least 1");
    require_width(planted.z, p.r, "R-LION-S target keystream");
    require_width(planted.x, p.l, "R-LION-S target left half");
    const StreamCipher& S = lion.stream();
    const UnkeyedHash& H = lion.unkeyed_hash();
    const BitStr& z = planted.z;
    const BitStr& lv = planted.x;

    AdvResult res = run_solver(
        oracle,
        [&](AdvResult& r) {
            const BitStr k2 = random_bits(p.l, rng);
            for (const BitStr& ri : sample_distinct(n, p.r, rng)) {
                const BitStr rbar = ri ^ z;
                r.prim += 2;
                const BitStr lp = lv ^ H.digest(rbar);
                const BitStr rp = rbar ^ S.keystream(lp ^ k2, p.r);
                r.pairs.items.push_back({{lv, ri}, {lp, rp}});
            }
            r.chosen = {k2};
        },
        [&](AdvResult& r) {
            for (const KeyMaterial& cand : r.answer.keys) {
                ++r.prim;
                if (S.keystream(lv ^ cand.subkeys[0], p.r) == z) {
                    r.extracted = cand.subkeys[0];
                    r.pass = true;
                    break;
                }
            }
            if (!r.pass) note_failure(r, "S(L ^ K1) = Z");
        });

    KeyMaterial witness{SchemeId::lion, {planted.key, res.chosen[0]}};
    return finish("R-LION-S", lion, std::move(witness), std::move(res), n);
}

ReductionReport reduce_lion2_stream(const Scheme& lion2, const PlantedStreamEq& planted,
                                    std::size_t n, const KeyRecoveryOracle& oracle, Rng& rng) {
    const Params& p = lion2.params();
    if (n == 0)
        throw dimension_error("R-LION2-S: pair count must be at least 1");
    require_width(planted.z, p.r, "R-LION2-S target keystream");
    require_width(planted.x, p.l, "R-LION2-S target left half");
    const StreamCipher& S = lion2.stream();
    const KeyedHash& H = lion2.keyed_hash();
    const BitStr& z = planted.z;
    const BitStr& lv = planted.x;

    AdvResult res = run_solver(
        oracle,
        [&](AdvResult& r) {
            const BitStr k2 = random_bits(p.k, rng);
            const BitStr k3 = random_bits(p.l, rng);
            for (const BitStr& ri : sample_distinct(n, p.r, rng)) {
                const BitStr rbar = ri ^ z;
                r.prim += 2;
                const BitStr lp = lv ^ H.digest(k2, rbar);
                const BitStr rp = rbar ^ S.keystream(lp ^ k3, p.r);
                r.pairs.items.push_back({{lv, ri}, {lp, rp}});
            }
            r.chosen = {k2, k3};
        },
        [&](AdvResult& r) {
            for (const KeyMaterial& cand : r.answer.keys) {
                ++r.prim;
                if (S.keystream(lv ^ cand.subkeys[0], p.r) == z) {
                    r.extracted = cand.subkeys[0];
                    r.pass = true;
                    break;
                }
            }
            if (!r.pass) note_failure(r, "S(L ^ K1) = Z");
        });

    KeyMaterial witness{SchemeId::lion2, {planted.key, res.chosen[0], res.chosen[1]}};
    return finish("R-LION2-S", lion2, std::move(witness), std::move(res), n);
}

ReductionReport reduce_lion2_hash(const Scheme& lion2, const PlantedHashEq& planted, std::size_t n,
                                  const KeyRecoveryOracle& oracle, Rng& rng) {
    const Params& p = lion2.params();
    if (n == 0)
        throw dimension_error("R-LION2-H: pair count must be at least 1");
    require_width(planted.z, p.l, "R-LION2-H target digest");
    require_width(planted.msg, p.r, "R-LION2-H target message");
    const StreamCipher& S = lion2.stream();
    const KeyedHash& H = lion2.keyed_hash();
    const BitStr& z = planted.z;
    const BitStr& x = planted.msg;

    AdvResult res = run_solver(
        oracle,
        [&](AdvResult& r) {
            const BitStr k1 = random_bits(p.l, rng);
            const BitStr k3 = random_bits(p.l, rng);
            for (const BitStr& li : sample_distinct(n, p.l, rng)) {
                r.prim += 2;
                const BitStr ri = x ^ S.keystream(li ^ k1, p.r); // cancels to Rbar = x
                const BitStr lp = li ^ z;
                const BitStr rp = x ^ S.keystream(lp ^ k3, p.r);
                r.pairs.items.push_back({{li, ri}, {lp, rp}});
            }
            r.chosen = {k1, k3};
        },
        [&](AdvResult& r) {
            for (const KeyMaterial& cand : r.answer.keys) {
                ++r.prim;
                if (H.digest(cand.subkeys[1], x) == z) {
                    r.extracted = cand.subkeys[1];
                    r.pass = true;
                    break;
                }
            }
            if (!r.pass) note_failure(r, "H_K2(X) = Z");
        });

    KeyMaterial witness{SchemeId::lion2, {res.chosen[0], planted.key, res.chosen[1]}};
    return finish("R-LION2-H", lion2, std::move(witness), std::move(res), n);
}

ReductionReport reduce_lioness_stream(const Scheme& lioness, const PlantedStreamEq& planted,
                                      std::size_t n, const KeyRecoveryOracle& oracle, Rng& rng) {
    const Params& p = lioness.params();
    if (n == 0)
        throw dimension_error("R-LNS-S: pair count must be at least 1");
    require_width(planted.z, p.r, "R-LNS-S target keystream");
    require_width(planted.x, p.l, "R-LNS-S target left half");
    const StreamCipher& S = lioness.stream();
    const KeyedHash& H = lioness.keyed_hash();
    const BitStr& z = planted.z;
    const BitStr& lv = planted.x;

    AdvResult res = run_solver(
        oracle,
        [&](AdvResult& r) {
            const BitStr k2 = random_bits(p.k, rng);
            const BitStr k3 = random_bits(p.l, rng);
            const BitStr k4 = random_bits(p.k, rng);
            for (const BitStr& ri : sample_distinct(n, p.r, rng)) {
                const BitStr rbar = ri ^ z;
                r.prim += 3;
                const BitStr lbar = lv ^ H.digest(k2, rbar);
                const BitStr rp = rbar ^ S.keystream(lbar ^ k3, p.r);
                const BitStr lp = lbar ^ H.digest(k4, rp);
                r.pairs.items.push_back({{lv, ri}, {lp, rp}});
            }
            r.chosen = {k2, k3, k4};
        },
        [&](AdvResult& r) {
            for (const KeyMaterial& cand : r.answer.keys) {
                ++r.prim;
                if (S.keystream(lv ^ cand.subkeys[0], p.r) == z) {
                    r.extracted = cand.subkeys[0];
                    r.pass = true;
                    break;
                }
            }
            if (!r.pass) note_failure(r, "S(L ^ K1) = Z");
        });

    KeyMaterial witness{SchemeId::lioness,
                        {planted.key, res.chosen[0], res.chosen[1], res.chosen[2]}};
    return finish("R-LNS-S", lioness, std::move(witness), std::move(res), n);
}

ReductionReport reduce_lioness_hash(const Scheme& lioness, const PlantedHashEq& planted,
                                    std::size_t n, const KeyRecoveryOracle& oracle, Rng& rng) {
    const Params& p = lioness.params();
    if (n == 0)
        throw dimension_error("R-LNS-H: pair count must be at least 1");
    require_width(planted.z, p.l, "R-LNS-H target digest");
    require_width(planted.msg, p.r, "R-LNS-H target message");
    const StreamCipher& S = lioness.stream();
    const KeyedHash& H = lioness.keyed_hash();
    const BitStr& z = planted.z;
    const BitStr& rp_shared = planted.msg;

    AdvResult res = run_solver(
        oracle,
        [&](AdvResult& r) {
            const BitStr k1 = random_bits(p.l, rng);
            const BitStr k2 = random_bits(p.k, rng);
            const BitStr k3 = random_bits(p.l, rng);
            // walk the decryption column, substituting z for the one digest
            // whose key is the unknown
            for (const BitStr& lpi : sample_distinct(n, p.l, rng)) {
                const BitStr lbar = lpi ^ z;
                r.prim += 3;
                const BitStr rbar = rp_shared ^ S.keystream(lbar ^ k3, p.r);
                const BitStr li = lbar ^ H.digest(k2, rbar);
                const BitStr ri = rbar ^ S.keystream(li ^ k1, p.r);
                r.pairs.items.push_back({{li, ri}, {lpi, rp_shared}});
            }
            r.chosen = {k1, k2, k3};
        },
        [&](AdvResult& r) {
            for (const KeyMaterial& cand : r.answer.keys) {
                ++r.prim;
                if (H.digest(cand.subkeys[3], rp_shared) == z) {
                    r.extracted = cand.subkeys[3];
                    r.pass = true;
                    break;
                }
            }
            if (!r.pass) note_failure(r, "H_K4(R') = Z");
        });

    KeyMaterial witness{SchemeId::lioness,
                        {res.chosen[0], res.chosen[1], res.chosen[2], planted.key}};
    return finish("R-LNS-H", lioness, std::move(witness), std::move(res), n);
}

Scheme toy_scheme_for(TaskId id, const Params& p) {
    switch (task_scheme(id)) {
    case SchemeId::bear: return Scheme::bear(p, toy_stream(p.l), toy_keyed_hash(p.l, p.k));
    case SchemeId::lion: return Scheme::lion(p, toy_stream(p.l), toy_hash(p.l));
    case SchemeId::lioness: return Scheme::lioness(p, toy_stream(p.l), toy_keyed_hash(p.l, p.k));
    case SchemeId::bear2: return Scheme::bear2(p, toy_stream(p.l), toy_keyed_hash(p.l, p.k));
    case SchemeId::lion2: return Scheme::lion2(p, toy_stream(p.l), toy_keyed_hash(p.l, p.k));
    }
    throw dimension_error("unknown scheme id");
}

std::vector<ReductionReport> run_trial(const TrialConfig& cfg, std::uint64_t trial_seed) {
    const Scheme scheme = toy_scheme_for(cfg.id, cfg.params);
    const BruteForceOracle oracle(scheme, cfg.mode, cfg.max_key_bits, cfg.threads);
    Rng rng(trial_seed);
    const std::size_t n = task_is_single_pair(cfg.id) ? 1 : cfg.n;

    std::vector<ReductionReport> out;
    switch (cfg.id) {
    case TaskId::lion_seed_single:
        out.push_back(reduce_lion_seed_single(scheme, plant_seed_recovery(scheme, rng), oracle, rng));
        break;
    case TaskId::lion_hash_single:
        out.push_back(reduce_lion_hash_single(scheme, HashMode::collision, std::nullopt, oracle, rng));
        out.push_back(reduce_lion_hash_single(scheme, HashMode::preimage,
                                              plant_solvable_preimage(scheme, rng), oracle, rng));
        break;
    case TaskId::bear_hash:
        out.push_back(reduce_bear_hash(scheme, plant_hash_equation(scheme, rng), n, oracle, rng));
        break;
    case TaskId::bear2_hash:
        out.push_back(reduce_bear2_hash(scheme, plant_hash_equation(scheme, rng), n, oracle, rng));
        break;
    case TaskId::bear2_stream:
        out.push_back(reduce_bear2_stream(scheme, plant_stream_equation(scheme, rng), n, oracle, rng));
        break;
    case TaskId::lion_stream:
        out.push_back(reduce_lion_stream(scheme, plant_stream_equation(scheme, rng), n, oracle, rng));
        break;
    case TaskId::lion2_stream:
        out.push_back(reduce_lion2_stream(scheme, plant_stream_equation(scheme, rng), n, oracle, rng));
        break;
    case TaskId::lion2_hash:
        out.push_back(reduce_lion2_hash(scheme, plant_hash_equation(scheme, rng), n, oracle, rng));
        break;
    case TaskId::lioness_stream:
        out.push_back(
            reduce_lioness_stream(scheme, plant_stream_equation(scheme, rng), n, oracle, rng));
        break;
    case TaskId::lioness_hash:
        out.push_back(reduce_lioness_hash(scheme, plant_hash_equation(scheme, rng), n, oracle, rng));
        break;
    }
    for (ReductionReport& rep : out)
        rep.seed = trial_seed;
    return out;
}

} // namespace lblk
