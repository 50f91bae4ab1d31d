// lblk — wide-block cipher toolkit.
//
// Subcommands: encrypt/decrypt files with the production primitives, run
// the key-recovery reduction demos at desk scale, and run the exhaustive
// analysis tools. Exit codes: 0 success, 2 usage, 3 format, 4 dimension or
// work cap, 5 verification failure.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "lblk/analysis.hpp"
#include "lblk/fileformat.hpp"
#include "lblk/reductions.hpp"

namespace {

using namespace lblk;

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw format_error("cannot open '" + path + "' for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad())
        throw format_error("failed reading '" + path + "'");
    return bytes;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw format_error("cannot open '" + path + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw format_error("failed writing '" + path + "'");
}

void write_text(const std::string& path, const std::string& text) {
    write_file(path, std::span<const std::uint8_t>(
                         reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::string format_fraction(std::uint64_t num, std::uint64_t den) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%llu/%llu\t%.6f", static_cast<unsigned long long>(num),
                  static_cast<unsigned long long>(den),
                  den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den));
    return buf;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s)
        h = (h ^ c) * 1099511628211ull;
    return h;
}

// Per-trial seeds depend only on (base seed, task, n, trial), so a report
// line is reproducible no matter which task subset was selected.
std::uint64_t trial_seed(std::uint64_t base, const std::string& task, std::size_t n,
                         std::size_t trial) {
    return mix64(base ^ mix64(fnv1a(task)) ^ mix64(0x9E3779B97F4A7C15ull * n + trial));
}

struct ReduceOptions {
    std::string theorem = "all";
    std::size_t l = 4, r = 8, k = 5;
    std::size_t n = 1;
    std::size_t trials = 100;
    std::string mode = "all-consistent";
    std::uint64_t seed = 1;
    std::string out_path;
    std::uint64_t max_key_bits = kDefaultKeyBitsCap;
    unsigned threads = 1;
};

int cmd_reduce(const ReduceOptions& opt) {
    std::vector<TaskId> tasks;
    if (opt.theorem == "all")
        tasks.assign(std::begin(kAllTasks), std::end(kAllTasks));
    else
        tasks.push_back(task_from_name(opt.theorem));

    const Params params{opt.l, opt.r, opt.k};
    const OracleMode mode = oracle_mode_from_name(opt.mode);

    // surface cap violations before any work
    for (TaskId id : tasks) {
        std::size_t bits = 0;
        for (std::size_t w : subkey_widths(task_scheme(id), params))
            bits += w;
        if (bits > opt.max_key_bits)
            throw cap_error(std::string(task_name(id)) + ": key space is 2^" +
                            std::to_string(bits) + ", above the key-space cap of 2^" +
                            std::to_string(opt.max_key_bits) +
                            " (raise --max-key-bits or shrink the dimensions)");
        validate_params(task_scheme(id), params);
    }

    std::string report;
    struct Counter {
        std::size_t pass = 0, total = 0;
    };
    std::map<std::string, Counter> summary;
    bool all_pass = true;

    for (TaskId id : tasks) {
        TrialConfig cfg;
        cfg.id = id;
        cfg.params = params;
        cfg.n = opt.n;
        cfg.mode = mode;
        cfg.max_key_bits = opt.max_key_bits;
        cfg.threads = opt.threads;
        const std::size_t n_eff = task_is_single_pair(id) ? 1 : opt.n;
        for (std::size_t t = 0; t < opt.trials; ++t) {
            const std::uint64_t ts = trial_seed(opt.seed, task_name(id), n_eff, t);
            for (const ReductionReport& rep : run_trial(cfg, ts)) {
                report += rep.tsv_line();
                std::string key = rep.task;
                if (!rep.variant.empty())
                    key += "/" + rep.variant;
                auto& c = summary[key];
                ++c.total;
                if (rep.pass)
                    ++c.pass;
                else
                    all_pass = false;
            }
        }
    }

    if (opt.out_path.empty())
        std::cout << report;
    else
        write_text(opt.out_path, report);

    for (const auto& [name, c] : summary) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-20s mode=%s n=%zu trials=%zu pass=%zu/%zu (%.2f)",
                      name.c_str(), opt.mode.c_str(), opt.n, opt.trials, c.pass, c.total,
                      c.total == 0 ? 0.0 : static_cast<double>(c.pass) / c.total);
        std::cerr << buf << "\n";
    }
    return all_pass ? 0 : 5;
}

std::shared_ptr<const StreamCipher> stream_by_name(const std::string& name, std::size_t l) {
    if (name == "toy") return toy_stream(l);
    if (name == "stub") return stub_stream(l);
    throw dimension_error("unknown stream '" + name + "' (expected toy or stub)");
}

std::shared_ptr<const UnkeyedHash> hash_by_name(const std::string& name, std::size_t l) {
    if (name == "toy") return toy_hash(l);
    if (name == "stub") return stub_hash(l);
    throw dimension_error("unknown hash '" + name + "' (expected toy or stub)");
}

std::shared_ptr<const KeyedHash> keyed_hash_by_name(const std::string& name, std::size_t l,
                                                    std::size_t k) {
    if (name == "toy") return toy_keyed_hash(l, k);
    if (name == "stub") return stub_keyed_hash(l, k);
    if (name == "key-echo") return key_echo_hash(l, k);
    throw dimension_error("unknown keyed hash '" + name + "' (expected toy, stub or key-echo)");
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wide-block cipher toolkit (BEAR / LION / LIONESS / BEAR2 / LION2)"};
    app.require_subcommand(1);

    // encrypt / decrypt
    std::string scheme_name_arg, key_path, in_path, out_path;
    auto add_file_opts = [&](CLI::App* cmd) {
        cmd->add_option("--scheme", scheme_name_arg, "bear, lion, lioness, bear2 or lion2")
            ->required();
        cmd->add_option("--key", key_path, "raw key file of the exact per-scheme length")
            ->required();
        cmd->add_option("--in", in_path, "input file")->required();
        cmd->add_option("--out", out_path, "output file")->required();
    };
    CLI::App* enc = app.add_subcommand("encrypt", "encrypt one file as one wide block");
    add_file_opts(enc);
    CLI::App* dec = app.add_subcommand("decrypt", "decrypt an encrypted container");
    add_file_opts(dec);

    // reduce
    ReduceOptions ropt;
    CLI::App* red = app.add_subcommand("reduce", "run key-recovery reduction demos at toy scale");
    red->add_option("--theorem", ropt.theorem, "task id (e.g. R-LION-S) or 'all'");
    red->add_option("--l", ropt.l, "left-half bits");
    red->add_option("--r", ropt.r, "right-half bits");
    red->add_option("--k", ropt.k, "key-half bits");
    red->add_option("--n", ropt.n, "pairs per trial for multi-pair tasks");
    red->add_option("--trials", ropt.trials, "trials per task");
    red->add_option("--mode", ropt.mode, "all-consistent or first-consistent");
    red->add_option("--seed", ropt.seed, "base seed for all trial randomness");
    red->add_option("--out", ropt.out_path, "report file (default: stdout)");
    red->add_option("--max-key-bits", ropt.max_key_bits, "key-space cap for the oracle");
    red->add_option("--threads", ropt.threads, "oracle scan workers");

    // analyze
    CLI::App* ana = app.add_subcommand("analyze", "exhaustive structure measurements");
    ana->require_subcommand(1);
    std::string a_stream = "toy", a_hash = "toy";
    std::size_t a_l = 4, a_r = 8, a_k = 5, a_samples = 100, a_hist_samples = 0;
    std::uint64_t a_seed = 1;
    std::string a_out;
    bool a_exhaustive = false;

    CLI::App* img = ana->add_subcommand("image", "exact image of a stream cipher");
    img->add_option("--stream", a_stream, "toy or stub");
    img->add_option("--l", a_l, "seed bits");
    img->add_option("--r", a_r, "output bits");
    img->add_option("--out", a_out, "report file (default: stdout)");

    CLI::App* gp = ana->add_subcommand("good-pairing", "reachable digest fraction of (S, H)");
    gp->add_option("--stream", a_stream, "toy or stub");
    gp->add_option("--hash", a_hash, "toy or stub");
    gp->add_option("--l", a_l, "digest bits");
    gp->add_option("--r", a_r, "message bits");
    gp->add_option("--hist-samples", a_hist_samples,
                   "sample count for the preimage census when 2^r is too large");
    gp->add_option("--seed", a_seed, "seed for sampled censuses");
    gp->add_option("--out", a_out, "report file (default: stdout)");

    CLI::App* surj = ana->add_subcommand("surjectivity", "fraction of R with K -> H_K(R) onto");
    surj->add_option("--hash", a_hash, "toy, stub or key-echo");
    surj->add_option("--l", a_l, "digest bits");
    surj->add_option("--r", a_r, "message bits");
    surj->add_option("--k", a_k, "key bits");
    surj->add_option("--samples", a_samples, "number of sampled R values");
    surj->add_flag("--exhaustive", a_exhaustive, "sweep every R instead of sampling");
    surj->add_option("--seed", a_seed, "seed for R sampling");
    surj->add_option("--out", a_out, "report file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(enc)) {
            const SchemeId id = scheme_from_name(scheme_name_arg);
            write_file(out_path, encrypt_file_bytes(id, read_file(key_path), read_file(in_path)));
        } else if (app.got_subcommand(dec)) {
            const SchemeId id = scheme_from_name(scheme_name_arg);
            write_file(out_path, decrypt_file_bytes(id, read_file(key_path), read_file(in_path)));
        } else if (app.got_subcommand(red)) {
            return cmd_reduce(ropt);
        } else if (app.got_subcommand(ana)) {
            std::ostringstream os;
            if (ana->got_subcommand(img)) {
                const auto image = image_of_stream(*stream_by_name(a_stream, a_l), a_l, a_r);
                os << "image\t" << a_stream << "\t" << a_l << "\t" << a_r << "\t"
                   << image.outputs.size() << "\n";
            } else if (ana->got_subcommand(gp)) {
                Rng rng(a_seed);
                const auto prof = good_pairing_profile(*stream_by_name(a_stream, a_l),
                                                       *hash_by_name(a_hash, a_l), a_l, a_r,
                                                       a_hist_samples, &rng);
                const char* hist = prof.hist_status == HistStatus::exact     ? "exact"
                                   : prof.hist_status == HistStatus::sampled ? "sampled"
                                                                             : "skipped";
                os << "good-pairing\t" << a_stream << "\t" << a_hash << "\t" << a_l << "\t" << a_r
                   << "\t" << format_fraction(prof.covered, prof.total) << "\t" << prof.image_size
                   << "\t" << hist << "\n";
                for (const auto& [size, count] : prof.preimage_hist)
                    os << "preimage-size\t" << size << "\t" << count << "\n";
            } else {
                Rng rng(a_seed);
                const auto rep = hr_surjectivity(*keyed_hash_by_name(a_hash, a_l, a_k), a_l, a_r,
                                                 a_samples, rng, a_exhaustive);
                os << "surjectivity\t" << a_hash << "\t" << a_l << "\t" << a_k << "\t"
                   << format_fraction(rep.surjective, rep.examined) << "\t"
                   << (rep.exhaustive ? "exhaustive" : "sampled") << "\n";
            }
            emit(a_out, os.str());
        }
    } catch (const format_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const dimension_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
