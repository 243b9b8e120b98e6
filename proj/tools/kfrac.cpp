// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kfrac/kfrac.h"

namespace {

struct Failure {
    kf_status status;
    std::string message;
};

void check(kf_status s) {
    if (s != KF_OK) throw Failure{s, kf_last_error()};
}

// Owning wrappers so early exits do not leak handles.
template <class T, void (*Destroy)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { Destroy(p); }
    T** out() { return &p; }
    T* get() const { return p; }
};
using Field = Handle<kf_field, kf_field_destroy>;
using Word = Handle<kf_word, kf_word_destroy>;
using Text = Handle<kf_text, kf_text_destroy>;
using Profile = Handle<kf_profile, kf_profile_destroy>;

std::vector<uint32_t> parse_list(const std::string& s) {
    std::vector<uint32_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(static_cast<uint32_t>(std::stoul(item)));
    return out;
}

struct FieldOpts {
    unsigned q = 2, p = 0, e = 1;
    std::string modulus;

    void add(CLI::App* app) {
        app->add_option("--q", q, "Field order (prime power)");
        app->add_option("--p", p, "Field characteristic; overrides --q together with --e");
        app->add_option("--e", e, "Extension degree");
        app->add_option("--modulus", modulus, "Monic modulus, comma-separated, constant term first");
    }

    void make(Field& f) const {
        if (p != 0) {
            const std::vector<uint32_t> mod = parse_list(modulus);
            check(kf_field_create(p, e, mod.empty() ? nullptr : mod.data(), mod.size(), f.out()));
        } else if (!modulus.empty()) {
            throw Failure{KF_E_INVALID_ARGUMENT, "--modulus needs --p and --e"};
        } else {
            check(kf_field_create_q(q, f.out()));
        }
    }
};

struct InputOpts {
    std::string path = "-";
    std::string word;
    std::size_t generate = 0;
    std::string format = "ascii";
    std::string bit_order = "msb-first";
    std::size_t limit = 0;
    uint64_t seed = 0;

    void add(CLI::App* app) {
        app->add_option("input", path, "Input file, '-' for stdin");
        app->add_option("--word", word, "Inline input instead of a file");
        app->add_option("--generate", generate, "Use N uniform random symbols instead of a file");
        app->add_option("--format", format, "Input format")->check(CLI::IsMember({"ascii", "hex", "raw"}));
        app->add_option("--bit-order", bit_order, "Bit order inside hex digits and raw bytes")
            ->check(CLI::IsMember({"msb", "lsb", "msb-first", "lsb-first"}));
        app->add_option("--limit", limit, "Read at most this many symbols");
        app->add_option("--seed", seed, "Seed for --generate");
    }

    void read(unsigned q, Word& w) const {
        if (generate) {
            check(kf_word_random(q, generate, seed, w.out()));
            return;
        }
        std::string data = word;
        if (word.empty()) {
            if (path == "-") {
                data.assign(std::istreambuf_iterator<char>(std::cin), {});
            } else {
                std::ifstream in(path, std::ios::binary);
                if (!in) throw Failure{KF_E_IO, "cannot open " + path};
                data.assign(std::istreambuf_iterator<char>(in), {});
            }
        }
        const kf_format fmt = format == "hex" ? KF_FORMAT_HEX : format == "raw" ? KF_FORMAT_RAW : KF_FORMAT_ASCII;
        const kf_bit_order order = bit_order.rfind("lsb", 0) == 0 ? KF_LSB_FIRST : KF_MSB_FIRST;
        check(kf_word_parse(data.data(), data.size(), fmt, order, q, limit, w.out()));
    }
};

void emit(const std::string& path, const char* data, std::size_t len) {
    if (path.empty() || path == "-") {
        std::fwrite(data, 1, len, stdout);
        std::fflush(stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Failure{KF_E_IO, "cannot write " + path};
    out.write(data, static_cast<std::streamsize>(len));
    if (!out) throw Failure{KF_E_IO, "write failed for " + path};
}

void emit(const std::string& path, const Text& t) { emit(path, kf_text_data(t.get()), kf_text_length(t.get())); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continued-fraction isometry, complexity profiles and 2-adic approximation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kf_version()));

    FieldOpts fo;
    InputOpts io;
    std::string out;
    bool emit_k = false;

    auto* profile = app.add_subcommand("profile", "Linear complexity profile as CSV");
    auto* kmap = app.add_subcommand("kmap", "K(a) with the D/C position map as CSV");
    auto* iterate = app.add_subcommand("iterate", "K applied repeatedly, plus the diagonal word");
    auto* shifted = app.add_subcommand("shifted", "K of every suffix");
    auto* adic = app.add_subcommand("adic", "2-adic approximation profile as CSV");
    for (auto* sc : {profile, kmap, iterate, shifted, adic}) {
        fo.add(sc);
        io.add(sc);
        sc->add_option("--out", out, "Output file (default stdout)");
    }
    profile->add_flag("--emit-k", emit_k, "Add K, K_D and K_C columns");
    bool denominators = false;
    kmap->add_flag("--denominators", denominators, "Print the partial denominators as JSON instead");
    unsigned k_max = 3;
    iterate->add_option("--k", k_max, "Number of applications");
    std::string tie = "canonical";
    adic->add_option("--tie", tie, "Tie-break for fresh minimal pairs")
        ->check(CLI::IsMember({"canonical", "alternate"}));

    auto* stats = app.add_subcommand("stats", "Exact closed forms as JSON");
    stats->require_subcommand(1);
    unsigned sq = 2;
    long st = 0, sm = 0, sk = 0, sl = 0, kmax = 4;
    std::string pattern;
    auto* s_count = stats->add_subcommand("count", "Number of words of length t with deviation m");
    s_count->add_option("--t", st)->required();
    s_count->add_option("--m", sm)->required();
    auto* s_mean = stats->add_subcommand("meanJ", "Mean jump complexity at length t");
    s_mean->add_option("--t", st)->required();
    auto* s_delta = stats->add_subcommand("delta", "Mean passage time from deviation k to l");
    s_delta->add_option("--k", sk)->required();
    s_delta->add_option("--l", sl)->required();
    auto* s_pattern = stats->add_subcommand("pattern", "Frequency of a deviation pattern");
    s_pattern->add_option("--pattern", pattern, "Comma-separated deviations m0,...,mk")->required();
    auto* s_stat = stats->add_subcommand("stationary", "Chain densities against 1/Delta(k,k)");
    s_stat->add_option("--kmax", kmax);
    for (auto* sc : {s_count, s_mean, s_delta, s_pattern, s_stat}) {
        sc->add_option("--q", sq, "Field order");
        sc->add_option("--out", out, "Output file (default stdout)");
    }

    auto* mc = app.add_subcommand("montecarlo", "Seeded trajectories: CSV plus JSON summary");
    kf_mc_config cfg;
    kf_mc_config_default(&cfg);
    std::string functional = "J_deviation", sampling = "image", summary;
    mc->add_option("--functional", functional)
        ->check(CLI::IsMember({"J_deviation", "m_plus", "Z_runs", "adic_mA"}));
    mc->add_option("--q", cfg.q);
    mc->add_option("--n", cfg.n, "Input length");
    mc->add_option("--trials", cfg.trials);
    mc->add_option("--seed", cfg.seed);
    mc->add_option("--chunks", cfg.parallel_chunks, "Worker threads; results do not depend on it");
    mc->add_option("--sampling", sampling)->check(CLI::IsMember({"image", "direct"}));
    mc->add_option("--eps", cfg.eps);
    mc->add_option("--stride", cfg.stride, "CSV decimation (0: about 1024 rows per trial)");
    mc->add_option("--t-min", cfg.t_min, "Start of the window for the sup statistic");
    mc->add_option("--out", out, "Trajectory CSV (omitted when not given)");
    mc->add_option("--summary", summary, "Summary JSON (default stdout)");

    auto* verify = app.add_subcommand("verify", "Exhaustive checks; exit 0 iff all hold");
    std::string suite;
    unsigned vq = 2, bound = 0;
    verify->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"counting", "equidist", "translation", "isometry", "adic-oracle"}));
    verify->add_option("--q", vq);
    verify->add_option("--t", bound, "Length bound (counting)");
    verify->add_option("--n", bound, "Length bound (equidist, translation, isometry)");
    verify->add_option("--k", bound, "Length bound (adic-oracle)");
    verify->add_option("--out", out, "Report file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        Text text;
        if (*profile || *kmap || *iterate || *shifted || *adic) {
            Field f;
            fo.make(f);
            Word w;
            io.read(kf_field_order(f.get()), w);
            if (*profile) {
                Profile p;
                check(kf_profile_create(f.get(), w.get(), p.out()));
                check(kf_profile_csv(p.get(), emit_k ? 1 : 0, text.out()));
            } else if (*kmap) {
                check(denominators ? kf_expand_json(f.get(), w.get(), text.out())
                                   : kf_kmap_csv(f.get(), w.get(), text.out()));
            } else if (*iterate) {
                check(kf_iterate_csv(f.get(), w.get(), k_max, text.out()));
            } else if (*shifted) {
                check(kf_shifted_csv(f.get(), w.get(), text.out()));
            } else {
                if (kf_field_order(f.get()) != 2) throw Failure{KF_E_INVALID_ARGUMENT, "adic needs q = 2"};
                check(kf_adic_csv(w.get(), tie == "alternate" ? KF_TIE_ALTERNATE : KF_TIE_CANONICAL, text.out()));
            }
            emit(out, text);
            return 0;
        }
        if (*stats) {
            if (*s_count) check(kf_stats_count(sq, st, sm, text.out()));
            if (*s_mean) check(kf_stats_mean_j(sq, st, text.out()));
            if (*s_delta) check(kf_stats_delta(sq, sk, sl, text.out()));
            if (*s_pattern) {
                std::vector<long> pat;
                std::stringstream ss(pattern);
                std::string item;
                while (std::getline(ss, item, ',')) pat.push_back(std::stol(item));
                check(kf_stats_pattern(sq, pat.data(), pat.size(), text.out()));
            }
            if (*s_stat) check(kf_stats_stationary(sq, kmax, text.out()));
            emit(out, text);
            return 0;
        }
        if (*mc) {
            cfg.direct = sampling == "direct";
            Text csv;
            check(kf_montecarlo(&cfg, functional.c_str(), out.empty() ? nullptr : csv.out(), text.out()));
            if (!out.empty()) emit(out, csv);
            emit(summary, text);
            return 0;
        }
        if (*verify) {
            int passed = 0;
            check(kf_verify(suite.c_str(), vq, bound, text.out(), &passed));
            emit(out, text);
            return passed ? 0 : 1;
        }
    } catch (const Failure& e) {
        std::cerr << "kfrac: " << e.message << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "kfrac: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
