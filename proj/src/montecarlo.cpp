#include "kfrac/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "kfrac/adic2.hpp"
#include "kfrac/cfrac.hpp"
#include "kfrac/error.hpp"

namespace kfrac {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Word draw(SymbolSource& src, std::size_t n) {
    Word w(n);
    for (auto& x : w) x = src.next();
    return w;
}

struct Walk {
    Word KD;
    std::vector<long> m;  // m(1..n)
    long J = 0;
};

Walk walk(const Word& b) {
    Walk w;
    w.m.reserve(b.size());
    w.KD.reserve(b.size() / 2 + 1);
    long m = 0;
    for (Elem x : b) {
        if (m - 1 < 0) w.KD.push_back(x);
        if (m <= 0 && x != 0) {
            m = 1 - m;
            ++w.J;
        } else {
            m = m - 1;
        }
        w.m.push_back(m);
    }
    return w;
}

double lil_norm(double t) { return std::sqrt(2.0 * t * std::log(std::log(t))); }

struct Shape {
    std::size_t horizon;
    std::size_t stride;
};

Shape shape_of(const MCConfig& cfg, Functional fn) {
    const bool half = fn == Functional::J_deviation || fn == Functional::Z_runs;
    Shape s;
    s.horizon = half ? cfg.n / 2 : cfg.n;
    s.stride = cfg.stride ? cfg.stride : std::max<std::size_t>(1, s.horizon / 1024);
    return s;
}

MCTrial run_trial(const MCConfig& cfg, Functional fn, const Field& field, std::size_t index, const Shape& sh) {
    SplitMix64 eng = trial_engine(cfg.seed, index);
    SymbolSource src(eng, cfg.q);
    const std::size_t H = sh.horizon;
    std::vector<long> values(H);
    MCTrial tr;
    const double p = static_cast<double>(cfg.q - 1) / cfg.q;
    const double spread = std::sqrt(p * (1 - p));

    // Tracks the sup statistic and the LIL band on value(t)/scale.
    auto lil_pass = [&](double scale) {
        tr.within_lower = tr.within_upper = true;
        for (std::size_t t = cfg.t_min; t <= H; ++t) {
            const double x = static_cast<double>(values[t - 1]) / scale;
            const double td = static_cast<double>(t);
            tr.sup_norm = std::max(tr.sup_norm, std::abs(x) / lil_norm(td));
            const double s = x / std::sqrt(td);
            if (s > levy_eval({LevyFamily::LIL_UUC, cfg.eps}, td)) tr.within_upper = false;
            if (s < levy_eval({LevyFamily::LIL_LLC, cfg.eps}, td)) tr.within_lower = false;
        }
    };

    switch (fn) {
        case Functional::J_deviation:
        case Functional::Z_runs: {
            const Word b = cfg.sampling == Sampling::image ? draw(src, cfg.n) : K(field, draw(src, cfg.n));
            const Walk w = walk(b);
            tr.J_final = w.J;
            if (fn == Functional::J_deviation) {
                long nonzero = 0;
                for (std::size_t t = 1; t <= H; ++t) {
                    if (w.KD[t - 1] != 0) ++nonzero;
                    values[t - 1] = static_cast<long>(cfg.q) * nonzero - static_cast<long>(cfg.q - 1) * static_cast<long>(t);
                }
                // value/q = N_D(t) - t p; dividing by sqrt(p(1-p)) gives the coin-tossing walk.
                lil_pass(static_cast<double>(cfg.q) * spread);
            } else {
                long run = 0, best = 0;
                for (std::size_t t = 1; t <= H; ++t) {
                    run = w.KD[t - 1] == 0 ? run + 1 : 0;
                    best = std::max(best, run);
                    values[t - 1] = best;
                }
                const double N = static_cast<double>(H);
                tr.within_lower = static_cast<double>(best) >= levy_eval({LevyFamily::RUN_LUC, cfg.eps}, N);
                tr.within_upper = static_cast<double>(best) <= levy_eval({LevyFamily::RUN_UUC, cfg.eps}, N);
            }
            break;
        }
        case Functional::m_plus: {
            const Word b = cfg.sampling == Sampling::image ? draw(src, cfg.n) : K(field, draw(src, cfg.n));
            const Walk w = walk(b);
            tr.J_final = w.J;
            long best = 0;
            for (std::size_t t = 1; t <= H; ++t) {
                best = std::max(best, std::labs(w.m[t - 1]));
                values[t - 1] = best;
            }
            const double N = static_cast<double>(H);
            tr.within_lower = static_cast<double>(best) >= levy_eval({LevyFamily::MPLUS_LUC, cfg.eps}, N);
            tr.within_upper = static_cast<double>(best) <= levy_eval({LevyFamily::MPLUS_UUC, cfg.eps}, N);
            break;
        }
        case Functional::adic_mA: {
            long J = 0;
            if (cfg.sampling == Sampling::image) {
                for (std::size_t t = 1; t <= H; ++t) {
                    J += src.next();
                    values[t - 1] = 2 * J - static_cast<long>(t);
                }
            } else {
                AdicState st;
                for (std::size_t t = 1; t <= H; ++t) {
                    J += st.step(src.next());
                    values[t - 1] = 2 * J - static_cast<long>(t);
                }
            }
            lil_pass(1.0);
            break;
        }
    }
    tr.final_value = H ? values[H - 1] : 0;
    for (std::size_t t = sh.stride; t <= H; t += sh.stride) tr.trajectory.emplace_back(t, values[t - 1]);
    if (H && (tr.trajectory.empty() || tr.trajectory.back().first != H)) tr.trajectory.emplace_back(H, values[H - 1]);
    return tr;
}

}  // namespace

SplitMix64::result_type SplitMix64::operator()() {
    std::uint64_t x = (state_ += 0x9e3779b97f4a7c15ULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

SplitMix64 trial_engine(std::uint64_t seed, std::size_t trial) {
    SplitMix64 mixer(seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1));
    return SplitMix64(mixer());
}

Word random_symbols(unsigned q, std::size_t n, std::uint64_t seed) {
    require(q >= 2, ErrorCode::InvalidArgument, "q must be at least 2");
    SplitMix64 eng(seed);
    SymbolSource src(eng, q);
    return draw(src, n);
}

Elem SymbolSource::next() {
    if (q_ == 2) {
        if (left_ == 0) {
            bits_ = eng_();
            left_ = 64;
        }
        const Elem b = static_cast<Elem>(bits_ & 1);
        bits_ >>= 1;
        --left_;
        return b;
    }
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / q_ * q_;
    std::uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return static_cast<Elem>(x % q_);
}

MCResult monte_carlo(const MCConfig& cfg, Functional fn) {
    require(cfg.trials >= 1, ErrorCode::InvalidArgument, "trials must be at least 1");
    require(cfg.parallel_chunks >= 1, ErrorCode::InvalidArgument, "parallel_chunks must be at least 1");
    require(cfg.t_min >= 16, ErrorCode::InvalidArgument, "t_min must be at least 16");
    const Field field = field_of_order(cfg.q);
    if (fn == Functional::adic_mA) require(cfg.q == 2, ErrorCode::InvalidArgument, "adic_mA needs q = 2");
    const Shape sh = shape_of(cfg, fn);
    const bool lil = fn == Functional::J_deviation || fn == Functional::adic_mA;
    const std::size_t need = lil ? cfg.t_min : static_cast<std::size_t>(
        levy_n_min(fn == Functional::m_plus ? LevyFamily::MPLUS_UUC : LevyFamily::RUN_UUC));
    require(sh.horizon >= need, ErrorCode::Domain, "horizon too short for the boundary families");

    MCResult res;
    res.cfg = cfg;
    res.functional = fn;
    res.horizon = sh.horizon;
    res.trials.resize(cfg.trials);

    const unsigned chunks = static_cast<unsigned>(std::min<std::size_t>(cfg.parallel_chunks, cfg.trials));
    auto work = [&](unsigned c) {
        for (std::size_t i = c; i < cfg.trials; i += chunks) res.trials[i] = run_trial(cfg, fn, field, i, sh);
    };
    if (chunks == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned c = 0; c < chunks; ++c) pool.emplace_back(work, c);
        for (auto& t : pool) t.join();
    }

    // Sequential reduction in trial order keeps the summary bit-identical.
    const double T = static_cast<double>(cfg.trials);
    double sum = 0, sum2 = 0, lil_in = 0, within = 0;
    std::size_t below = 0, above = 0;
    for (const MCTrial& tr : res.trials) {
        const double x = fn == Functional::J_deviation ? static_cast<double>(tr.J_final) : static_cast<double>(tr.final_value);
        sum += x;
        sum2 += x * x;
        if (tr.sup_norm >= 0.7 && tr.sup_norm <= 1.3) lil_in += 1;
        if (tr.within_lower && tr.within_upper) within += 1;
        if (!tr.within_lower) ++below;
        if (!tr.within_upper) ++above;
    }
    res.mean = sum / T;
    res.variance = cfg.trials > 1 ? (sum2 - T * res.mean * res.mean) / (T - 1) : 0.0;
    const double p = static_cast<double>(cfg.q - 1) / cfg.q;
    const double H = static_cast<double>(sh.horizon);
    switch (fn) {
        case Functional::J_deviation:
            res.theory_mean = expected_J(static_cast<long>(cfg.n), cfg.q).get_d();
            res.theory_variance = H * p * (1 - p);
            break;
        case Functional::adic_mA:
            res.theory_mean = 0;
            res.theory_variance = H;
            break;
        default:
            res.theory_mean = res.theory_variance = kNaN;
    }
    res.z_mean = (std::isnan(res.theory_mean) || res.variance <= 0)
                     ? kNaN
                     : (res.mean - res.theory_mean) / std::sqrt(res.variance / T);
    res.lil_fraction = lil ? lil_in / T : kNaN;

    MCBand band;
    switch (fn) {
        case Functional::J_deviation:
        case Functional::adic_mA:
            band = {"LIL", "LIL_LLC", "LIL_UUC", levy_eval({LevyFamily::LIL_LLC, cfg.eps}, H),
                    levy_eval({LevyFamily::LIL_UUC, cfg.eps}, H)};
            break;
        case Functional::Z_runs:
            band = {"RUN", "RUN_LUC", "RUN_UUC", levy_eval({LevyFamily::RUN_LUC, cfg.eps}, H),
                    levy_eval({LevyFamily::RUN_UUC, cfg.eps}, H)};
            break;
        case Functional::m_plus:
            band = {"MPLUS", "MPLUS_LUC", "MPLUS_UUC", levy_eval({LevyFamily::MPLUS_LUC, cfg.eps}, H),
                    levy_eval({LevyFamily::MPLUS_UUC, cfg.eps}, H)};
            break;
    }
    band.fraction_within = within / T;
    band.below = below;
    band.above = above;
    res.bands.push_back(band);
    return res;
}

std::string to_string(Functional f) {
    switch (f) {
        case Functional::J_deviation: return "J_deviation";
        case Functional::m_plus: return "m_plus";
        case Functional::Z_runs: return "Z_runs";
        case Functional::adic_mA: return "adic_mA";
    }
    return "?";
}

Functional functional_from_string(const std::string& name) {
    for (Functional f : {Functional::J_deviation, Functional::m_plus, Functional::Z_runs, Functional::adic_mA})
        if (to_string(f) == name) return f;
    fail(ErrorCode::Parse, "unknown functional '" + name + "'");
}

std::string mc_csv(const MCResult& r) {
    std::ostringstream os;
    os << "trial,t,value\n";
    for (std::size_t i = 0; i < r.trials.size(); ++i)
        for (const auto& [t, v] : r.trials[i].trajectory) os << i << ',' << t << ',' << v << '\n';
    return os.str();
}

std::string mc_json(const MCResult& r) {
    using nlohmann::ordered_json;
    auto num = [](double x) { return std::isnan(x) ? ordered_json(nullptr) : ordered_json(x); };
    ordered_json j;
    j["schema"] = 1;
    j["functional"] = to_string(r.functional);
    j["q"] = r.cfg.q;
    j["n"] = r.cfg.n;
    j["trials"] = r.cfg.trials;
    j["seed"] = r.cfg.seed;
    j["sampling"] = r.cfg.sampling == Sampling::image ? "image" : "direct";
    j["eps"] = r.cfg.eps;
    j["horizon"] = r.horizon;
    ordered_json bands = ordered_json::array(), breaches = ordered_json::array();
    for (const MCBand& b : r.bands) {
        bands.push_back({{"name", b.name},
                         {"lower", b.lower},
                         {"upper", b.upper},
                         {"lower_at_horizon", b.lower_value},
                         {"upper_at_horizon", b.upper_value},
                         {"fraction_within", b.fraction_within}});
        breaches.push_back({{"band", b.name}, {"below", b.below}, {"above", b.above}});
    }
    j["bands"] = bands;
    j["breaches"] = breaches;
    j["moments"] = {{"statistic", r.functional == Functional::J_deviation ? "J(n)" : "value(horizon)"},
                    {"mean", r.mean},
                    {"variance", r.variance},
                    {"theory_mean", num(r.theory_mean)},
                    {"theory_variance", num(r.theory_variance)},
                    {"z_mean", num(r.z_mean)}};
    if (!std::isnan(r.lil_fraction)) {
        double sup_mean = 0;
        for (const MCTrial& t : r.trials) sup_mean += t.sup_norm;
        sup_mean /= static_cast<double>(r.trials.size());
        j["lil"] = {{"t_min", r.cfg.t_min},
                    {"t_max", r.horizon},
                    {"sup_mean", sup_mean},
                    {"fraction_in_0.7_1.3", r.lil_fraction}};
    }
    return j.dump(2) + "\n";
}

}  // namespace kfrac
