#ifndef KFRAC_MONTECARLO_HPP
#define KFRAC_MONTECARLO_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kfrac/field.hpp"
#include "kfrac/stats.hpp"

namespace kfrac {

enum class Functional { J_deviation, m_plus, Z_runs, adic_mA };

/// image: draw K(a) (resp. A(a)) directly as iid uniform symbols, which has
/// the law of the image of iid a because K and A are isometries.
/// direct: draw a and run ELBMD (resp. the 2-adic recursion).
enum class Sampling { image, direct };

struct MCConfig {
    unsigned q = 2;
    std::size_t n = 1024;  // horizon in input symbols
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    unsigned parallel_chunks = 1;
    Sampling sampling = Sampling::image;
    double eps = 0.1;
    std::size_t stride = 0;  // CSV decimation; 0 picks about 1024 rows per trial
    std::size_t t_min = 16;  // start of the sup window for the LIL statistics
};

/// Per-trial results; trajectory values are exact integers.
struct MCTrial {
    std::vector<std::pair<std::size_t, long>> trajectory;  // decimated (t, value)
    long final_value = 0;  // value at the end of the horizon
    double sup_norm = 0;   // sup of |value| / normalizer over the window (LIL functionals)
    long J_final = 0;      // J(n); J_deviation only
    bool within_lower = false;  // value >= lower band at the horizon
    bool within_upper = false;  // value <= upper band at the horizon
};

struct MCBand {
    std::string name;
    std::string lower, upper;  // family names
    double lower_value = 0, upper_value = 0;
    double fraction_within = 0;
    std::size_t below = 0, above = 0;
};

struct MCResult {
    MCConfig cfg;
    Functional functional = Functional::J_deviation;
    std::size_t horizon = 0;  // length of the trajectory axis
    std::vector<MCTrial> trials;
    std::vector<MCBand> bands;
    // Moments of final_value (and of J(n) for J_deviation).
    double mean = 0, variance = 0;
    double theory_mean = 0, theory_variance = 0;
    double z_mean = 0;
    double lil_fraction = 0;  // fraction of trials with sup_norm in [0.7, 1.3]
};

/// SplitMix64: a Weyl counter passed through a multiplicative finalizer.
/// Engines such as mt19937_64 are linear over F_2 and their bit streams have
/// bounded linear complexity (19937 for the low bit), which the ELBMD sees.
class SplitMix64 {
   public:
    using result_type = std::uint64_t;
    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()();

   private:
    std::uint64_t state_;
};

/// Independent substream for trial i: SplitMix64 seeded with the first
/// output of SplitMix64(seed + 0x9e3779b97f4a7c15 * (i + 1)).
SplitMix64 trial_engine(std::uint64_t seed, std::size_t trial);

/// Uniform symbols over 0..q-1 by rejection; for q = 2 bits are taken from
/// each 64-bit output least significant first.
class SymbolSource {
   public:
    SymbolSource(SplitMix64& eng, unsigned q) : eng_(eng), q_(q) {}
    Elem next();

   private:
    SplitMix64& eng_;
    unsigned q_;
    std::uint64_t bits_ = 0;
    unsigned left_ = 0;
};

/// n uniform symbols from SplitMix64(seed), the stream behind --generate.
Word random_symbols(unsigned q, std::size_t n, std::uint64_t seed);

MCResult monte_carlo(const MCConfig& cfg, Functional functional);

std::string to_string(Functional f);
Functional functional_from_string(const std::string& name);

/// Long-format CSV "trial,t,value".
std::string mc_csv(const MCResult& r);
/// JSON summary with "schema": 1.
std::string mc_json(const MCResult& r);

}  // namespace kfrac

#endif  // KFRAC_MONTECARLO_HPP
