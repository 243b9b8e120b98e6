#ifndef KFRAC_STATS_HPP
#define KFRAC_STATS_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

namespace kfrac {

/// Number of words in F_q^t whose deviation after t symbols is m.
mpz_class count_N(long t, long m, unsigned q);

/// Mean jump complexity over F_q^t.
mpq_class expected_J(long t, unsigned q);

/// Average time to go from deviation k to deviation l (k = l: return time).
mpq_class recurrence_delta(long k, long l, unsigned q);

/// Long-run frequency of the deviation pattern (m_0, ..., m_k); 0 when the
/// pattern is infeasible.
mpq_class pattern_probability(const std::vector<long>& pattern, unsigned q);

/// Feasibility of a deviation pattern under the one-step rules.
bool pattern_feasible(const std::vector<long>& pattern);

struct StationaryRow {
    long k;
    mpq_class density;    // time-average density from the chain
    mpq_class predicted;  // 1 / Delta(k,k)
};

struct StationaryReport {
    unsigned q = 2;
    long kmax = 0;
    long window = 0;  // states -window..window are kept exactly
    std::vector<StationaryRow> rows;
    mpq_class total;  // sum of all densities (1 when the tail is added)
    bool all_match = false;
};

/// Solves the deviation chain restricted to [-K..K] with the excursions
/// beyond it folded into one step from -K to K, and compares the
/// time-average densities with 1/Delta(k,k) for |k| <= kmax.
StationaryReport stationary_check(unsigned q, long kmax);

enum class LevyFamily {
    LIL_UUC, LIL_ULC, LIL_LUC, LIL_LLC,
    RUN_UUC, RUN_ULC, RUN_LUC, RUN_LLC,
    MPLUS_UUC, MPLUS_ULC, MPLUS_LUC, MPLUS_LLC,
    DEHEUVELS_UUC, DEHEUVELS_ULC, DEHEUVELS_LUC, DEHEUVELS_LLC,
};

struct LevyBoundary {
    LevyFamily family = LevyFamily::LIL_UUC;
    double eps = 0.1;
    unsigned k = 1;  // DEHEUVELS: rank of the run
    unsigned r = 2;  // DEHEUVELS: depth of the iterated logarithm
};

/// Smallest n at which the family's iterated logarithms are defined.
long levy_n_min(LevyFamily family);
double levy_eval(const LevyBoundary& b, double n);

std::string to_string(LevyFamily family);
LevyFamily levy_family_from_string(const std::string& name);

/// "num/den", or "num" for integers.
std::string rational_string(const mpq_class& v);

}  // namespace kfrac

#endif  // KFRAC_STATS_HPP
