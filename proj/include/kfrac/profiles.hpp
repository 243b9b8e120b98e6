#ifndef KFRAC_PROFILES_HPP
#define KFRAC_PROFILES_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "kfrac/field.hpp"

namespace kfrac {

/// Per-index complexity data for a_1..a_n. Every vector has n + 1 entries,
/// index 0 holding the seed value 0.
struct ProfileSeries {
    std::vector<int> L;
    std::vector<int> m;
    std::vector<int> m_prime;
    std::vector<int> J;
    std::vector<std::pair<int, int>> jumps;  // (position, height)
    Word K;

    std::size_t length() const noexcept { return K.size(); }
};

ProfileSeries profile(const Field& f, const Word& a);
/// Profile recovered from the discrepancy stream alone.
ProfileSeries profile_from_discrepancies(const Word& b);

/// height -> number of jumps of that height.
std::map<int, std::size_t> jump_heights(const ProfileSeries& p);

/// J(n) minus one exactly when m(n) > 0. n must be even.
int J_prime(const ProfileSeries& p, std::size_t n_even);

/// Longest zero run within b_1..b_upto.
std::size_t longest_zero_run(const Word& b, std::size_t upto);
/// k-th largest maximal zero run in b (k >= 1), 0 when there are fewer runs.
std::size_t kth_longest_zero_run(const Word& b, std::size_t k);

/// 1 + the k-th largest zero run closed by a nonzero symbol inside
/// K_D[1..floor(t/2)], i.e. the k-th largest completed degree; 0 if absent.
std::size_t d_k(const Word& KD, std::size_t k, std::size_t t);

struct Classification {
    int d_perfect = 0;   // smallest d with |m(t)| <= d on the observed range
    double C = 0.0;      // smallest C with |m(n)| <= 1 + C log2 n, n >= 2
    bool good = false;   // C <= 2
};

Classification classify(const ProfileSeries& p);

}  // namespace kfrac

#endif  // KFRAC_PROFILES_HPP
