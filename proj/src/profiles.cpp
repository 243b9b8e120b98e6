#include "kfrac/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "kfrac/elbmd.hpp"

namespace kfrac {

ProfileSeries profile_from_discrepancies(const Word& b) {
    ProfileSeries p;
    const std::size_t n = b.size();
    p.K = b;
    p.L.assign(n + 1, 0);
    p.m.assign(n + 1, 0);
    p.m_prime.assign(n + 1, 0);
    p.J.assign(n + 1, 0);
    for (std::size_t t = 1; t <= n; ++t) {
        const int prev = p.m[t - 1];
        p.m_prime[t] = prev - 1;
        const bool jump = prev <= 0 && b[t - 1] != 0;
        p.m[t] = jump ? 1 - prev : prev - 1;
        p.L[t] = (p.m[t] + static_cast<int>(t)) / 2;
        p.J[t] = p.J[t - 1] + (jump ? 1 : 0);
        if (jump) p.jumps.emplace_back(static_cast<int>(t), p.m[t]);
    }
    return p;
}

ProfileSeries profile(const Field& f, const Word& a) {
    ElbmdRun r = run_fast(f, a);
    ProfileSeries p = profile_from_discrepancies(r.b);
    for (std::size_t t = 0; t < r.d.size(); ++t) {
        if (p.L[t] != r.d[t] || p.m[t] != r.m[t])
            throw std::logic_error("profile walk disagrees with the ELBMD state");
    }
    return p;
}

std::map<int, std::size_t> jump_heights(const ProfileSeries& p) {
    std::map<int, std::size_t> h;
    for (const auto& [pos, height] : p.jumps) ++h[height];
    return h;
}

int J_prime(const ProfileSeries& p, std::size_t n_even) {
    require(n_even % 2 == 0, ErrorCode::InvalidArgument, "J' is defined for even lengths only");
    require(n_even <= p.length(), ErrorCode::InvalidArgument, "J' argument exceeds the profile length");
    return p.J[n_even] - (p.m[n_even] > 0 ? 1 : 0);
}

std::size_t longest_zero_run(const Word& b, std::size_t upto) {
    upto = std::min(upto, b.size());
    std::size_t best = 0, cur = 0;
    for (std::size_t i = 0; i < upto; ++i) {
        cur = b[i] == 0 ? cur + 1 : 0;
        best = std::max(best, cur);
    }
    return best;
}

std::size_t kth_longest_zero_run(const Word& b, std::size_t k) {
    require(k >= 1, ErrorCode::InvalidArgument, "k must be at least 1");
    std::vector<std::size_t> runs;
    std::size_t cur = 0;
    for (Elem x : b) {
        if (x == 0) {
            ++cur;
        } else if (cur > 0) {
            runs.push_back(cur);
            cur = 0;
        }
    }
    if (cur > 0) runs.push_back(cur);
    if (runs.size() < k) return 0;
    std::nth_element(runs.begin(), runs.begin() + static_cast<std::ptrdiff_t>(k - 1), runs.end(),
                     std::greater<>());
    return runs[k - 1];
}

std::size_t d_k(const Word& KD, std::size_t k, std::size_t t) {
    require(k >= 1, ErrorCode::InvalidArgument, "k must be at least 1");
    const std::size_t upto = std::min(t / 2, KD.size());
    std::vector<std::size_t> degrees;
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < upto; ++i) {
        if (KD[i] == 0) {
            ++zeros;
        } else {
            degrees.push_back(zeros + 1);
            zeros = 0;
        }
    }
    if (degrees.size() < k) return 0;
    std::nth_element(degrees.begin(), degrees.begin() + static_cast<std::ptrdiff_t>(k - 1), degrees.end(),
                     std::greater<>());
    return degrees[k - 1];
}

Classification classify(const ProfileSeries& p) {
    Classification c;
    for (std::size_t t = 1; t < p.m.size(); ++t) {
        const int am = std::abs(p.m[t]);
        c.d_perfect = std::max(c.d_perfect, am);
        if (t >= 2) c.C = std::max(c.C, (am - 1) / std::log2(static_cast<double>(t)));
    }
    c.good = c.C <= 2.0;
    return c;
}

}  // namespace kfrac
