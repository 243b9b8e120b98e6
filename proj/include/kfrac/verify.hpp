#ifndef KFRAC_VERIFY_HPP
#define KFRAC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kfrac {

struct CheckLine {
    CheckLine(std::string n = {}) : name(std::move(n)) {}
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string note;  // informational, does not affect the verdict
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckLine> lines;
    bool ok() const;
    std::string text() const;
};

/// Exhaustive enumeration refuses more than 2^26 states.
inline constexpr std::uint64_t kMaxStates = std::uint64_t{1} << 26;

/// Deviation counts, case counts, mean jump complexity and J' binomials over
/// every a in F_q^s, s <= t.
VerifyReport verify_counting(unsigned q, unsigned t);
/// Every K_D prefix of length n is hit by exactly q^n words of length 2n.
VerifyReport verify_equidist(unsigned q, unsigned n);
/// One-step rules, prefix-independence of the deviation law, and the
/// s = 10 versus empty-prefix tables.
VerifyReport verify_translation(unsigned q, unsigned n);
/// First-difference positions preserved by K for all pairs of length n,
/// and K_inverse round trips.
VerifyReport verify_isometry(unsigned q, unsigned n);
/// Reduction versus brute force for all a of length <= k, the incremental
/// sticky profile versus the oracle, A-isometry, and tie-break invariance.
VerifyReport verify_adic_oracle(unsigned k);

}  // namespace kfrac

#endif  // KFRAC_VERIFY_HPP
