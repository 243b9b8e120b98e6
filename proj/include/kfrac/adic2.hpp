#ifndef KFRAC_ADIC2_HPP
#define KFRAC_ADIC2_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kfrac/field.hpp"

namespace kfrac {

/// (p, q) in Z^2; Phi(p, q) = max(|p|, |q|).
struct LatticeVec {
    mpz_class p, q;
    bool operator==(const LatticeVec& o) const { return p == o.p && q == o.q; }
};

mpz_class phi(const LatticeVec& v);

/// Selection among several Phi-minimal vectors.
///   canonical: smallest |q|, then q > 0, then p >= 0, then smallest p.
///   alternate: largest |q|, then q < 0, then p < 0, then largest p.
enum class TieBreak { canonical, alternate };

/// Incremental approximation of a^(k) = sum_{i<=k} a_i 2^(i-1) inside the
/// lattice L(k) = {(p, q) : q a^(k) = p mod 2^k}. Each basis vector carries
/// its residue R(w) = (q_w a^(k) - p_w) / 2^k, so membership in L(k+1) is a
/// parity test and a^(k) itself is never needed in the inner loop.
class AdicState {
   public:
    explicit AdicState(TieBreak tie = TieBreak::canonical);

    /// Consumes a_(k+1) and returns the emitted A-bit.
    unsigned step(unsigned bit);

    std::size_t k() const noexcept { return k_; }
    const LatticeVec& pair() const noexcept { return pair_; }
    const LatticeVec& u() const noexcept { return u_; }
    const LatticeVec& v() const noexcept { return v_; }
    /// a^(k), rebuilt on demand (linear in k).
    mpz_class a_k() const;

   private:
    void reduce();

    TieBreak tie_;
    std::size_t k_ = 0;
    LatticeVec u_, v_, pair_;
    mpz_class Ru_, Rv_, Rpair_;
    std::vector<unsigned char> bits_;
};

/// Phi-minimal vector of L(k) with odd q, i.e. the best 2-adic fraction p/q
/// for a_k, found from the max-norm reduced basis of {(a_k, 1), (2^k, 0)}.
/// An even q would not describe a 2-adic integer.
LatticeVec minimal_pair(const mpz_class& a_k, unsigned k, TieBreak tie = TieBreak::canonical);

/// Exhaustive search over odd q; used as the test oracle.
LatticeVec brute_force_minimal_pair(const mpz_class& a_k, unsigned k, TieBreak tie = TieBreak::canonical);

struct AdicProfile {
    Word A;
    std::vector<long> J_A;  // index 0 seeded with 0
    std::vector<long> m_A;
    std::vector<mpz_class> Phi;  // Phi(c_k, d_k), index 0 = 1
    std::vector<LatticeVec> pairs;
};

AdicProfile adic_profile(const Word& a, TieBreak tie = TieBreak::canonical);

/// log2 Phi as an exact integer when Phi is a power of two, else "%.9f".
std::string phi2_string(const mpz_class& Phi);

}  // namespace kfrac

#endif  // KFRAC_ADIC2_HPP
