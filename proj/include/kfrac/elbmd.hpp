#ifndef KFRAC_ELBMD_HPP
#define KFRAC_ELBMD_HPP

#include <cstdint>
#include <vector>

#include "kfrac/field.hpp"
#include "kfrac/polynomial.hpp"

namespace kfrac {

/// One run of the Euclid-Lagrange-Berlekamp-Massey-Dornstetter recursion.
/// P/Q is the current (sub)convergent, AP/AQ the previous main convergent.
/// Feedback polynomials are not normalized.
///
/// step() returns the scaled discrepancy b~ added to Q, which is the
/// partial-denominator coefficient K(a)_j (0 when b(j) = 0). Over F_2 it
/// coincides with the raw discrepancy b(j); over larger fields the two differ
/// by a unit fixed by the history, and b(j) is kept in discrepancy().
class ElbmdState {
   public:
    explicit ElbmdState(Field f, bool track_numerator = true);

    /// Consumes a_j and returns K(a)_j.
    Elem step(Elem a);
    /// Raw b(j) of the last step.
    Elem discrepancy() const noexcept { return discrepancy_; }

    int j() const noexcept { return j_; }
    int d() const noexcept { return d_; }
    int m() const noexcept { return m_; }
    Elem r() const noexcept { return r_; }
    Elem rbar() const noexcept { return rbar_; }
    const Field& field() const noexcept { return f_; }

    Polynomial P() const { return Polynomial(P_); }
    Polynomial AP() const { return Polynomial(AP_); }
    Polynomial Q() const { return Polynomial(Q_); }
    Polynomial AQ() const { return Polynomial(AQ_); }

   private:
    void add_shifted(std::vector<Elem>& dst, const std::vector<Elem>& src, Elem c, int shift) const;

    Field f_;
    bool numerator_;
    std::vector<Elem> P_{}, AP_{1}, Q_{1}, AQ_{};
    int d_ = 0, m_ = 0, j_ = 0;
    Elem r_, rbar_ = 1, discrepancy_ = 0;
    Word history_;  // a_1..a_j, history_[i] = a_{i+1}
};

/// Bit-packed variant for F_2. Emits the same discrepancies as ElbmdState
/// but keeps no numerator.
class BinaryElbmd {
   public:
    BinaryElbmd() = default;
    unsigned step(unsigned bit);
    int j() const noexcept { return j_; }
    int d() const noexcept { return d_; }
    int m() const noexcept { return m_; }

   private:
    std::uint64_t history_window(std::size_t start) const;

    std::vector<std::uint64_t> Q_{1}, AQ_{};
    std::vector<std::uint64_t> hist_{0};  // bit i holds a_i; bit 0 is the zero before a_1
    int d_ = 0, m_ = 0, j_ = 0;
};

struct ElbmdSnapshot {
    int j = 0;
    int m = 0;
    int d = 0;
    bool main = false;  // m <= 0 after the step
    Polynomial P, Q, AP, AQ;
};

struct ElbmdRun {
    Word b;
    std::vector<int> d;  // d[j] after step j, d[0] = 0
    std::vector<int> m;  // m[j] after step j, m[0] = 0
    std::vector<ElbmdSnapshot> snapshots;
};

/// Runs the general-field recursion over a. Snapshots cost one copy of P, Q,
/// AP, AQ per step and are only recorded on request.
ElbmdRun run(const Field& f, const Word& a, bool snapshots = false);

/// Discrepancy stream with d and m per step; uses BinaryElbmd when q = 2.
ElbmdRun run_fast(const Field& f, const Word& a);

}  // namespace kfrac

#endif  // KFRAC_ELBMD_HPP
