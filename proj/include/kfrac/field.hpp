#ifndef KFRAC_FIELD_HPP
#define KFRAC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "kfrac/error.hpp"

namespace kfrac {

// Field elements are canonical indices 0..q-1. For q = p^e with e > 1 the
// index is the coefficient vector over F_p written in base p, constant term
// in the least significant digit; index 0 is zero and index 1 is one.
using Elem = std::uint32_t;
using Word = std::vector<Elem>;

/// Finite field F_q, q = p^e. Immutable after construction and cheap to copy;
/// copies share the precomputed tables.
class Field {
   public:
    /// Builds F_{p^e}. For e > 1 an empty modulus selects the default
    /// (x^2+x+1 for F_4, x^3+x+1 for F_8, x^2+1 for F_9, otherwise the
    /// lexicographically smallest monic irreducible). The modulus is given
    /// constant term first and must be monic of degree e.
    static Field make(unsigned p, unsigned e = 1, std::vector<Elem> modulus = {});

    unsigned p() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    unsigned q() const noexcept { return q_; }
    const std::vector<Elem>& modulus() const noexcept { return modulus_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (add_) return add_[a * q_ + b];
        return slow_add(a, b);
    }
    Elem neg(Elem a) const noexcept {
        if (p_ == 2) return a;
        if (neg_) return neg_[a];
        return slow_neg(a);
    }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (mul_) return mul_[a * q_ + b];
        return slow_mul(a, b);
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool operator==(const Field& o) const noexcept {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }

   private:
    struct Tables {
        std::vector<Elem> add, mul, neg, inv;
    };

    Field() = default;
    Elem slow_add(Elem a, Elem b) const noexcept;
    Elem slow_neg(Elem a) const noexcept;
    Elem slow_mul(Elem a, Elem b) const noexcept;
    Elem slow_inv(Elem a) const;
    void build_tables();

    unsigned p_ = 2, e_ = 1, q_ = 2;
    std::vector<Elem> modulus_;
    std::shared_ptr<const Tables> tables_;
    const Elem* add_ = nullptr;
    const Elem* mul_ = nullptr;
    const Elem* neg_ = nullptr;
    const Elem* inv_ = nullptr;
};

bool is_prime(unsigned n) noexcept;

/// F_q with the default modulus; q must be a prime power.
Field field_of_order(unsigned q);

/// Irreducibility over F_p by trial division with every monic polynomial of
/// degree 1..deg/2. Coefficients constant term first, must be monic.
bool is_irreducible(unsigned p, const std::vector<Elem>& monic);

namespace moduli {
inline const std::vector<Elem> kF4 = {1, 1, 1};     // x^2 + x + 1
inline const std::vector<Elem> kF8 = {1, 1, 0, 1};  // x^3 + x + 1
inline const std::vector<Elem> kF9 = {1, 0, 1};     // x^2 + 1
}  // namespace moduli

}  // namespace kfrac

#endif  // KFRAC_FIELD_HPP
