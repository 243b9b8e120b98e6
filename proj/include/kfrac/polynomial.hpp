#ifndef KFRAC_POLYNOMIAL_HPP
#define KFRAC_POLYNOMIAL_HPP

#include <climits>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "kfrac/field.hpp"

namespace kfrac {

/// Degree of the zero polynomial / zero series. Ordered below every integer,
/// so plain integer comparisons on degrees are total.
inline constexpr int kNegInf = INT_MIN;

/// Element of F_q[x], coefficients constant term first. The highest stored
/// coefficient is nonzero; the zero polynomial stores nothing.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Elem> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(Elem c) { return Polynomial({c}); }
    static Polynomial monomial(Elem c, int power);

    int degree() const noexcept { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
    Elem lc() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_zero() const noexcept { return c_.empty(); }
    Elem coeff(int i) const noexcept {
        return i >= 0 && static_cast<std::size_t>(i) < c_.size() ? c_[static_cast<std::size_t>(i)] : 0;
    }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }

    bool operator==(const Polynomial&) const = default;

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Elem> c_;
};

Polynomial add(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial sub(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial mul(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial scale(const Field& f, const Polynomial& a, Elem c);
/// a * x^k for k >= 0.
Polynomial shift(const Polynomial& a, int k);
/// Quotient and remainder with deg(remainder) < deg(b). Throws on b = 0.
std::pair<Polynomial, Polynomial> divmod(const Field& f, const Polynomial& a, const Polynomial& b);
/// Polynomial part of the Laurent expansion of num/den, i.e. the quotient.
Polynomial integral_part(const Field& f, const Polynomial& num, const Polynomial& den);

/// Human-readable form such as "x^3+2x+1" (field elements by index).
std::string to_string(const Polynomial& a);

/// Finite prefix a_1..a_n of the series sum a_i x^(-i).
class SeriesPrefix {
   public:
    SeriesPrefix() = default;
    explicit SeriesPrefix(Word coeffs) : a_(std::move(coeffs)) {}

    std::size_t precision() const noexcept { return a_.size(); }
    /// -min{i : a_i != 0}, or kNegInf when every known coefficient is zero.
    int degree() const noexcept;
    /// Coefficient of x^(-i), i >= 1. Reading past the prefix throws.
    Elem at(std::size_t i) const;
    const Word& word() const noexcept { return a_; }

    /// Extends with zeros to precision n (the K(a) := K(a|0^inf) rule).
    SeriesPrefix padded(std::size_t n) const;
    /// Throws PrecisionExhausted unless at least n coefficients are known.
    void require_precision(std::size_t n) const;

   private:
    Word a_;
};

/// Coefficient-wise difference at the common precision.
SeriesPrefix sub(const Field& f, const SeriesPrefix& a, const SeriesPrefix& b);

/// First `terms` coefficients of num/den as a series in x^(-1). Requires
/// deg(num) < deg(den).
SeriesPrefix expand_rational(const Field& f, const Polynomial& num, const Polynomial& den, std::size_t terms);

struct ConvergentPair {
    Polynomial P;
    Polynomial Q;
    int index = 0;
};

/// (P_{-1}, Q_{-1}) = (1, 0) and (P_0, Q_0) = (0, 1).
std::pair<ConvergentPair, ConvergentPair> initial_convergents();

/// P_i = A_i P_{i-1} + P_{i-2}, Q_i = A_i Q_{i-1} + Q_{i-2}.
ConvergentPair convergent_step(const Field& f, const Polynomial& A, const ConvergentPair& prev,
                               const ConvergentPair& prev2);

/// P_n Q_{n-1} - P_{n-1} Q_n for an adjacent pair (cur, prev).
Polynomial convergent_determinant(const Field& f, const ConvergentPair& cur, const ConvergentPair& prev);

/// The field element (-1)^k.
inline Elem sign_power(const Field& f, int k) { return (k % 2 == 0) ? Elem{1} : f.neg(1); }

}  // namespace kfrac

#endif  // KFRAC_POLYNOMIAL_HPP
