#ifndef KFRAC_CFRAC_HPP
#define KFRAC_CFRAC_HPP

#include <cstddef>
#include <vector>

#include "kfrac/field.hpp"
#include "kfrac/polynomial.hpp"

namespace kfrac {

/// Partial denominators fixed by a finite prefix a_1..a_n.
///
/// With l = sum of the listed degrees, the symbols n - 2l beyond the last
/// complete encoding describe the next denominator only partially:
///   - all zero: a zero run of length pending_zero_run, so the next degree
///     (if any) exceeds it; `terminated` is true.
///   - otherwise: the degree is pending_degree and pending_head holds its
///     known coefficients, leading coefficient first.
struct CFExpansion {
    std::vector<Polynomial> denominators;
    bool terminated = true;
    std::size_t determined_prefix_length = 0;  // 2 * sum of listed degrees
    std::size_t pending_zero_run = 0;
    int pending_degree = 0;
    Word pending_head;
};

CFExpansion expand(const Field& f, const Word& a);

/// All partial denominators of G(a | 0^inf), a rational function.
std::vector<Polynomial> quotients_of_prefix(const Field& f, const Word& a);

/// pi(A) = 0^(d-1) a_d a_(d-1) ... a_0 for deg A = d >= 1.
Word encode_pi(const Polynomial& A);
/// Inverse of encode_pi; rejects words outside the code.
Polynomial decode_pi(const Word& w);

/// K(a) from the ELBMD discrepancies.
Word K(const Field& f, const Word& a);
/// K(a) from Euclid on G(a | 0^inf) followed by pi-encoding.
Word K_reference(const Field& f, const Word& a);
Word K_inverse(const Field& f, const Word& b);

enum class Part { D, C };

struct DCSplit {
    Word D;
    Word C;
    /// For each position n of K(a): which part it belongs to and its 1-based
    /// index there.
    std::vector<std::pair<Part, std::size_t>> map;
};

/// Splits the discrepancy stream b = K(a) into K_D and K_C.
DCSplit split_discrepancy(const Word& b);
DCSplit split_dc(const Field& f, const Word& a);

Word iterate_K(const Field& f, const Word& a, unsigned k);
/// (K^inf)(a)_t = (K^t)(a)_t for t = 1..|a|.
Word K_infinity(const Field& f, const Word& a);
/// K of every suffix a_i..a_n, i = 1..n, recomputed from scratch.
std::vector<Word> shifted_profiles(const Field& f, const Word& a);

}  // namespace kfrac

#endif  // KFRAC_CFRAC_HPP
