#include "kfrac/polynomial.hpp"

#include <algorithm>

namespace kfrac {

Polynomial Polynomial::monomial(Elem c, int power) {
    require(power >= 0, ErrorCode::InvalidArgument, "negative monomial power");
    std::vector<Elem> v(static_cast<std::size_t>(power) + 1, 0);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial add(const Field& f, const Polynomial& a, const Polynomial& b) {
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<Elem> r(std::max(x.size(), y.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Elem u = i < x.size() ? x[i] : 0;
        const Elem v = i < y.size() ? y[i] : 0;
        r[i] = f.add(u, v);
    }
    return Polynomial(std::move(r));
}

Polynomial sub(const Field& f, const Polynomial& a, const Polynomial& b) {
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<Elem> r(std::max(x.size(), y.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Elem u = i < x.size() ? x[i] : 0;
        const Elem v = i < y.size() ? y[i] : 0;
        r[i] = f.sub(u, v);
    }
    return Polynomial(std::move(r));
}

Polynomial mul(const Field& f, const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<Elem> r(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(x[i], y[j]));
    }
    return Polynomial(std::move(r));
}

Polynomial scale(const Field& f, const Polynomial& a, Elem c) {
    std::vector<Elem> r = a.coeffs();
    for (Elem& v : r) v = f.mul(v, c);
    return Polynomial(std::move(r));
}

Polynomial shift(const Polynomial& a, int k) {
    require(k >= 0, ErrorCode::InvalidArgument, "negative shift");
    if (a.is_zero()) return {};
    std::vector<Elem> r(static_cast<std::size_t>(k), 0);
    r.insert(r.end(), a.coeffs().begin(), a.coeffs().end());
    return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> divmod(const Field& f, const Polynomial& a, const Polynomial& b) {
    require(!b.is_zero(), ErrorCode::Domain, "polynomial division by zero");
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial{}, a};
    std::vector<Elem> rem = a.coeffs();
    std::vector<Elem> quo(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    const Elem lead_inv = f.inv(b.lc());
    const auto& bc = b.coeffs();
    for (int i = a.degree(); i >= db; --i) {
        const Elem c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const Elem t = f.mul(c, lead_inv);
        const std::size_t off = static_cast<std::size_t>(i - db);
        quo[off] = t;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[off + j] = f.sub(rem[off + j], f.mul(t, bc[j]));
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial integral_part(const Field& f, const Polynomial& num, const Polynomial& den) {
    require(!den.is_zero(), ErrorCode::Domain, "integral part with zero denominator");
    return divmod(f, num, den).first;
}

std::string to_string(const Polynomial& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (int i = a.degree(); i >= 0; --i) {
        const Elem c = a.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += 'x';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

int SeriesPrefix::degree() const noexcept {
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != 0) return -static_cast<int>(i + 1);
    return kNegInf;
}

Elem SeriesPrefix::at(std::size_t i) const {
    require(i >= 1, ErrorCode::InvalidArgument, "series coefficients are indexed from 1");
    require(i <= a_.size(), ErrorCode::PrecisionExhausted,
            "precision exhausted: coefficient " + std::to_string(i) + " of a prefix of length " +
                std::to_string(a_.size()));
    return a_[i - 1];
}

SeriesPrefix SeriesPrefix::padded(std::size_t n) const {
    Word w = a_;
    if (w.size() < n) w.resize(n, 0);
    return SeriesPrefix(std::move(w));
}

void SeriesPrefix::require_precision(std::size_t n) const {
    require(a_.size() >= n, ErrorCode::PrecisionExhausted,
            "precision exhausted: need " + std::to_string(n) + " coefficients, have " + std::to_string(a_.size()));
}

SeriesPrefix sub(const Field& f, const SeriesPrefix& a, const SeriesPrefix& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    Word r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = f.sub(a.word()[i], b.word()[i]);
    return SeriesPrefix(std::move(r));
}

SeriesPrefix expand_rational(const Field& f, const Polynomial& num, const Polynomial& den, std::size_t terms) {
    require(!den.is_zero(), ErrorCode::Domain, "series expansion with zero denominator");
    require(num.degree() < den.degree(), ErrorCode::Domain, "expand_rational needs deg(num) < deg(den)");
    // Long division in x^(-1): coefficient of x^(-i) comes from num * x^i div den.
    const int d = den.degree();
    const Elem lead_inv = f.inv(den.lc());
    std::vector<Elem> rem(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i <= num.degree(); ++i) rem[static_cast<std::size_t>(i)] = num.coeff(i);
    Word out(terms);
    for (std::size_t t = 0; t < terms; ++t) {
        // rem <- rem * x, then take the x^d coefficient as the next digit.
        for (int i = d; i > 0; --i) rem[static_cast<std::size_t>(i)] = rem[static_cast<std::size_t>(i - 1)];
        rem[0] = 0;
        const Elem digit = f.mul(rem[static_cast<std::size_t>(d)], lead_inv);
        out[t] = digit;
        if (digit != 0)
            for (int i = 0; i <= d; ++i)
                rem[static_cast<std::size_t>(i)] =
                    f.sub(rem[static_cast<std::size_t>(i)], f.mul(digit, den.coeff(i)));
    }
    return SeriesPrefix(std::move(out));
}

std::pair<ConvergentPair, ConvergentPair> initial_convergents() {
    return {ConvergentPair{Polynomial::constant(1), Polynomial{}, -1},
            ConvergentPair{Polynomial{}, Polynomial::constant(1), 0}};
}

ConvergentPair convergent_step(const Field& f, const Polynomial& A, const ConvergentPair& prev,
                               const ConvergentPair& prev2) {
    require(prev.index == prev2.index + 1, ErrorCode::InvalidArgument, "convergent indices are not consecutive");
    return ConvergentPair{add(f, mul(f, A, prev.P), prev2.P), add(f, mul(f, A, prev.Q), prev2.Q), prev.index + 1};
}

Polynomial convergent_determinant(const Field& f, const ConvergentPair& cur, const ConvergentPair& prev) {
    return sub(f, mul(f, cur.P, prev.Q), mul(f, prev.P, cur.Q));
}

}  // namespace kfrac
