#include "kfrac/cfrac.hpp"

#include <memory>

#include "kfrac/elbmd.hpp"

namespace kfrac {

std::vector<Polynomial> quotients_of_prefix(const Field& f, const Word& a) {
    // G(a|0^inf) = N / x^n with N = sum a_i x^(n-i).
    const std::size_t n = a.size();
    std::vector<Elem> num(n, 0);
    for (std::size_t i = 0; i < n; ++i) num[n - 1 - i] = a[i];
    Polynomial r0 = Polynomial::monomial(1, static_cast<int>(n));
    Polynomial r1(std::move(num));
    std::vector<Polynomial> out;
    while (!r1.is_zero()) {
        auto [A, r2] = divmod(f, r0, r1);
        out.push_back(std::move(A));
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return out;
}

Word encode_pi(const Polynomial& A) {
    const int d = A.degree();
    require(d >= 1, ErrorCode::Domain, "pi encodes polynomials of degree at least 1");
    Word w(static_cast<std::size_t>(2 * d), 0);
    for (int i = 0; i <= d; ++i) w[static_cast<std::size_t>(2 * d - 1 - i)] = A.coeff(i);
    return w;
}

Polynomial decode_pi(const Word& w) {
    require(!w.empty() && w.size() % 2 == 0, ErrorCode::Parse, "pi code words have even positive length");
    const std::size_t d = w.size() / 2;
    for (std::size_t i = 0; i + 1 < d; ++i)
        require(w[i] == 0, ErrorCode::Parse, "pi code word must start with d-1 zeros");
    require(w[d - 1] != 0, ErrorCode::Parse, "pi code word has zero leading coefficient");
    std::vector<Elem> c(d + 1);
    for (std::size_t i = 0; i <= d; ++i) c[i] = w[2 * d - 1 - i];
    return Polynomial(std::move(c));
}

CFExpansion expand(const Field& f, const Word& a) {
    const std::size_t n = a.size();
    CFExpansion out;
    std::size_t used = 0;
    std::vector<Polynomial> all = quotients_of_prefix(f, a);
    std::size_t i = 0;
    for (; i < all.size(); ++i) {
        const std::size_t len = 2 * static_cast<std::size_t>(all[i].degree());
        if (used + len > n) break;
        used += len;
        out.denominators.push_back(all[i]);
    }
    out.determined_prefix_length = used;
    const std::size_t rest = n - used;
    if (i == all.size()) {
        out.terminated = true;
        out.pending_zero_run = rest;
        return out;
    }
    const Word code = encode_pi(all[i]);
    const std::size_t d = code.size() / 2;
    if (rest < d) {
        // Only zeros of the pending block are visible.
        out.terminated = true;
        out.pending_zero_run = rest;
        return out;
    }
    out.terminated = false;
    out.pending_degree = static_cast<int>(d);
    out.pending_head.assign(code.begin() + static_cast<std::ptrdiff_t>(d - 1),
                            code.begin() + static_cast<std::ptrdiff_t>(rest));
    return out;
}

Word K(const Field& f, const Word& a) { return run_fast(f, a).b; }

Word K_reference(const Field& f, const Word& a) {
    Word out;
    out.reserve(a.size() + 1);
    for (const Polynomial& A : quotients_of_prefix(f, a)) {
        const Word code = encode_pi(A);
        out.insert(out.end(), code.begin(), code.end());
        if (out.size() >= a.size()) break;
    }
    out.resize(a.size(), 0);
    return out;
}

Word K_inverse(const Field& f, const Word& b) {
    const std::size_t n = b.size();
    for (Elem x : b) require(x < f.q(), ErrorCode::InvalidArgument, "symbol out of range for F_q");
    // Decode pi blocks; an incomplete block with a known degree is completed
    // with zero coefficients, a trailing zero run ends the expansion.
    auto [prev2, prev] = initial_convergents();
    std::size_t pos = 0;
    while (pos < n) {
        std::size_t z = 0;
        while (pos + z < n && b[pos + z] == 0) ++z;
        if (pos + z == n) break;
        const std::size_t d = z + 1;
        std::vector<Elem> c(d + 1, 0);
        for (std::size_t i = 0; i <= d; ++i) {
            const std::size_t at = pos + d - 1 + i;
            if (at < n) c[d - i] = b[at];
        }
        ConvergentPair next = convergent_step(f, Polynomial(std::move(c)), prev, prev2);
        prev2 = std::move(prev);
        prev = std::move(next);
        pos += 2 * d;
    }
    return expand_rational(f, prev.P, prev.Q, n).word();
}

DCSplit split_discrepancy(const Word& b) {
    DCSplit out;
    out.map.reserve(b.size());
    long m = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const long n = static_cast<long>(i) + 1;
        const long mp = m - 1;  // m'(n) = m(n-1) - 1
        const auto target = static_cast<std::size_t>((n - mp) / 2);
        if (mp < 0) {
            out.D.push_back(b[i]);
            out.map.emplace_back(Part::D, target);
        } else {
            out.C.push_back(b[i]);
            out.map.emplace_back(Part::C, target);
        }
        m = (m > 0 || b[i] == 0) ? m - 1 : 1 - m;
    }
    return out;
}

DCSplit split_dc(const Field& f, const Word& a) { return split_discrepancy(K(f, a)); }

Word iterate_K(const Field& f, const Word& a, unsigned k) {
    Word w = a;
    for (unsigned i = 0; i < k; ++i) w = K(f, w);
    return w;
}

Word K_infinity(const Field& f, const Word& a) {
    const std::size_t n = a.size();
    Word out;
    out.reserve(n);
    std::vector<std::unique_ptr<ElbmdState>> levels;  // levels[i] computes K^(i+1)
    Word top_history;                                 // outputs of the highest level so far
    for (std::size_t t = 0; t < n; ++t) {
        Elem sym = a[t];
        for (auto& lvl : levels) sym = lvl->step(sym);
        // Column t+1 needs level t+1, fed with the whole input history of that level.
        top_history.push_back(sym);
        auto fresh = std::make_unique<ElbmdState>(f, false);
        Word next_history;
        next_history.reserve(top_history.size());
        for (Elem x : top_history) next_history.push_back(fresh->step(x));
        levels.push_back(std::move(fresh));
        top_history = std::move(next_history);
        out.push_back(top_history.back());
    }
    return out;
}

std::vector<Word> shifted_profiles(const Field& f, const Word& a) {
    std::vector<Word> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(K(f, Word(a.begin() + static_cast<std::ptrdiff_t>(i), a.end())));
    return out;
}

}  // namespace kfrac
