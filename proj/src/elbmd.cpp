#include "kfrac/elbmd.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace kfrac {

namespace {

void trim(std::vector<Elem>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

int degree_of(const std::vector<Elem>& c) { return c.empty() ? kNegInf : static_cast<int>(c.size()) - 1; }

[[noreturn]] void invariant_broken(int j, int m, int d) {
    throw std::logic_error("ELBMD loop invariant broken at j=" + std::to_string(j) + " (m=" + std::to_string(m) +
                           ", d=" + std::to_string(d) + ")");
}

}  // namespace

ElbmdState::ElbmdState(Field f, bool track_numerator)
    : f_(std::move(f)), numerator_(track_numerator), r_(f_.neg(1)) {
    rbar_ = f_.neg(f_.inv(r_));
}

void ElbmdState::add_shifted(std::vector<Elem>& dst, const std::vector<Elem>& src, Elem c, int shift) const {
    if (src.empty() || c == 0) return;
    const std::size_t need = src.size() + static_cast<std::size_t>(shift);
    if (dst.size() < need) dst.resize(need, 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        Elem& slot = dst[i + static_cast<std::size_t>(shift)];
        slot = f_.add(slot, f_.mul(c, src[i]));
    }
    trim(dst);
}

Elem ElbmdState::step(Elem a) {
    require(a < f_.q(), ErrorCode::InvalidArgument, "symbol out of range for F_q");
    history_.push_back(a);
    ++j_;
    // b(j) = sum_{i=0}^{d} Q(i) a(j+i-d), reading a(t) = 0 for t <= 0.
    Elem b = 0;
    for (int i = 0; i <= d_; ++i) {
        const Elem qi = i < static_cast<int>(Q_.size()) ? Q_[static_cast<std::size_t>(i)] : 0;
        const int idx = j_ + i - d_;
        if (qi == 0 || idx <= 0) continue;
        b = f_.add(b, f_.mul(qi, history_[static_cast<std::size_t>(idx - 1)]));
    }

    Elem bt = 0;
    if (b == 0) {
        m_ = m_ - 1;
    } else if (m_ > 0) {
        m_ = m_ - 1;
        bt = f_.mul(rbar_, b);
        if (numerator_) add_shifted(P_, AP_, bt, m_);
        add_shifted(Q_, AQ_, bt, m_);
    } else {
        m_ = -(m_ - 1);
        bt = r_;
        r_ = b;
        rbar_ = f_.neg(f_.inv(r_));
        bt = f_.mul(bt, rbar_);
        if (numerator_) {
            std::swap(P_, AP_);
            add_shifted(P_, AP_, bt, m_);
        }
        std::swap(Q_, AQ_);
        add_shifted(Q_, AQ_, bt, m_);
        d_ = d_ + m_;
    }

    if (m_ != 2 * d_ - j_ || degree_of(Q_) != d_) invariant_broken(j_, m_, d_);
    discrepancy_ = b;
    return bt;
}

std::uint64_t BinaryElbmd::history_window(std::size_t start) const {
    const std::size_t w = start >> 6;
    const unsigned s = static_cast<unsigned>(start & 63);
    const std::uint64_t lo = w < hist_.size() ? hist_[w] : 0;
    if (s == 0) return lo;
    const std::uint64_t hi = w + 1 < hist_.size() ? hist_[w + 1] : 0;
    return (lo >> s) | (hi << (64 - s));
}

unsigned BinaryElbmd::step(unsigned bit) {
    require(bit < 2, ErrorCode::InvalidArgument, "symbol out of range for F_2");
    ++j_;
    const std::size_t pos = static_cast<std::size_t>(j_);
    if ((pos >> 6) >= hist_.size()) hist_.push_back(0);
    if (bit) hist_[pos >> 6] |= std::uint64_t{1} << (pos & 63);

    // Parity of Q & a[j-d .. j], Q bit i aligned with a(j-d+i).
    const std::size_t start = static_cast<std::size_t>(j_ - d_);
    const std::size_t words = static_cast<std::size_t>(d_) / 64 + 1;
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words && w < Q_.size(); ++w) acc ^= Q_[w] & history_window(start + 64 * w);
    const unsigned b = static_cast<unsigned>(std::popcount(acc) & 1);

    auto xor_shifted = [](std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src, int shift) {
        const std::size_t ws = static_cast<std::size_t>(shift) >> 6;
        const unsigned bs = static_cast<unsigned>(shift & 63);
        const std::size_t need = src.size() + ws + 1;
        if (dst.size() < need) dst.resize(need, 0);
        for (std::size_t i = 0; i < src.size(); ++i) {
            dst[i + ws] ^= src[i] << bs;
            if (bs) dst[i + ws + 1] ^= src[i] >> (64 - bs);
        }
    };

    if (b == 0) {
        --m_;
    } else if (m_ > 0) {
        --m_;
        xor_shifted(Q_, AQ_, m_);
    } else {
        m_ = 1 - m_;
        std::swap(Q_, AQ_);
        xor_shifted(Q_, AQ_, m_);
        d_ += m_;
    }
    if (m_ != 2 * d_ - j_) invariant_broken(j_, m_, d_);
    return b;
}

ElbmdRun run(const Field& f, const Word& a, bool snapshots) {
    ElbmdRun out;
    out.b.reserve(a.size());
    out.d.assign(1, 0);
    out.m.assign(1, 0);
    out.d.reserve(a.size() + 1);
    out.m.reserve(a.size() + 1);
    ElbmdState st(f, snapshots);
    for (Elem x : a) {
        out.b.push_back(st.step(x));
        out.d.push_back(st.d());
        out.m.push_back(st.m());
        if (snapshots) out.snapshots.push_back({st.j(), st.m(), st.d(), st.m() <= 0, st.P(), st.Q(), st.AP(), st.AQ()});
    }
    return out;
}

ElbmdRun run_fast(const Field& f, const Word& a) {
    if (f.q() != 2) return run(f, a, false);
    ElbmdRun out;
    out.b.reserve(a.size());
    out.d.assign(1, 0);
    out.m.assign(1, 0);
    out.d.reserve(a.size() + 1);
    out.m.reserve(a.size() + 1);
    BinaryElbmd st;
    for (Elem x : a) {
        out.b.push_back(st.step(x));
        out.d.push_back(st.d());
        out.m.push_back(st.m());
    }
    return out;
}

}  // namespace kfrac
