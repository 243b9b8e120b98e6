#include "kfrac/field.hpp"

#include <string>

namespace kfrac {

namespace {

constexpr unsigned kMaxOrder = 1u << 16;
constexpr unsigned kTableOrder = 256;

using Coeffs = std::vector<Elem>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs digits(Elem a, unsigned p, unsigned e) {
    Coeffs d(e, 0);
    for (unsigned i = 0; i < e; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

Elem undigits(const Coeffs& d, unsigned p) {
    Elem a = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
    return a;
}

// Remainder of a modulo the monic polynomial m over F_p.
Coeffs poly_mod(Coeffs a, const Coeffs& m, unsigned p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const Elem lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = static_cast<Elem>((a[shift + i] + (p - lead) * m[i]) % p);
        }
        trim(a);
    }
    return a;
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<Elem>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    trim(r);
    return r;
}

bool next_monic(Coeffs& c, unsigned p) {
    // Enumerates the non-leading coefficients in base p; leading stays 1.
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (++c[i] < p) return true;
        c[i] = 0;
    }
    return false;
}

}  // namespace

bool is_prime(unsigned n) noexcept {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field field_of_order(unsigned q) {
    require(q >= 2, ErrorCode::InvalidArgument, "field order must be at least 2");
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned e = 0;
    for (unsigned r = q; r > 1; r /= p) {
        require(r % p == 0, ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
        ++e;
    }
    return Field::make(p, e);
}

bool is_irreducible(unsigned p, const std::vector<Elem>& monic) {
    require(!monic.empty() && monic.back() == 1, ErrorCode::InvalidArgument, "modulus must be monic");
    const std::size_t deg = monic.size() - 1;
    if (deg == 0) return false;
    for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
        Coeffs divisor(dd + 1, 0);
        divisor[dd] = 1;
        do {
            if (poly_mod(monic, divisor, p).empty()) return false;
        } while (next_monic(divisor, p));
    }
    return true;
}

Field Field::make(unsigned p, unsigned e, std::vector<Elem> modulus) {
    require(is_prime(p), ErrorCode::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
    require(e >= 1, ErrorCode::InvalidArgument, "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        require(q <= kMaxOrder, ErrorCode::Limit, "field order exceeds 65536");
    }
    Field f;
    f.p_ = p;
    f.e_ = e;
    f.q_ = static_cast<unsigned>(q);
    if (e > 1) {
        if (modulus.empty()) {
            if (p == 2 && e == 2) {
                modulus = moduli::kF4;
            } else if (p == 2 && e == 3) {
                modulus = moduli::kF8;
            } else if (p == 3 && e == 2) {
                modulus = moduli::kF9;
            } else {
                Coeffs c(e + 1, 0);
                c[e] = 1;
                do {
                    if (is_irreducible(p, c)) break;
                } while (next_monic(c, p));
                modulus = c;
            }
        }
        require(modulus.size() == e + 1, ErrorCode::InvalidArgument,
                "modulus must have degree " + std::to_string(e));
        for (Elem c : modulus)
            require(c < p, ErrorCode::InvalidArgument, "modulus coefficient out of range");
        require(modulus.back() == 1, ErrorCode::InvalidArgument, "modulus must be monic");
        require(is_irreducible(p, modulus), ErrorCode::InvalidArgument, "modulus is reducible over F_p");
        f.modulus_ = std::move(modulus);
    } else {
        require(modulus.empty(), ErrorCode::InvalidArgument, "prime fields take no modulus");
    }
    if (f.q_ <= kTableOrder) f.build_tables();
    return f;
}

void Field::build_tables() {
    auto t = std::make_shared<Tables>();
    t->add.resize(q_ * q_);
    t->mul.resize(q_ * q_);
    t->neg.resize(q_);
    t->inv.assign(q_, 0);
    for (Elem a = 0; a < q_; ++a) {
        t->neg[a] = slow_neg(a);
        for (Elem b = 0; b < q_; ++b) {
            t->add[a * q_ + b] = slow_add(a, b);
            const Elem m = slow_mul(a, b);
            t->mul[a * q_ + b] = m;
            if (m == 1) t->inv[a] = b;
        }
    }
    tables_ = t;
    add_ = tables_->add.data();
    mul_ = tables_->mul.data();
    neg_ = tables_->neg.data();
    inv_ = tables_->inv.data();
}

Elem Field::slow_add(Elem a, Elem b) const noexcept {
    if (e_ == 1) return (a + b) % p_;
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::slow_neg(Elem a) const noexcept {
    if (e_ == 1) return (p_ - a) % p_;
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::slow_mul(Elem a, Elem b) const noexcept {
    if (e_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    Coeffs prod = poly_mul(digits(a, p_, e_), digits(b, p_, e_), p_);
    prod = poly_mod(prod, modulus_, p_);
    prod.resize(e_, 0);
    return undigits(prod, p_);
}

Elem Field::slow_inv(Elem a) const {
    // a^(q-2) by square and multiply.
    Elem result = 1, base = a;
    unsigned exp = q_ - 2;
    while (exp) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

Elem Field::inv(Elem a) const {
    require(a != 0 && a < q_, ErrorCode::Domain, "division by zero in F_q");
    if (inv_) return inv_[a];
    return slow_inv(a);
}

}  // namespace kfrac
