#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "trig/error.hpp"
#include "trig/rational.hpp"

namespace trig {

/// Dense univariate polynomial over an exact ring K, trailing zeros trimmed.
/// The zero polynomial has an empty coefficient vector and degree -1.
template <class K>
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(K c) { // constant
        if (!is_zero(c)) c_.push_back(std::move(c));
    }
    explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly monomial(K c, int k) {
        UPoly p;
        if (is_zero(c)) return p;
        p.c_.assign(k + 1, K{});
        p.c_[k] = std::move(c);
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }

    const K& operator[](int i) const {
        static const K zero{};
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero;
    }
    const std::vector<K>& coeffs() const { return c_; }

    const K& leading() const {
        if (c_.empty()) throw contract_error("leading coeff of zero");
        return c_.back();
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K{});
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K{});
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = a[i] - b[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return UPoly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K{});
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    UPoly operator-() const {
        std::vector<K> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return UPoly(std::move(r));
    }
    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    friend UPoly operator*(const K& s, const UPoly& p) {
        std::vector<K> r(p.c_.size());
        for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
        return UPoly(std::move(r));
    }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) {
        return !(a == b);
    }

    K eval(const K& x) const {
        K acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<K> r(c_.size() - 1, K{});
        for (std::size_t i = 1; i < c_.size(); ++i) {
            if (is_zero(c_[i])) continue;
            K m{};
            for (std::size_t k = 0; k < i; ++k) m += ring_one(c_[i]);
            r[i - 1] = m * c_[i];
        }
        return UPoly(std::move(r));
    }

  private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

/// Quotient-remainder; requires the divisor's leading coefficient invertible.
template <class K>
std::pair<UPoly<K>, UPoly<K>> divmod(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.is_zero_poly()) throw contract_error("polynomial division by zero");
    K lb_inv = field_inv(b.leading());
    std::vector<K> rem(a.coeffs());
    std::vector<K> quo;
    int db = b.degree();
    int da = static_cast<int>(rem.size()) - 1;
    if (da < db) return {UPoly<K>(), a};
    quo.assign(da - db + 1, K{});
    for (int i = da; i >= db; --i) {
        if (is_zero(rem[i])) continue;
        K q = rem[i] * lb_inv;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b[j];
    }
    return {UPoly<K>(std::move(quo)), UPoly<K>(std::move(rem))};
}

/// Monic gcd over a field; gcd(0,0) is an error upstream, here it yields 0.
template <class K>
UPoly<K> gcd(const UPoly<K>& a, const UPoly<K>& b) {
    UPoly<K> x = a, y = b;
    while (!y.is_zero_poly()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = y;
        y = r;
    }
    if (x.is_zero_poly()) return x;
    return field_inv(x.leading()) * x;
}

template <class K>
UPoly<K> squarefree_part(const UPoly<K>& a) {
    if (a.is_zero_poly() || a.degree() == 0) return a;
    UPoly<K> g = gcd(a, a.derivative());
    if (g.degree() <= 0) return field_inv(a.leading()) * a;
    auto [q, r] = divmod(a, g);
    if (!r.is_zero_poly()) throw contract_error("squarefree division failed");
    return field_inv(q.leading()) * q;
}

template <class K>
bool is_zero(const UPoly<K>& p) {
    return p.is_zero_poly();
}

template <class K>
UPoly<K> ring_one(const UPoly<K>& p) {
    for (const K& c : p.coeffs())
        if (!is_zero(c)) return UPoly<K>(ring_one(c));
    return UPoly<K>(K{}); // zero exemplar: caller must avoid
}

template <class K>
UPoly<K> ring_of_int(long n, const UPoly<K>& p) {
    for (const K& c : p.coeffs())
        if (!is_zero(c)) return UPoly<K>(ring_of_int(n, c));
    throw contract_error("ring_of_int needs a nonzero exemplar");
}

/// polynomial in the genus parameter g with rational coefficients
using PolyQ = UPoly<Rat>;

inline PolyQ polyq_const(long n) { return PolyQ(Rat(n)); }
inline PolyQ polyq_g() { return PolyQ::monomial(Rat(1), 1); }
/// g + c
inline PolyQ polyq_g_plus(long c) {
    return PolyQ(std::vector<Rat>{Rat(c), Rat(1)});
}

std::string to_string(const PolyQ& p, const std::string& var = "g");

} // namespace trig
