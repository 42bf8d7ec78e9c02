#pragma once

#include <string>

#include "trig/error.hpp"
#include "trig/rational.hpp"

namespace trig {

/// Dual number a + eps*b over a base ring K, with eps^2 = 0 exactly.
/// `field_inv` / `ring_one` are found by ADL on K.
template <class K>
struct Dual {
    K a{};
    K b{};

    Dual() = default;
    Dual(K a) : a(std::move(a)) {}
    Dual(K a, K b) : a(std::move(a)), b(std::move(b)) {}

    friend Dual operator+(const Dual& x, const Dual& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend Dual operator-(const Dual& x, const Dual& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend Dual operator*(const Dual& x, const Dual& y) {
        return {x.a * y.a, x.a * y.b + x.b * y.a};
    }
    Dual operator-() const { return {-a, -b}; }

    friend bool operator==(const Dual& x, const Dual& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const Dual& x, const Dual& y) { return !(x == y); }

    Dual& operator+=(const Dual& o) { return *this = *this + o; }
    Dual& operator-=(const Dual& o) { return *this = *this - o; }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }
};

/// (a+eps b)^{-1} = a^{-1} - eps a^{-1} b a^{-1}; requires a invertible.
template <class K>
Dual<K> field_inv(const Dual<K>& x) {
    if (is_zero(x.a)) throw contract_error("dual number not invertible");
    K ia = field_inv(x.a);
    return {ia, -(ia * x.b * ia)};
}

template <class K>
Dual<K> operator/(const Dual<K>& x, const Dual<K>& y) {
    return x * field_inv(y);
}

template <class K>
Dual<K> ring_one(const Dual<K>& x) {
    return Dual<K>(ring_one(x.a));
}

template <class K>
Dual<K> ring_of_int(long n, const Dual<K>& x) {
    return Dual<K>(ring_of_int(n, x.a));
}

template <class K>
bool is_zero(const Dual<K>& x) {
    return is_zero(x.a) && is_zero(x.b);
}

template <class K>
std::string to_string(const Dual<K>& x) {
    using trig::to_string;
    return to_string(x.a) + " + eps*" + to_string(x.b);
}

} // namespace trig
