#pragma once

#include "trig/error.hpp"
#include "trig/rational.hpp"

namespace trig {

/// 2x2 matrix over K, row-major: [[a, b], [c, d]].
template <class K>
struct Mat2 {
    K a{}, b{}, c{}, d{};

    Mat2() = default;
    Mat2(K a, K b, K c, K d)
        : a(std::move(a)), b(std::move(b)), c(std::move(c)), d(std::move(d)) {}

    static Mat2 identity(const K& exemplar) {
        K one = ring_one(exemplar);
        return Mat2(one, K{}, K{}, one);
    }

    K det() const { return a * d - b * c; }
    K trace() const { return a + d; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                    x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d);
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return Mat2(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d);
    }
    friend Mat2 operator*(const K& s, const Mat2& x) {
        return Mat2(s * x.a, s * x.b, s * x.c, s * x.d);
    }
    Mat2 operator-() const { return Mat2(-a, -b, -c, -d); }

    Mat2 inverse() const {
        K dt = det();
        if (is_zero(dt)) throw contract_error("singular 2x2 matrix");
        K idt = field_inv(dt);
        return Mat2(idt * d, -(idt * b), -(idt * c), idt * a);
    }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    bool is_zero_mat() const {
        return is_zero(a) && is_zero(b) && is_zero(c) && is_zero(d);
    }
};

} // namespace trig
