#pragma once

#include <cstdint>
#include <string>

#include "trig/error.hpp"

namespace trig {

bool is_prime_u64(std::uint64_t n);

/// Element of a prime field F_p, p > 3. The modulus travels with the value;
/// mixing moduli is a contract error. Values are kept reduced to [0, p).
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    static std::uint64_t check_modulus(std::uint64_t p) {
        if (p <= 3) throw contract_error("prime field requires p > 3");
        return check_modulus_any(p);
    }

    /// Linear-algebra-only paths (rank counting) work in any
    /// characteristic; the cubic-form theory needs p > 3.
    static std::uint64_t check_modulus_any(std::uint64_t p) {
        if (!is_prime_u64(p))
            throw contract_error("modulus " + std::to_string(p) +
                                 " is not prime");
        if (p < 2) throw contract_error("modulus must be a prime");
        return p;
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    friend bool operator==(const Fp& a, const Fp& b) {
        // a blank (default-constructed) element is the zero of any field
        if (a.v_ != b.v_) return false;
        if (a.p_ == b.p_) return true;
        return (a.p_ == 0 || b.p_ == 0) && a.v_ == 0;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t p = matched(a, b);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= p) s -= p;
        return raw(s, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t p = matched(a, b);
        return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + p - b.v_, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t p = matched(a, b);
        if (p == 0) return Fp();
        return raw(static_cast<std::uint64_t>(
                       (static_cast<unsigned __int128>(a.v_) * b.v_) % p),
                   p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inv() const;

    bool is_zero() const { return v_ == 0; }

  private:
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }
    static std::uint64_t matched(const Fp& a, const Fp& b) {
        // A modulus of 0 marks a "blank" element (default constructed);
        // adopt the other operand's field in that case.
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        if (a.p_ != b.p_) throw contract_error("mixed prime fields");
        return a.p_;
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }
inline Fp field_inv(const Fp& x) { return x.inv(); }
inline Fp ring_one(const Fp& x) {
    if (x.modulus() == 0)
        throw contract_error("prime field element without modulus");
    return Fp(1, x.modulus());
}
inline Fp ring_of_int(long n, const Fp& like) {
    std::uint64_t p = like.modulus();
    if (p == 0) throw contract_error("prime field element without modulus");
    long r = n % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
}

} // namespace trig
