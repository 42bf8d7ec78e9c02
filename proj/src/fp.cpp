#include "trig/fp.hpp"

namespace trig {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Fp Fp::inv() const {
    if (v_ == 0) throw contract_error("inverse of zero in F_p");
    // extended Euclid on (v, p)
    std::int64_t t = 0, nt = 1;
    std::uint64_t r = p_, nr = v_;
    while (nr != 0) {
        std::uint64_t q = r / nr;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * nt;
        t = nt;
        nt = tmp_t;
        std::uint64_t tmp_r = r - q * nr;
        r = nr;
        nr = tmp_r;
    }
    std::int64_t res = t;
    if (res < 0) res += static_cast<std::int64_t>(p_);
    return Fp(static_cast<std::uint64_t>(res), p_);
}

} // namespace trig
