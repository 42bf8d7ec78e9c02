#pragma once

#include <gmpxx.h>

#include <string>

#include "trig/error.hpp"

namespace trig {

// Exact scalars. mpq_class keeps values canonical (lowest terms, positive
// denominator) through arithmetic, which is exactly the invariant we need.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_integer(const Rat& x) { return x.get_den() == 1; }
inline Int ring_one(const Int&) { return Int(1); }
inline Int ring_of_int(long n, const Int&) { return Int(n); }

inline Rat rat_of(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

inline std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Rat field_inv(const Rat& x) {
    if (is_zero(x)) throw contract_error("division by zero rational");
    return Rat(1) / x;
}

inline Rat ring_one(const Rat&) { return Rat(1); }
inline Rat ring_of_int(long n, const Rat&) { return Rat(n); }

/// Round-to-nearest integer quotient, used by lattice reduction steps.
inline Int div_round(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r >= abs(b)) q += 1;
    return q;
}

} // namespace trig
