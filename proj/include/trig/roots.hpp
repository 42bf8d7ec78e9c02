#pragma once

#include <algorithm>
#include <vector>

#include "trig/fp.hpp"
#include "trig/rational.hpp"
#include "trig/upoly.hpp"

namespace trig {

/// Roots of a univariate polynomial that lie in the base field itself.
/// Over Q: rational root theorem with divisor enumeration. Over F_p: scan
/// (fields used here are small; guarded).
std::vector<Rat> field_roots(const UPoly<Rat>& p);
std::vector<Fp> field_roots(const UPoly<Fp>& p);

/// Total order used to sort witness points deterministically.
inline bool field_less(const Rat& a, const Rat& b) { return a < b; }
inline bool field_less(const Fp& a, const Fp& b) {
    return a.value() < b.value();
}

} // namespace trig
