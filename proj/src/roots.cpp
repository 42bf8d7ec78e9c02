#include "trig/roots.hpp"

#include "trig/error.hpp"

namespace trig {

namespace {

std::vector<Int> positive_divisors(Int n) {
    n = abs(n);
    std::vector<Int> divs;
    if (n == 0) return divs;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            Int q = n / d;
            if (q != d) divs.push_back(q);
        }
    }
    return divs;
}

} // namespace

std::vector<Rat> field_roots(const UPoly<Rat>& p) {
    std::vector<Rat> roots;
    if (p.is_zero_poly())
        throw contract_error("roots of the zero polynomial");
    if (p.degree() == 0) return roots;

    // clear denominators -> primitive integer polynomial
    Int lcm = 1;
    for (const Rat& c : p.coeffs())
        lcm = lcm / gcd(lcm, Int(c.get_den())) * Int(c.get_den());
    std::vector<Int> ic;
    for (const Rat& c : p.coeffs()) {
        Rat v = c * Rat(lcm);
        ic.push_back(Int(v.get_num()));
    }
    // strip powers of the variable
    std::size_t shift = 0;
    while (shift < ic.size() && ic[shift] == 0) ++shift;
    if (shift > 0) roots.push_back(Rat(0));
    std::vector<Int> c(ic.begin() + shift, ic.end());
    if (c.size() <= 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    Int a0 = c.front(), an = c.back();
    auto eval_zero = [&](const Rat& x) {
        Rat acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * x + Rat(*it);
        return is_zero(acc);
    };
    for (const Int& num : positive_divisors(a0)) {
        for (const Int& den : positive_divisors(an)) {
            if (gcd(num, den) != 1) continue;
            Rat cand(num, den);
            cand.canonicalize();
            if (eval_zero(cand)) roots.push_back(cand);
            Rat neg = -cand;
            if (eval_zero(neg)) roots.push_back(neg);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Fp> field_roots(const UPoly<Fp>& p) {
    if (p.is_zero_poly())
        throw contract_error("roots of the zero polynomial");
    std::uint64_t modulus = 0;
    for (const Fp& c : p.coeffs())
        if (c.modulus() != 0) {
            modulus = c.modulus();
            break;
        }
    std::vector<Fp> roots;
    if (modulus == 0 || p.degree() == 0) return roots;
    if (modulus > (1ull << 20))
        throw domain_error("root enumeration over F_p needs p <= 2^20");
    for (std::uint64_t v = 0; v < modulus; ++v) {
        Fp x(v, modulus);
        if (is_zero(p.eval(x))) roots.push_back(x);
    }
    return roots;
}

} // namespace trig
