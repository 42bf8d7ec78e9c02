#include "trig/bundle.hpp"

namespace trig {

LinearMatrix<Fp> random_linear_matrix(int r, int d, std::uint64_t p,
                                      Rng& rng) {
    Fp::check_modulus_any(p);
    LinearMatrix<Fp> l(r, d);
    for (int i = 0; i < r + d; ++i)
        for (int j = 0; j < d; ++j) {
            BinaryForm<Fp> f(1, {rng.fp(p), rng.fp(p)});
            l.at(i, j) = std::move(f);
        }
    return l;
}

namespace {

// write `index` in base p into the 2*(r+d)*d coefficients, row-major
LinearMatrix<Fp> matrix_from_index(int r, int d, std::uint64_t p,
                                   unsigned long long index) {
    LinearMatrix<Fp> l(r, d);
    for (int i = 0; i < r + d; ++i)
        for (int j = 0; j < d; ++j) {
            Fp c1(index % p, p);
            index /= p;
            Fp c2(index % p, p);
            index /= p;
            l.at(i, j) = BinaryForm<Fp>(1, {c1, c2});
        }
    return l;
}

} // namespace

ProbeResult codim_probe(int r, int d, std::uint64_t p, long trials,
                        std::uint64_t seed, bool exhaustive) {
    Fp::check_modulus_any(p);
    if (trials < 1 && !exhaustive)
        throw contract_error("probe needs trials >= 1");
    ProbeResult res;
    res.exhaustive = exhaustive;

    if (exhaustive) {
        int ncoef = 2 * (r + d) * d;
        long double total_ld = 1;
        for (int i = 0; i < ncoef; ++i) total_ld *= static_cast<long double>(p);
        if (total_ld > 2e7L)
            throw domain_error("exhaustive probe space too large");
        unsigned long long total = 1;
        for (int i = 0; i < ncoef; ++i) total *= p;
        for (unsigned long long idx = 0; idx < total; ++idx) {
            LinearMatrix<Fp> l = matrix_from_index(r, d, p, idx);
            ++res.trials;
            if (!degeneracy_check(l)) {
                ++res.degenerate;
            } else {
                ++res.histogram[splitting_type(l)];
            }
        }
        return res;
    }

    for (long i = 0; i < trials; ++i) {
        Rng rng(seed, static_cast<std::uint64_t>(i));
        LinearMatrix<Fp> l = random_linear_matrix(r, d, p, rng);
        ++res.trials;
        if (!degeneracy_check(l)) {
            ++res.degenerate;
        } else {
            ++res.histogram[splitting_type(l)];
        }
    }
    return res;
}

} // namespace trig
