#pragma once

#include <cstdint>

#include "trig/fp.hpp"
#include "trig/rational.hpp"

namespace trig {

/// splitmix64: tiny deterministic generator. Each consumer derives its own
/// stream from (seed, index), so trial results never depend on scheduling
/// or call order.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    Rng(std::uint64_t seed, std::uint64_t stream)
        : state_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ull))) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform in [0, n) by rejection; exact, not modulo-biased.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw contract_error("Rng::below(0)");
        std::uint64_t limit = ~0ull - ~0ull % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    long range(long lo, long hi) { // inclusive bounds
        return lo + static_cast<long>(below(
                        static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Fp fp(std::uint64_t p) { return Fp(below(p), p); }

    /// Small random rational, suitable for exactness property tests.
    Rat rat(long max_num = 9, long max_den = 4) {
        long num = range(-max_num, max_num);
        long den = range(1, max_den);
        Rat r(num, den);
        r.canonicalize();
        return r;
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace trig
