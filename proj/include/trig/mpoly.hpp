#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "trig/error.hpp"
#include "trig/rational.hpp"

namespace trig {

/// Exponent vector; fixed width per ring context.
using ExpVec = std::vector<int>;

/// Sparse multivariate polynomial over an exact coefficient ring C.
/// No zero coefficients are stored. Variable names/degrees are carried by
/// the caller (a presentation or a plain name list).
template <class C>
class MPoly {
  public:
    MPoly() : nvars_(0) {}
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, C c) {
        MPoly p(nvars);
        if (!is_zero(c)) p.terms_[ExpVec(nvars, 0)] = std::move(c);
        return p;
    }
    static MPoly variable(int nvars, int v, C one) {
        MPoly p(nvars);
        ExpVec e(nvars, 0);
        e[v] = 1;
        p.terms_[std::move(e)] = std::move(one);
        return p;
    }
    static MPoly term(int nvars, ExpVec e, C c) {
        MPoly p(nvars);
        if (!is_zero(c)) p.terms_[std::move(e)] = std::move(c);
        return p;
    }

    int nvars() const { return nvars_; }
    const std::map<ExpVec, C>& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const ExpVec& e, const C& c) {
        if (is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    C coefficient(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C{} : it->second;
    }

    // A default-constructed MPoly is a "blank" zero without a ring
    // context; arithmetic adopts the other operand's context.
    bool is_blank() const { return nvars_ == 0 && terms_.empty(); }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        if (a.nvars_ != b.nvars_) {
            if (a.is_blank()) return b;
            if (b.is_blank()) return a;
        }
        a.check(b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        if (a.nvars_ != b.nvars_) {
            if (a.is_blank()) return -b;
            if (b.is_blank()) return a;
        }
        a.check(b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    MPoly operator-() const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        if (a.nvars_ != b.nvars_) {
            if (a.is_blank() || b.is_blank())
                return MPoly(std::max(a.nvars_, b.nvars_));
        }
        a.check(b);
        MPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const C& s, const MPoly& p) {
        MPoly r(p.nvars_);
        for (const auto& [e, c] : p.terms_) {
            C v = s * c;
            if (!is_zero(v)) r.terms_[e] = std::move(v);
        }
        return r;
    }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.nvars_ != b.nvars_)
            return a.terms_.empty() && b.terms_.empty();
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) {
        return !(a == b);
    }

    int weighted_degree(const ExpVec& e,
                        const std::vector<int>& weights) const {
        int d = 0;
        for (int i = 0; i < nvars_; ++i) d += e[i] * weights[i];
        return d;
    }

    /// Drop terms of weighted degree > bound.
    MPoly truncated(const std::vector<int>& weights, int bound) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_)
            if (weighted_degree(e, weights) <= bound) r.terms_[e] = c;
        return r;
    }

    /// Substitute variable v by a polynomial (same ring context).
    MPoly substituted(int v, const MPoly& value) const {
        MPoly r(nvars_);
        std::vector<MPoly> pow{MPoly::constant(nvars_, unit_or_default())};
        for (const auto& [e, c] : terms_) {
            int k = e[v];
            while (static_cast<int>(pow.size()) <= k)
                pow.push_back(pow.back() * value);
            ExpVec rest = e;
            rest[v] = 0;
            r += MPoly::term(nvars_, rest, c) * pow[k];
        }
        return r;
    }

    /// Evaluate coefficients through a map C -> C2 (e.g. instantiate g).
    template <class C2, class F>
    MPoly<C2> map_coefficients(F&& f) const {
        MPoly<C2> r(nvars_);
        for (const auto& [e, c] : terms_) {
            C2 v = f(c);
            if (!is_zero(v)) r.set_term_unchecked(e, std::move(v));
        }
        return r;
    }

    void set_term_unchecked(const ExpVec& e, C c) {
        terms_[e] = std::move(c);
    }

    C unit_or_default() const {
        for (const auto& [e, c] : terms_) return ring_one(c);
        return C{};
    }

  private:
    void check(const MPoly& o) const {
        if (nvars_ != o.nvars_)
            throw contract_error("polynomial ring context mismatch");
    }

    int nvars_;
    std::map<ExpVec, C> terms_;
};

template <class C>
bool is_zero(const MPoly<C>& p) {
    return p.is_zero_poly();
}

template <class C>
MPoly<C> ring_one(const MPoly<C>& p) {
    for (const auto& [e, c] : p.terms()) {
        (void)e;
        return MPoly<C>::constant(p.nvars(), ring_one(c));
    }
    return MPoly<C>::constant(p.nvars(), ring_one(C{}));
}

template <class C>
MPoly<C> ring_of_int(long n, const MPoly<C>& p) {
    for (const auto& [e, c] : p.terms()) {
        (void)e;
        return MPoly<C>::constant(p.nvars(), ring_of_int(n, c));
    }
    return MPoly<C>::constant(p.nvars(), ring_of_int(n, C{}));
}

} // namespace trig
