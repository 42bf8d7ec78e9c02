#pragma once

#include <memory>
#include <string>
#include <vector>

#include "trig/mpoly.hpp"
#include "trig/upoly.hpp"

namespace trig {

/// Coefficients of graded classes live in Q[g] so identities are verified
/// as polynomial identities in the genus, not per instance.
using ClassPoly = MPoly<PolyQ>;

struct PresVar {
    std::string name;
    int degree; // positive
};

/// Rewrite rule: var^power -> rhs. The right side must not contain the
/// left side (every rhs monomial has exponent of `var` < `power`), which
/// makes reduction terminate.
struct RewriteRule {
    int var;
    int power;
    ClassPoly rhs;
};

/// A presented graded ring: named variables with degrees, rewrite rules
/// replacing a single leading power of one variable, and a truncation
/// bound D. Immutable after construction; shared by the classes it owns.
class Presentation : public std::enable_shared_from_this<Presentation> {
  public:
    Presentation(std::vector<PresVar> vars, int truncation);

    void add_rule(const std::string& var, int power, ClassPoly rhs);

    int nvars() const { return static_cast<int>(vars_.size()); }
    int truncation() const { return trunc_; }
    const std::vector<PresVar>& vars() const { return vars_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const std::vector<int>& weights() const { return weights_; }

    int var_index(const std::string& name) const;

  private:
    std::vector<PresVar> vars_;
    std::vector<RewriteRule> rules_;
    std::vector<int> weights_;
    int trunc_;
};

using PresPtr = std::shared_ptr<const Presentation>;

/// Element of a presented graded ring, all stored terms of weighted degree
/// <= the presentation's truncation bound. Arithmetic truncates but does
/// not rewrite; `reduce` puts a class in normal form explicitly.
class GradedClass {
  public:
    GradedClass() = default;
    GradedClass(PresPtr pres, ClassPoly poly);

    static GradedClass zero(PresPtr pres);
    static GradedClass one(PresPtr pres);
    static GradedClass constant(PresPtr pres, PolyQ c);
    static GradedClass variable(PresPtr pres, const std::string& name);

    const PresPtr& presentation() const { return pres_; }
    const ClassPoly& poly() const { return poly_; }
    bool is_zero_class() const { return poly_.is_zero_poly(); }

    friend GradedClass operator+(const GradedClass& a, const GradedClass& b);
    friend GradedClass operator-(const GradedClass& a, const GradedClass& b);
    friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
    GradedClass operator-() const;
    friend GradedClass operator*(const PolyQ& s, const GradedClass& a);
    friend GradedClass operator*(long s, const GradedClass& a);

    friend bool operator==(const GradedClass& a, const GradedClass& b);
    friend bool operator!=(const GradedClass& a, const GradedClass& b) {
        return !(a == b);
    }

    /// coefficient of the monomial with the given exponents
    PolyQ coefficient(const ExpVec& e) const { return poly_.coefficient(e); }
    PolyQ coefficient_of_var(const std::string& name) const;

    /// terms of weighted degree exactly d
    GradedClass degree_part(int d) const;

    std::string str() const;

  private:
    void check_same(const GradedClass& o) const;

    PresPtr pres_;
    ClassPoly poly_;
};

/// Normal form w.r.t. the presentation's rewrite rules; idempotent and a
/// ring homomorphism onto normal forms.
GradedClass reduce(const GradedClass& c);

/// Drop terms of weighted degree > bound (degrees <= bound untouched).
GradedClass truncate(const GradedClass& c, int bound);

/// Multiplicative inverse of 1 + (degree >= 1 terms) up to degree bound.
GradedClass series_inverse(const GradedClass& c, int bound);

/// Coefficient of fiber_var, which must appear to power <= 1 everywhere.
GradedClass pushforward_p1(const GradedClass& c, const std::string& fiber_var);

/// Ring homomorphism into another presentation determined by variable
/// images (one class per source variable, in source order).
GradedClass substitute(const GradedClass& c, PresPtr target,
                       const std::vector<GradedClass>& images);

/// Instantiate the genus parameter: g -> g0 in every coefficient.
GradedClass instantiate(const GradedClass& c, long g0);

} // namespace trig
