#include "trig/graded.hpp"

#include <algorithm>

#include "trig/error.hpp"

namespace trig {

Presentation::Presentation(std::vector<PresVar> vars, int truncation)
    : vars_(std::move(vars)), trunc_(truncation) {
    if (trunc_ < 0) throw config_error("negative truncation bound");
    for (const auto& v : vars_) {
        if (v.degree <= 0)
            throw config_error("variable " + v.name +
                               " must have positive degree");
        weights_.push_back(v.degree);
    }
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i].name == vars_[j].name)
                throw config_error("duplicate variable " + vars_[i].name);
}

void Presentation::add_rule(const std::string& var, int power,
                            ClassPoly rhs) {
    int v = var_index(var);
    if (power < 1) throw config_error("rewrite power must be >= 1");
    if (rhs.nvars() != nvars())
        throw config_error("rewrite rhs in wrong ring");
    for (const auto& [e, c] : rhs.terms()) {
        if (e[v] >= power)
            throw config_error("rewrite rule for " + var +
                               "^" + std::to_string(power) +
                               " does not terminate: rhs contains its own "
                               "left side");
    }
    rules_.push_back(RewriteRule{v, power, std::move(rhs)});
}

int Presentation::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return static_cast<int>(i);
    throw config_error("unknown variable " + name);
}

GradedClass::GradedClass(PresPtr pres, ClassPoly poly)
    : pres_(std::move(pres)), poly_(std::move(poly)) {
    if (!pres_) throw contract_error("class without presentation");
    if (poly_.nvars() != pres_->nvars())
        throw contract_error("class polynomial in wrong ring");
    poly_ = poly_.truncated(pres_->weights(), pres_->truncation());
}

GradedClass GradedClass::zero(PresPtr pres) {
    int n = pres->nvars();
    return GradedClass(std::move(pres), ClassPoly(n));
}

GradedClass GradedClass::one(PresPtr pres) {
    int n = pres->nvars();
    return GradedClass(std::move(pres),
                       ClassPoly::constant(n, PolyQ(Rat(1))));
}

GradedClass GradedClass::constant(PresPtr pres, PolyQ c) {
    int n = pres->nvars();
    return GradedClass(std::move(pres),
                       ClassPoly::constant(n, std::move(c)));
}

GradedClass GradedClass::variable(PresPtr pres, const std::string& name) {
    int v = pres->var_index(name);
    int n = pres->nvars();
    return GradedClass(std::move(pres),
                       ClassPoly::variable(n, v, PolyQ(Rat(1))));
}

void GradedClass::check_same(const GradedClass& o) const {
    if (pres_ != o.pres_)
        throw contract_error("classes from different presentations");
}

GradedClass operator+(const GradedClass& a, const GradedClass& b) {
    a.check_same(b);
    return GradedClass(a.pres_, a.poly_ + b.poly_);
}
GradedClass operator-(const GradedClass& a, const GradedClass& b) {
    a.check_same(b);
    return GradedClass(a.pres_, a.poly_ - b.poly_);
}
GradedClass operator*(const GradedClass& a, const GradedClass& b) {
    a.check_same(b);
    return GradedClass(a.pres_, a.poly_ * b.poly_);
}
GradedClass GradedClass::operator-() const {
    return GradedClass(pres_, -poly_);
}
GradedClass operator*(const PolyQ& s, const GradedClass& a) {
    return GradedClass(a.pres_, s * a.poly_);
}
GradedClass operator*(long s, const GradedClass& a) {
    return PolyQ(Rat(s)) * a;
}

bool operator==(const GradedClass& a, const GradedClass& b) {
    a.check_same(b);
    return a.poly_ == b.poly_;
}

PolyQ GradedClass::coefficient_of_var(const std::string& name) const {
    ExpVec e(pres_->nvars(), 0);
    e[pres_->var_index(name)] = 1;
    return poly_.coefficient(e);
}

GradedClass GradedClass::degree_part(int d) const {
    ClassPoly r(pres_->nvars());
    for (const auto& [e, c] : poly_.terms())
        if (poly_.weighted_degree(e, pres_->weights()) == d)
            r.set_term_unchecked(e, c);
    return GradedClass(pres_, std::move(r));
}

GradedClass reduce(const GradedClass& cls) {
    const auto& pres = *cls.presentation();
    ClassPoly work = cls.poly();
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& rule : pres.rules()) {
            ClassPoly next(work.nvars());
            for (const auto& [e, c] : work.terms()) {
                if (e[rule.var] >= rule.power) {
                    ExpVec rest = e;
                    rest[rule.var] -= rule.power;
                    next += ClassPoly::term(work.nvars(), rest, c) * rule.rhs;
                    changed = true;
                } else {
                    next.add_term(e, c);
                }
            }
            work = std::move(next);
        }
    }
    return GradedClass(cls.presentation(), std::move(work));
}

GradedClass truncate(const GradedClass& c, int bound) {
    return GradedClass(
        c.presentation(),
        c.poly().truncated(c.presentation()->weights(), bound));
}

GradedClass series_inverse(const GradedClass& c, int bound) {
    const auto& pres = c.presentation();
    ExpVec zero_exp(pres->nvars(), 0);
    PolyQ c0 = c.poly().coefficient(zero_exp);
    if (!(c0 == PolyQ(Rat(1))))
        throw Error(ErrorKind::domain,
                    "series inverse needs constant term 1");
    GradedClass n = truncate(c - GradedClass::one(pres), bound);
    GradedClass acc = GradedClass::one(pres);
    GradedClass power = GradedClass::one(pres);
    for (int j = 1; j <= bound; ++j) {
        power = truncate(power * (-n), bound);
        if (power.is_zero_class()) break;
        acc = acc + power;
    }
    return acc;
}

GradedClass pushforward_p1(const GradedClass& c,
                           const std::string& fiber_var) {
    const auto& pres = c.presentation();
    int v = pres->var_index(fiber_var);
    ClassPoly r(pres->nvars());
    for (const auto& [e, coeff] : c.poly().terms()) {
        if (e[v] > 1)
            throw contract_error("pushforward needs " + fiber_var +
                                 " to power <= 1 (reduce first)");
        if (e[v] == 1) {
            ExpVec rest = e;
            rest[v] = 0;
            r.add_term(rest, coeff);
        }
    }
    return GradedClass(pres, std::move(r));
}

GradedClass substitute(const GradedClass& c, PresPtr target,
                       const std::vector<GradedClass>& images) {
    const auto& pres = c.presentation();
    if (static_cast<int>(images.size()) != pres->nvars())
        throw contract_error("substitution needs one image per variable");
    for (const auto& im : images)
        if (im.presentation() != target)
            throw contract_error("substitution image in wrong presentation");

    GradedClass acc = GradedClass::zero(target);
    for (const auto& [e, coeff] : c.poly().terms()) {
        GradedClass term = GradedClass::constant(target, coeff);
        for (int v = 0; v < pres->nvars(); ++v)
            for (int k = 0; k < e[v]; ++k) term = term * images[v];
        acc = acc + term;
    }
    return acc;
}

GradedClass instantiate(const GradedClass& c, long g0) {
    Rat x(g0);
    ClassPoly r = c.poly().map_coefficients<PolyQ>(
        [&](const PolyQ& p) { return PolyQ(p.eval(x)); });
    return GradedClass(c.presentation(), std::move(r));
}

} // namespace trig
