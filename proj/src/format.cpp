#include <sstream>

#include "trig/graded.hpp"
#include "trig/upoly.hpp"

namespace trig {

std::string to_string(const PolyQ& p, const std::string& var) {
    if (p.is_zero_poly()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat& c = p[k];
        if (is_zero(c)) continue;
        Rat a = abs(c);
        bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string mag = to_string(a);
        if (k == 0) {
            out << mag;
        } else {
            if (mag != "1") out << mag << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

namespace {

bool is_rat_constant(const PolyQ& p) { return p.degree() <= 0; }

std::string monomial_str(const Presentation& pres, const ExpVec& e) {
    std::ostringstream out;
    bool first = true;
    for (int v = 0; v < pres.nvars(); ++v) {
        if (e[v] == 0) continue;
        if (!first) out << "*";
        out << pres.vars()[v].name;
        if (e[v] > 1) out << "^" << e[v];
        first = false;
    }
    return out.str();
}

} // namespace

std::string GradedClass::str() const {
    if (poly_.is_zero_poly()) return "0";
    const Presentation& pres = *pres_;

    // sort terms by weighted degree, then by exponent vector
    std::vector<std::pair<ExpVec, PolyQ>> terms(poly_.terms().begin(),
                                                poly_.terms().end());
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const auto& a, const auto& b) {
                         int da = poly_.weighted_degree(a.first,
                                                        pres.weights());
                         int db = poly_.weighted_degree(b.first,
                                                        pres.weights());
                         if (da != db) return da < db;
                         return a.first > b.first; // earlier vars first
                     });

    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        std::string mono = monomial_str(pres, e);
        if (is_rat_constant(c)) {
            Rat r = c.is_zero_poly() ? Rat(0) : c[0];
            bool neg = sgn(r) < 0;
            std::string mag = to_string(static_cast<Rat>(abs(r)));
            if (first) {
                if (neg) out << "-";
                first = false;
            } else {
                out << (neg ? " - " : " + ");
            }
            if (mono.empty()) {
                out << mag;
            } else {
                if (mag != "1") out << mag << "*";
                out << mono;
            }
        } else {
            if (!first) out << " + ";
            first = false;
            out << "(" << to_string(c, "g") << ")";
            if (!mono.empty()) out << "*" << mono;
        }
    }
    return out.str();
}

} // namespace trig
