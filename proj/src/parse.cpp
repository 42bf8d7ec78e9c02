#include "trig/parse.hpp"

#include <cctype>

namespace trig {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start) throw ParseError("expected a number", start);
        return Int(s.substr(start, pos - start));
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

} // namespace

std::vector<ParsedTerm> parse_terms(const std::string& text,
                                    const std::string& var1,
                                    const std::string& var2) {
    Cursor cur{text};
    std::vector<ParsedTerm> terms;
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        if (cur.eat('+')) {
            sign = 1;
        } else if (cur.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected + or - between terms", cur.pos);
        }
        first = false;

        ParsedTerm term;
        term.coeff = Rat(sign);
        bool saw_factor = false;
        while (true) {
            char c = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Int num = cur.integer();
                Rat value(num);
                if (cur.eat('/')) {
                    Int den = cur.integer();
                    if (den == 0)
                        throw ParseError("zero denominator", cur.pos);
                    value = Rat(num, den);
                    value.canonicalize();
                }
                term.coeff *= value;
                saw_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t at = cur.pos;
                std::string name = cur.ident();
                int expo = 1;
                if (cur.eat('^'))
                    expo = static_cast<int>(cur.integer().get_si());
                if (name == var1) {
                    term.e1 += expo;
                } else if (name == var2) {
                    term.e2 += expo;
                } else {
                    throw ParseError("unknown variable '" + name + "'", at);
                }
                saw_factor = true;
            } else {
                if (!saw_factor)
                    throw ParseError("expected a term", cur.pos);
                break;
            }
            if (!cur.eat('*')) break;
        }
        terms.push_back(term);
    }
    if (terms.empty()) throw ParseError("empty polynomial", 0);
    return terms;
}

namespace {

template <class K, class Conv>
BinaryForm<K> build_form(const std::vector<ParsedTerm>& terms,
                         int declared_degree, Conv conv) {
    int degree = declared_degree;
    bool all_zero = true;
    for (const auto& t : terms)
        if (!is_zero(t.coeff)) all_zero = false;

    if (all_zero) {
        // keep the field context on the stored zeros
        BinaryForm<K> z(degree < 0 ? 0 : degree);
        for (int i = 0; i <= z.degree(); ++i) z.coeff(i) = conv(Rat(0));
        return z;
    }
    for (const auto& t : terms) {
        if (is_zero(t.coeff)) continue;
        int d = t.e1 + t.e2;
        if (degree < 0)
            degree = d;
        else if (d != degree)
            throw ParseError(
                declared_degree >= 0
                    ? "term of degree " + std::to_string(d) +
                          " in a form of degree " +
                          std::to_string(declared_degree)
                    : "polynomial is not homogeneous",
                0);
    }
    BinaryForm<K> f(degree);
    for (const auto& t : terms) {
        if (is_zero(t.coeff)) continue;
        f.coeff(t.e2) += conv(t.coeff);
    }
    return f;
}

} // namespace

BinaryForm<Rat> parse_form_q(const std::string& text,
                             const std::string& var1,
                             const std::string& var2, int declared_degree) {
    auto terms = parse_terms(text, var1, var2);
    return build_form<Rat>(terms, declared_degree,
                           [](const Rat& x) { return x; });
}

Fp rat_to_fp(const Rat& x, std::uint64_t p) {
    Int num = x.get_num(), den = x.get_den();
    Int pn(static_cast<unsigned long>(p));
    Int rn = num % pn;
    if (rn < 0) rn += pn;
    Int rd = den % pn;
    if (rd == 0)
        throw domain_error("denominator divisible by the field "
                           "characteristic");
    Fp a(rn.get_ui(), p), b(rd.get_ui(), p);
    return a / b;
}

BinaryForm<Fp> parse_form_fp(const std::string& text, std::uint64_t p,
                             const std::string& var1,
                             const std::string& var2, int declared_degree) {
    Fp::check_modulus(p);
    auto terms = parse_terms(text, var1, var2);
    return build_form<Fp>(terms, declared_degree,
                          [&](const Rat& x) { return rat_to_fp(x, p); });
}

} // namespace trig
