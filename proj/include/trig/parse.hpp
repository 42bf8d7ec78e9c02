#pragma once

#include <string>
#include <vector>

#include "trig/binary_form.hpp"
#include "trig/error.hpp"
#include "trig/fp.hpp"
#include "trig/rational.hpp"

namespace trig {

/// Term grammar shared by every CLI input: terms c*v1^a*v2^b joined by
/// + and -, integer or p/q coefficients, whitespace insignificant.
/// Example: "3*x1^3 - 1/2*x1*x2^2".
struct ParsedTerm {
    Rat coeff;
    int e1 = 0;
    int e2 = 0;
};

std::vector<ParsedTerm> parse_terms(const std::string& text,
                                    const std::string& var1,
                                    const std::string& var2);

/// Parse a homogeneous form; all terms must share one total degree.
/// declared_degree = -1 infers the degree from the terms ("0" parses to
/// the zero form of degree 0 in that case).
BinaryForm<Rat> parse_form_q(const std::string& text,
                             const std::string& var1,
                             const std::string& var2,
                             int declared_degree = -1);

BinaryForm<Fp> parse_form_fp(const std::string& text, std::uint64_t p,
                             const std::string& var1,
                             const std::string& var2,
                             int declared_degree = -1);

Fp rat_to_fp(const Rat& x, std::uint64_t p);

} // namespace trig
