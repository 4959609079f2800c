#pragma once

#include "scx/coeff/ratfunc.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace scx {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomial in the auxiliary variables U and x with Q(T) coefficients,
// keyed by (U-exponent, x-exponent).
using MonomialMap = std::map<std::pair<int, int>, Coef>;

// Parses the coefficient grammar: sums and products of rationals, T, U, x,
// L (= (T^2-1)/T) and tau (= T^2-T^-2), with signed integer exponents and
// parentheses. Division is allowed by single-monomial expressions only.
MonomialMap parse_expression(const std::string& s);

// An expression free of U and x.
Coef parse_coef(const std::string& s);

// A single U-monomial c*U^m; m is empty when U does not occur.
struct UTerm {
    Coef c;
    bool has_u = false;
    int u_exp = 0;
};
UTerm parse_u_term(const std::string& s);

}  // namespace scx
