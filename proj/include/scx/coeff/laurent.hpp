#pragma once

#include "scx/coeff/qpoly.hpp"

#include <map>
#include <string>

namespace scx {

// Finite Laurent polynomial sum_k c_k var^k over Q, stored as var^low * p
// with p(0) != 0 (or p = 0 and low = 0).
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT
    LaurentPoly(const mpq_class& c);  // NOLINT
    LaurentPoly(int low, QPoly p, std::string var = "T");
    explicit LaurentPoly(const std::map<int, mpq_class>& terms, std::string var = "T");

    static LaurentPoly monomial(const mpq_class& c, int k, std::string var = "T");

    bool is_zero() const { return p_.is_zero(); }
    int low() const { return low_; }
    int high() const { return low_ + p_.degree(); }
    const QPoly& poly() const { return p_; }
    const std::string& var() const { return var_; }
    mpq_class coeff(int k) const { return p_.coeff(k - low_); }
    std::map<int, mpq_class> terms() const;

    mpq_class eval(const mpq_class& x) const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.p_ == b.p_;
    }

    std::string str() const;

private:
    void normalize();
    int low_ = 0;
    QPoly p_;
    std::string var_ = "T";
};

// Writes sum c_k var^k with descending exponents, e.g. "T^2-T^-2".
std::string format_terms(const std::map<int, mpq_class>& terms, const std::string& var);

}  // namespace scx
