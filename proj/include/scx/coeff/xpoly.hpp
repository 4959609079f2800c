#pragma once

#include "scx/coeff/ratfunc.hpp"

#include <map>
#include <string>

namespace scx {

// Finitely supported series sum_i c_i x^i. XPoly keeps exponents >= 0; the
// i-map of the small model produces negative exponents and uses XSeries.
class XSeries {
public:
    XSeries() = default;

    const std::map<int, Coef>& terms() const { return t_; }
    Coef coeff(int i) const;
    void add(int i, const Coef& c);
    bool is_zero() const { return t_.empty(); }
    int min_exponent() const { return t_.begin()->first; }
    int max_exponent() const { return t_.rbegin()->first; }

    XSeries operator-() const;
    friend XSeries operator+(const XSeries& a, const XSeries& b);
    friend XSeries operator*(const Coef& s, const XSeries& a);
    friend bool operator==(const XSeries& a, const XSeries& b) { return a.t_ == b.t_; }

    std::string str() const;

protected:
    std::map<int, Coef> t_;
};

class XPoly : public XSeries {
public:
    XPoly() = default;
    explicit XPoly(const XSeries& s);
    static XPoly monomial(const Coef& c, int i);
    void add(int i, const Coef& c);
};

}  // namespace scx
