#pragma once

#include "scx/coeff/laurent.hpp"

#include <string>

namespace scx {

// Element of Q(T) in reduced form T^shift * num / den, where num(0) != 0,
// den(0) != 0, den is monic and gcd(num, den) = 1. Laurent polynomials are
// exactly the elements with den = 1, which keeps their arithmetic gcd-free.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(long c);  // NOLINT
    RationalFunction(const mpq_class& c);  // NOLINT
    RationalFunction(const LaurentPoly& p);  // NOLINT
    RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

    static RationalFunction T(int k = 1);
    static RationalFunction lambda();  // T - T^-1
    static RationalFunction tau();     // T^2 - T^-2

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return shift_ == 0 && den_.is_constant() && num_.is_constant(); }
    bool is_laurent() const { return den_.is_constant(); }
    int shift() const { return shift_; }
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    LaurentPoly numerator() const { return LaurentPoly(shift_, num_); }
    LaurentPoly denominator() const { return LaurentPoly(0, den_); }
    // Requires is_laurent().
    LaurentPoly to_laurent() const;
    // Constant value; requires is_constant().
    mpq_class constant() const;

    // Value at T = x; throws if the denominator vanishes there.
    mpq_class eval(const mpq_class& x) const;

    RationalFunction inverse() const;
    RationalFunction pow(int e) const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Coefficient-grammar string, e.g. "T^2-T^-2" or "(T^2-1)/(T^2+1)".
    std::string str() const;

private:
    void reduce();
    int shift_ = 0;
    QPoly num_;
    QPoly den_ = QPoly(1);
};

using Coef = RationalFunction;

}  // namespace scx
