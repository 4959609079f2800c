#include "scx/coeff/ratfunc.hpp"

#include <stdexcept>

namespace scx {

RationalFunction::RationalFunction(long c) : num_(c) {}
RationalFunction::RationalFunction(const mpq_class& c) : num_(c) {}

RationalFunction::RationalFunction(const LaurentPoly& p) : shift_(p.low()), num_(p.poly()) {
    if (num_.is_zero()) shift_ = 0;
}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    shift_ = num.low() - den.low();
    num_ = num.poly();
    den_ = den.poly();
    reduce();
}

RationalFunction RationalFunction::T(int k) {
    RationalFunction r(1);
    r.shift_ = k;
    return r;
}

RationalFunction RationalFunction::lambda() {
    return RationalFunction(LaurentPoly(-1, QPoly(std::vector<mpq_class>{-1, 0, 1})));
}

RationalFunction RationalFunction::tau() {
    return RationalFunction(LaurentPoly(-2, QPoly(std::vector<mpq_class>{-1, 0, 0, 0, 1})));
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        shift_ = 0;
        den_ = QPoly(1);
        return;
    }
    int a = num_.low_degree();
    if (a > 0) {
        num_ = num_.shift_down(a);
        shift_ += a;
    }
    int b = den_.low_degree();
    if (b > 0) {
        den_ = den_.shift_down(b);
        shift_ -= b;
    }
    if (!den_.is_constant()) {
        QPoly g = QPoly::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = QPoly::divmod(num_, g).first;
            den_ = QPoly::divmod(den_, g).first;
        }
    }
    mpq_class l = den_.lead();
    if (l != 1) {
        mpq_class il = 1 / l;
        num_ *= il;
        den_ *= il;
    }
}

bool RationalFunction::is_one() const {
    return shift_ == 0 && den_.is_constant() && num_.is_constant() && !num_.is_zero() && num_.lead() == 1;
}

LaurentPoly RationalFunction::to_laurent() const {
    if (!is_laurent()) throw std::domain_error("not a Laurent polynomial: " + str());
    return LaurentPoly(shift_, num_);
}

mpq_class RationalFunction::constant() const {
    if (!is_constant()) throw std::domain_error("not a constant: " + str());
    return num_.is_zero() ? mpq_class(0) : num_.lead();
}

mpq_class RationalFunction::eval(const mpq_class& x) const {
    mpq_class d = den_.eval(x);
    if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
    mpq_class n = LaurentPoly(shift_, num_).eval(x);
    return n / d;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(T)");
    RationalFunction r;
    r.shift_ = -shift_;
    r.num_ = den_;
    r.den_ = num_;
    mpq_class l = r.den_.lead();
    if (l != 1) {
        mpq_class il = 1 / l;
        r.num_ *= il;
        r.den_ *= il;
    }
    return r;
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction r(1), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(shift_, o.shift_);
    QPoly a = num_.shift_up(shift_ - lo);
    QPoly b = o.num_.shift_up(o.shift_ - lo);
    if (den_ == o.den_) {
        num_ = a + b;
    } else {
        num_ = a * o.den_ + b * den_;
        den_ = den_ * o.den_;
    }
    shift_ = lo;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero() || o.is_zero()) return *this = RationalFunction();
    shift_ += o.shift_;
    num_ = num_ * o.num_;
    if (o.den_.is_constant()) {
        if (!den_.is_constant()) reduce();
        return *this;
    }
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

std::string RationalFunction::str() const {
    if (is_laurent()) return LaurentPoly(shift_, num_).str();
    return "(" + LaurentPoly(shift_, num_).str() + ")/(" + LaurentPoly(0, den_).str() + ")";
}

}  // namespace scx
