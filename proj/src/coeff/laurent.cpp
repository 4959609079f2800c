#include "scx/coeff/laurent.hpp"

#include <sstream>

namespace scx {

LaurentPoly::LaurentPoly(long c) : p_(c) {}
LaurentPoly::LaurentPoly(const mpq_class& c) : p_(c) {}

LaurentPoly::LaurentPoly(int low, QPoly p, std::string var) : low_(low), p_(std::move(p)), var_(std::move(var)) {
    normalize();
}

LaurentPoly::LaurentPoly(const std::map<int, mpq_class>& terms, std::string var) : var_(std::move(var)) {
    if (terms.empty()) return;
    low_ = terms.begin()->first;
    std::vector<mpq_class> c(static_cast<size_t>(terms.rbegin()->first - low_) + 1, mpq_class(0));
    for (const auto& [k, v] : terms) c[static_cast<size_t>(k - low_)] = v;
    p_ = QPoly(std::move(c));
    normalize();
}

LaurentPoly LaurentPoly::monomial(const mpq_class& c, int k, std::string var) {
    return LaurentPoly(k, QPoly(c), std::move(var));
}

void LaurentPoly::normalize() {
    if (p_.is_zero()) {
        low_ = 0;
        return;
    }
    int s = p_.low_degree();
    if (s > 0) {
        p_ = p_.shift_down(s);
        low_ += s;
    }
}

std::map<int, mpq_class> LaurentPoly::terms() const {
    std::map<int, mpq_class> t;
    const auto& c = p_.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) t[low_ + static_cast<int>(i)] = c[i];
    return t;
}

mpq_class LaurentPoly::eval(const mpq_class& x) const {
    mpq_class v = p_.eval(x);
    mpq_class xp = 1;
    int e = low_ < 0 ? -low_ : low_;
    for (int i = 0; i < e; ++i) xp *= x;
    if (low_ >= 0) return v * xp;
    return v / xp;
}

LaurentPoly LaurentPoly::operator-() const { return LaurentPoly(low_, -p_, var_); }

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.low_, b.low_);
    return LaurentPoly(lo, a.p_.shift_up(a.low_ - lo) + b.p_.shift_up(b.low_ - lo), a.var_);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    return LaurentPoly(a.low_ + b.low_, a.p_ * b.p_, a.var_);
}

std::string format_terms(const std::map<int, mpq_class>& terms, const std::string& var) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [k, c] = *it;
        if (c == 0) continue;
        mpq_class a = abs(c);
        if (c < 0)
            os << "-";
        else if (!first)
            os << "+";
        if (k == 0 || a != 1) {
            os << a.get_str();
            if (k != 0) os << "*";
        }
        if (k != 0) {
            os << var;
            if (k != 1) os << "^" << k;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

std::string LaurentPoly::str() const { return format_terms(terms(), var_); }

}  // namespace scx
