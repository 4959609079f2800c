#include "scx/coeff/xpoly.hpp"

#include <stdexcept>

namespace scx {

Coef XSeries::coeff(int i) const {
    auto it = t_.find(i);
    return it == t_.end() ? Coef() : it->second;
}

void XSeries::add(int i, const Coef& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(i, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

XSeries XSeries::operator-() const {
    XSeries r;
    for (const auto& [i, c] : t_) r.t_[i] = -c;
    return r;
}

XSeries operator+(const XSeries& a, const XSeries& b) {
    XSeries r = a;
    for (const auto& [i, c] : b.t_) r.add(i, c);
    return r;
}

XSeries operator*(const Coef& s, const XSeries& a) {
    XSeries r;
    if (s.is_zero()) return r;
    for (const auto& [i, c] : a.t_) r.t_[i] = s * c;
    return r;
}

std::string XSeries::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + it->second.str() + ")";
        if (it->first != 0) out += "*x^" + std::to_string(it->first);
    }
    return out;
}

XPoly::XPoly(const XSeries& s) : XSeries(s) {
    if (!t_.empty() && t_.begin()->first < 0) throw std::domain_error("XPoly with negative x-exponent");
}

XPoly XPoly::monomial(const Coef& c, int i) {
    XPoly p;
    p.add(i, c);
    return p;
}

void XPoly::add(int i, const Coef& c) {
    if (i < 0) throw std::domain_error("XPoly with negative x-exponent");
    XSeries::add(i, c);
}

}  // namespace scx
