#include "scx/coeff/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace scx {

QPoly::QPoly(std::vector<mpq_class> c) : c_(std::move(c)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

QPoly::QPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

QPoly::QPoly(const mpq_class& c) {
    if (c != 0) c_.push_back(c);
}

QPoly QPoly::monomial(const mpq_class& c, int deg) {
    QPoly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<size_t>(deg) + 1, mpq_class(0));
    p.c_.back() = c;
    return p;
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(i)];
}

int QPoly::low_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

QPoly QPoly::shift_down(int k) const {
    if (k <= 0) return shift_up(-k);
    QPoly r;
    if (static_cast<int>(c_.size()) <= k) return r;
    for (int i = 0; i < k; ++i)
        if (c_[static_cast<size_t>(i)] != 0) throw std::logic_error("shift_down: nonzero low coefficient");
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

QPoly QPoly::shift_up(int k) const {
    if (k < 0) return shift_down(-k);
    if (is_zero() || k == 0) return *this;
    QPoly r;
    r.c_.assign(static_cast<size_t>(k), mpq_class(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

mpq_class QPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

QPoly QPoly::derivative() const {
    std::vector<mpq_class> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    QPoly r = *this;
    mpq_class l = lead();
    if (l == 1) return r;
    for (auto& x : r.c_) x /= l;
    return r;
}

bool QPoly::has_integer_coeffs() const {
    for (const auto& x : c_)
        if (x.get_den() != 1) return false;
    return true;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const mpq_class& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    QPoly q, r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.c_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, mpq_class(0));
    const mpq_class& lb = b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int s = r.degree() - b.degree();
        mpq_class f = r.lead() / lb;
        q.c_[static_cast<size_t>(s)] = f;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[j + static_cast<size_t>(s)] -= f * b.c_[j];
        r.trim();
    }
    q.trim();
    return {q, r};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

int QPoly::order_at(const mpq_class& r) const {
    if (is_zero()) return -1;
    int ord = 0;
    QPoly p = *this;
    const QPoly lin(std::vector<mpq_class>{-r, 1});
    while (true) {
        auto [q, rem] = divmod(p, lin);
        if (!rem.is_zero()) return ord;
        p = std::move(q);
        ++ord;
    }
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const mpq_class& c = c_[i];
        if (c == 0) continue;
        mpq_class a = abs(c);
        os << (c < 0 ? (first ? "-" : "-") : (first ? "" : "+"));
        if (i == 0 || a != 1) {
            os << a.get_str();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace scx
