#include "scx/coeff/parse.hpp"

#include <cctype>

namespace scx {

namespace {

void add_into(MonomialMap& m, const std::pair<int, int>& k, const Coef& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

MonomialMap mul(const MonomialMap& a, const MonomialMap& b) {
    MonomialMap r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) add_into(r, {ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

MonomialMap constant(const Coef& c) {
    MonomialMap m;
    add_into(m, {0, 0}, c);
    return m;
}

MonomialMap invert_monomial(const MonomialMap& m) {
    if (m.size() != 1) throw ParseError("division or negative power of a non-monomial expression");
    const auto& [k, c] = *m.begin();
    MonomialMap r;
    r[{-k.first, -k.second}] = c.inverse();
    return r;
}

class Parser {
public:
    explicit Parser(const std::string& s) {
        for (char ch : s)
            if (!std::isspace(static_cast<unsigned char>(ch))) src_ += ch;
    }

    MonomialMap run() {
        if (src_.empty()) throw ParseError("empty coefficient");
        MonomialMap r = expr();
        if (pos_ != src_.size()) throw ParseError("unexpected '" + std::string(1, src_[pos_]) + "' in coefficient");
        return r;
    }

private:
    bool peek(char c) const { return pos_ < src_.size() && src_[pos_] == c; }

    MonomialMap expr() {
        MonomialMap acc;
        bool first = true;
        while (true) {
            int sign = 1;
            if (peek('+') || peek('-')) {
                sign = peek('-') ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            MonomialMap t = term();
            for (const auto& [k, c] : t) add_into(acc, k, sign < 0 ? -c : c);
            first = false;
        }
        return acc;
    }

    MonomialMap term() {
        MonomialMap acc = factor();
        while (peek('*') || peek('/')) {
            bool div = peek('/');
            ++pos_;
            MonomialMap f = factor();
            acc = mul(acc, div ? invert_monomial(f) : f);
        }
        return acc;
    }

    MonomialMap factor() {
        if (peek('-') || peek('+')) {
            bool neg = peek('-');
            ++pos_;
            MonomialMap f = factor();
            return neg ? mul(constant(Coef(-1)), f) : f;
        }
        MonomialMap b = base();
        if (peek('^')) {
            ++pos_;
            int e = signed_int();
            if (e < 0) {
                b = invert_monomial(b);
                e = -e;
            }
            MonomialMap r = constant(Coef(1));
            for (int i = 0; i < e; ++i) r = mul(r, b);
            return r;
        }
        return b;
    }

    int signed_int() {
        int sign = 1;
        if (peek('-') || peek('+')) {
            sign = peek('-') ? -1 : 1;
            ++pos_;
        }
        if (peek('(')) {
            ++pos_;
            int v = signed_int();
            if (!peek(')')) throw ParseError("missing ')' in exponent");
            ++pos_;
            return sign * v;
        }
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer exponent");
        return sign * std::stoi(src_.substr(start, pos_ - start));
    }

    MonomialMap base() {
        if (pos_ >= src_.size()) throw ParseError("unexpected end of coefficient");
        char ch = src_[pos_];
        if (ch == '(') {
            ++pos_;
            MonomialMap r = expr();
            if (!peek(')')) throw ParseError("missing ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return constant(Coef(mpq_class(mpz_class(src_.substr(start, pos_ - start)))));
        }
        if (src_.compare(pos_, 3, "tau") == 0) {
            pos_ += 3;
            return constant(Coef::tau());
        }
        ++pos_;
        MonomialMap m;
        switch (ch) {
            case 'T': return constant(Coef::T(1));
            case 'L': return constant(Coef::lambda());
            case 'U': m[{1, 0}] = Coef(1); return m;
            case 'x': m[{0, 1}] = Coef(1); return m;
            default: throw ParseError("unknown symbol '" + std::string(1, ch) + "' in coefficient");
        }
    }

    std::string src_;
    size_t pos_ = 0;
};

}  // namespace

MonomialMap parse_expression(const std::string& s) { return Parser(s).run(); }

Coef parse_coef(const std::string& s) {
    MonomialMap m = parse_expression(s);
    Coef r;
    for (const auto& [k, c] : m) {
        if (k.first != 0 || k.second != 0) throw ParseError("U or x not allowed here: " + s);
        r += c;
    }
    return r;
}

UTerm parse_u_term(const std::string& s) {
    MonomialMap m = parse_expression(s);
    UTerm t;
    if (m.empty()) return t;
    int u = m.begin()->first.first;
    for (const auto& [k, c] : m) {
        if (k.second != 0) throw ParseError("x not allowed in complex entries: " + s);
        if (k.first != u) throw ParseError("entry mixes U-powers: " + s);
        t.c += c;
    }
    t.has_u = s.find('U') != std::string::npos;
    t.u_exp = u;
    return t;
}

}  // namespace scx
