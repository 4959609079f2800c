#include "scx/scomplex/scomplex.hpp"

#include <stdexcept>

namespace scx {

SComplex SComplex::trivial(Ring ring, GradingMode mode) { return with_generators(ring, mode, {}); }

SComplex SComplex::with_generators(Ring ring, GradingMode mode, std::vector<Generator> gens) {
    SComplex c;
    c.ring = ring;
    c.mode = mode;
    size_t n = gens.size();
    c.gens = std::move(gens);
    c.d = Mat(n, n);
    c.v = Mat(n, n);
    c.delta1 = Vec(n);
    c.delta2 = Vec(n);
    return c;
}

Mat SComplex::dtilde() const {
    size_t n = size();
    Mat m(2 * n + 1, 2 * n + 1);
    m.set_block(0, 0, d);
    m.set_block(n, 0, v);
    m.set_block(n, n, -d);
    for (size_t i = 0; i < n; ++i) {
        m(n + i, 2 * n) = delta2[i];
        m(2 * n, i) = delta1[i];
    }
    return m;
}

Mat SComplex::chi() const {
    size_t n = size();
    Mat m(2 * n + 1, 2 * n + 1);
    for (size_t i = 0; i < n; ++i) m(n + i, i) = Coef(1);
    return m;
}

std::vector<int> SComplex::tilde_degrees() const {
    size_t n = size();
    std::vector<int> deg(2 * n + 1, 0);
    for (size_t i = 0; i < n; ++i) {
        deg[i] = gens[i].deg_z;
        deg[n + i] = gens[i].deg_z + 1;
    }
    return deg;
}

std::vector<mpq_class> SComplex::tilde_levels() const {
    size_t n = size();
    std::vector<mpq_class> lv(2 * n + 1, mpq_class(0));
    for (size_t i = 0; i < n; ++i) lv[i] = lv[n + i] = gens[i].deg_i;
    return lv;
}

bool pinned_u_power(int from, int to, int shift, int& m) {
    int diff = from + shift - to;
    if (mod4(diff) != 0) return false;
    m = diff / 4;
    return true;
}

mpq_class t_level(const Coef& c, const mpq_class& omega) {
    if (c.is_zero()) return 0;
    const mpq_class slope = 2 * omega - mpq_class(1, 2);
    if (slope == 0) return 0;
    if (!c.is_laurent()) throw std::domain_error("non-Laurent entry is not I-homogeneous for omega != 1/4: " + c.str());
    LaurentPoly p = c.to_laurent();
    mpq_class a = slope * p.low(), b = slope * p.high();
    return a > b ? a : b;
}

SComplex base_change(const SComplex& c, Ring ring) {
    SComplex r = c;
    r.ring = ring;
    auto check = [&](const Coef& e) {
        if (!ring_contains(ring, e)) throw std::domain_error("entry " + e.str() + " is not in " + ring_name(ring));
    };
    for (size_t i = 0; i < c.size(); ++i) {
        check(c.delta1[i]);
        check(c.delta2[i]);
        for (size_t j = 0; j < c.size(); ++j) {
            check(c.d(i, j));
            check(c.v(i, j));
        }
    }
    return r;
}

}  // namespace scx
