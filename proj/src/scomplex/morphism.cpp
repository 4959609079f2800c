#include "scx/scomplex/morphism.hpp"

#include <stdexcept>

namespace scx {

namespace {

Mat row_of(const Vec& v) {
    Mat m(1, v.size());
    for (size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
    return m;
}

Vec apply_power(const Mat& a, Vec x, int k) {
    for (int i = 0; i < k; ++i) x = a * x;
    return x;
}

Coef dot(const Vec& a, const Vec& b) {
    Coef s;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

struct EntryCheck {
    const SMorphism& m;
    std::vector<std::string>& out;
    mpq_class level = 0;
    bool any = false;

    void operator()(const std::string& what, const Coef& e, int from_deg, const mpq_class& from_lvl, int to_deg,
                    const mpq_class& to_lvl, int shift) {
        if (e.is_zero()) return;
        if (!ring_contains(m.target.ring, e)) out.push_back(what + ": entry not in " + ring_name(m.target.ring));
        int u = 0;
        if (!pinned_u_power(from_deg, to_deg, shift, u)) {
            out.push_back(what + ": grading mismatch");
            return;
        }
        if (m.source.mode != GradingMode::ZxR) return;
        mpq_class gap = to_lvl + u + t_level(e, m.target.omega) - from_lvl;
        if (!any || gap > level) level = gap;
        any = true;
    }
};

mpq_class scan_entries(const SMorphism& m, std::vector<std::string>& out) {
    const SComplex& s = m.source;
    const SComplex& t = m.target;
    EntryCheck chk{m, out};
    const mpq_class zero = 0;
    for (size_t j = 0; j < s.size(); ++j) {
        const auto& g = s.gens[j];
        for (size_t i = 0; i < t.size(); ++i) {
            const auto& h = t.gens[i];
            chk("lambda[" + h.name + "<-" + g.name + "]", m.lambda(i, j), g.deg_z, g.deg_i, h.deg_z, h.deg_i,
                m.shift);
            chk("mu[" + h.name + "<-" + g.name + "]", m.mu(i, j), g.deg_z, g.deg_i, h.deg_z, h.deg_i, m.shift - 1);
        }
        chk("Delta1[" + g.name + "]", m.Delta1[j], g.deg_z, g.deg_i, 0, zero, m.shift);
    }
    for (size_t i = 0; i < t.size(); ++i)
        chk("Delta2[" + t.gens[i].name + "]", m.Delta2[i], 0, zero, t.gens[i].deg_z, t.gens[i].deg_i,
            m.shift - 1);
    chk("eta", m.eta, 0, zero, 0, zero, m.shift);
    return chk.any ? chk.level : mpq_class(0);
}

}  // namespace

SMorphism SMorphism::zero(const SComplex& source, const SComplex& target, int shift) {
    SMorphism m;
    m.source = source;
    m.target = target;
    m.shift = shift;
    m.lambda = Mat(target.size(), source.size());
    m.mu = Mat(target.size(), source.size());
    m.Delta1 = Vec(source.size());
    m.Delta2 = Vec(target.size());
    return m;
}

SMorphism SMorphism::identity(const SComplex& c) {
    SMorphism m = zero(c, c, 0);
    m.lambda = Mat::identity(c.size());
    m.eta = Coef(1);
    return m;
}

Mat SMorphism::tilde() const {
    const size_t n = source.size(), k = target.size();
    Mat t(2 * k + 1, 2 * n + 1);
    t.set_block(0, 0, lambda);
    t.set_block(k, 0, mu);
    t.set_block(k, n, lambda);
    for (size_t i = 0; i < k; ++i) t(k + i, 2 * n) = Delta2[i];
    for (size_t j = 0; j < n; ++j) t(2 * k, j) = Delta1[j];
    t(2 * k, 2 * n) = eta;
    return t;
}

std::vector<std::string> validate_morphism(const SMorphism& m) {
    const size_t n = m.source.size(), k = m.target.size();
    if (m.lambda.rows() != k || m.lambda.cols() != n || m.mu.rows() != k || m.mu.cols() != n ||
        m.Delta1.size() != n || m.Delta2.size() != k)
        throw std::invalid_argument("morphism dimensions do not match its complexes");
    std::vector<std::string> out;
    if (m.source.ring != m.target.ring) out.push_back("source and target rings differ");
    if (m.shift % 2 != 0) out.push_back("homological degree is not even");
    scan_entries(m, out);

    // Components of d~' lambda~ - lambda~ d~ in the splitting.
    const Mat diff = m.target.dtilde() * m.tilde() - m.tilde() * m.source.dtilde();
    const char* names[3] = {"C", "chiC", "R"};
    const size_t rs[4] = {0, k, 2 * k, 2 * k + 1};
    const size_t cs[4] = {0, n, 2 * n, 2 * n + 1};
    for (int bi = 0; bi < 3; ++bi)
        for (int bj = 0; bj < 3; ++bj)
            if (!diff.block(rs[bi], cs[bj], rs[bi + 1] - rs[bi], cs[bj + 1] - cs[bj]).is_zero())
                out.push_back(std::string("chain-map identity fails on component ") + names[bi] + "<-" + names[bj]);
    return out;
}

std::vector<Coef> c_coefficients(const SMorphism& m, int j_max) {
    const SComplex& s = m.source;
    const SComplex& t = m.target;
    std::vector<Coef> c;
    c.push_back(m.eta);
    for (int j = 1; j <= j_max; ++j) {
        Coef cj = dot(t.delta1, apply_power(t.v, m.Delta2, j - 1));
        cj += dot(m.Delta1, apply_power(s.v, s.delta2, j - 1));
        for (int l = 0; l <= j - 2; ++l)
            cj += dot(t.delta1, apply_power(t.v, m.mu * apply_power(s.v, s.delta2, j - 2 - l), l));
        c.push_back(cj);
    }
    return c;
}

bool is_strong_unit(const SComplex& c, const Coef& e) {
    if (c.mode != GradingMode::ZxR || c.omega == mpq_class(1, 4)) return ring_is_unit(c.ring, e);
    if (e.is_zero() || !e.is_laurent() || !ring_contains(c.ring, e)) return false;
    LaurentPoly p = e.to_laurent();
    if (p.low() != 0) return false;
    mpq_class c0 = p.coeff(0);
    return c.ring == Ring::ZT ? abs(c0) == 1 : c0 != 0;
}

mpq_class morphism_level(const SMorphism& m) {
    std::vector<std::string> ignored;
    return scan_entries(m, ignored);
}

MorphismClass classify_morphism(const SMorphism& m) {
    if (m.shift % 2 != 0) throw std::invalid_argument("morphism degree is not even");
    MorphismClass r;
    const int i = m.shift / 2;
    if (m.source.mode == GradingMode::ZxR) r.level = morphism_level(m);
    if (i < 0) return r;
    std::vector<Coef> c = c_coefficients(m, i);
    for (int j = 0; j < i; ++j)
        if (!c[static_cast<size_t>(j)].is_zero()) return r;
    r.height = i;
    r.strong = is_strong_unit(m.target, c[static_cast<size_t>(i)]);
    r.local = r.strong && i == 0;
    return r;
}

SMorphism compose(const SMorphism& g, const SMorphism& f) {
    if (f.target.size() != g.source.size()) throw std::invalid_argument("compose: complexes do not match");
    SMorphism h = SMorphism::zero(f.source, g.target, f.shift + g.shift);
    h.lambda = g.lambda * f.lambda;
    h.mu = g.mu * f.lambda + g.lambda * f.mu + Mat::column(g.Delta2) * row_of(f.Delta1);
    h.Delta2 = vec_add(g.lambda * f.Delta2, vec_scale(f.eta, g.Delta2));
    Vec d1 = (row_of(g.Delta1) * f.lambda).row(0);
    h.Delta1 = vec_add(d1, vec_scale(g.eta, f.Delta1));
    h.eta = g.eta * f.eta;
    return h;
}

}  // namespace scx
