#include "scx/framed/framed.hpp"

#include "scx/coeff/linalg.hpp"
#include "scx/coeff/local.hpp"
#include "scx/scomplex/ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace scx {

namespace {

const Coef& lam() {
    static const Coef l = Coef::lambda();
    return l;
}

void require_half(const SComplex& c) {
    if (c.ring == Ring::ZT) throw UnsupportedRing("framed complexes need 2 to be invertible");
}

Vec slot(const Vec& v, size_t off, size_t len) { return Vec(v.begin() + off, v.begin() + off + len); }

}  // namespace

Vec FramedChain::flat() const {
    Vec out = zeta1;
    out.insert(out.end(), zeta2.begin(), zeta2.end());
    return out;
}

FramedChain FramedChain::from_flat(const Vec& v) {
    if (v.size() % 2 != 0) throw std::invalid_argument("framed vector of odd length");
    const size_t h = v.size() / 2;
    return {slot(v, 0, h), slot(v, h, h)};
}

GradedDifferential build_framed(const SComplex& c) {
    require_half(c);
    const Mat dt = c.dtilde(), ch = c.chi();
    const size_t m = dt.rows();
    GradedDifferential g;
    g.D = Mat(2 * m, 2 * m);
    g.D.set_block(0, 0, dt);
    g.D.set_block(0, m, Coef(2) * lam() * lam() * ch);
    g.D.set_block(m, 0, Coef(2) * ch);
    g.D.set_block(m, m, dt);
    const auto deg = c.tilde_degrees();
    for (int t : deg) g.degrees.push_back(mod4(t));
    for (int t : deg) g.degrees.push_back(mod4(t - 2));
    g.modulus = 4;
    if (!(g.D * g.D).is_zero()) throw std::logic_error("d# does not square to zero");
    return g;
}

GradedDifferential build_reduced(const SComplex& c, int sign) {
    require_half(c);
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    GradedDifferential g;
    g.D = c.dtilde() + Coef(2 * sign) * lam() * c.chi();
    for (int t : c.tilde_degrees()) g.degrees.push_back(((t % 2) + 2) % 2);
    g.modulus = 2;
    if (!(g.D * g.D).is_zero()) throw std::logic_error("reduced differential does not square to zero");
    return g;
}

FramedChain sharp_x_action(const FramedChain& z) {
    return {vec_scale(Coef(-2) * lam() * lam(), z.zeta2), vec_scale(Coef(-2), z.zeta1)};
}

Mat iota_matrix(const SComplex& c, int sign) {
    const size_t m = 2 * c.size() + 1;
    Mat out(2 * m, m);
    out.set_block(0, 0, lam() * Mat::identity(m));
    out.set_block(m, 0, Coef(sign) * Mat::identity(m));
    return out;
}

Mat pi_matrix(const SComplex& c, int sign) {
    const size_t m = 2 * c.size() + 1;
    Mat out(m, 2 * m);
    out.set_block(0, 0, Mat::identity(m));
    out.set_block(0, m, Coef(sign) * lam() * Mat::identity(m));
    return out;
}

DvrHomology::DvrHomology(const Mat& D) : D_(D) {
    if (D.rows() != D.cols()) throw std::invalid_argument("differential must be square");
    if (!(D * D).is_zero()) throw std::invalid_argument("differential does not square to zero");
    const size_t n = D.rows();
    Smith s1 = smith_dvr(D);
    U1_ = s1.U;
    rho_ = s1.rank;
    exps_ = s1.exps;
    for (int e : exps_)
        if (e > 0) torsion_.push_back(e);

    std::vector<size_t> rest;
    for (size_t j = rho_; j < n; ++j) rest.push_back(j);
    Mat M = D * s1.Uinv.select_cols(rest);
    Smith s2 = smith_dvr(M);
    V2inv_ = s2.Vinv;
    r2_ = s2.rank;
    free_rank_ = n - rho_ - r2_;
}

bool DvrHomology::is_cycle(const Vec& y) const { return y.size() == D_.cols() && is_zero_vec(D_ * y); }

DvrHomology::Coordinates DvrHomology::coordinates(const Vec& cycle) const {
    if (!is_cycle(cycle)) throw NotACycle("coordinates of a non-cycle");
    const Vec y = U1_ * cycle;
    Coordinates out;
    Vec tail(y.begin() + static_cast<long>(rho_), y.end());
    const Vec z = V2inv_ * tail;
    out.free.assign(z.begin() + static_cast<long>(r2_), z.end());
    for (size_t i = 0; i < rho_; ++i) {
        const int e = exps_[i];
        if (e == 0) continue;
        auto series = lambda_series_expand(y[i], e);
        Coef r;
        for (int j = 0; j < e; ++j) r += Coef(series[static_cast<size_t>(j)]) * lam().pow(j);
        out.torsion.push_back(r);
    }
    return out;
}

std::optional<int> DvrHomology::divisibility(const Vec& cycle) const {
    std::optional<int> best;
    for (const Coef& x : coordinates(cycle).free) {
        if (x.is_zero()) continue;
        const int v = lambda_valuation(x);
        if (!best || v < *best) best = v;
    }
    return best;
}

DvrHomology homology_dvr(const GradedDifferential& g) { return DvrHomology(g.D); }

std::vector<size_t> field_ranks(const GradedDifferential& g) {
    const int mod = g.modulus;
    std::vector<std::vector<size_t>> idx(static_cast<size_t>(mod));
    for (size_t i = 0; i < g.degrees.size(); ++i) idx[static_cast<size_t>(g.degrees[i])].push_back(i);
    // rank of D restricted to degree t (mapping to t - 1)
    std::vector<size_t> out_rank(static_cast<size_t>(mod), 0);
    for (int t = 0; t < mod; ++t) {
        const auto& src = idx[static_cast<size_t>(t)];
        const auto& dst = idx[static_cast<size_t>((t + mod - 1) % mod)];
        if (src.empty() || dst.empty()) continue;
        out_rank[static_cast<size_t>(t)] = rank(g.D.select_cols(src).select_rows(dst));
    }
    std::vector<size_t> ranks(static_cast<size_t>(mod));
    for (int t = 0; t < mod; ++t) {
        const size_t dim = idx[static_cast<size_t>(t)].size();
        ranks[static_cast<size_t>(t)] = dim - out_rank[static_cast<size_t>(t)] - out_rank[static_cast<size_t>((t + 1) % mod)];
    }
    return ranks;
}

namespace {

struct Reduced {
    Vec A, B;  // sum zeta_m x^m = A + x B modulo x^2 = 4 L^2
};

Reduced reduce_special(const SComplex& c, const SpecialCycleWitness& w) {
    require_half(c);
    if (w.k != froyshov(c)) throw std::invalid_argument("special cycle is not at the Froyshov level");
    const size_t m = 2 * c.size() + 1;
    Reduced r{Vec(m), Vec(m)};
    const Coef four_l2 = Coef(4) * lam() * lam();
    for (const auto& [e, z] : psi_hat_coefficients(c, w.chain)) {
        if (e < 0) continue;
        if (e % 2 == 0)
            r.A = vec_add(r.A, vec_scale(four_l2.pow(e / 2), z));
        else
            r.B = vec_add(r.B, vec_scale(four_l2.pow((e - 1) / 2), z));
    }
    return r;
}

}  // namespace

FramedChain q_sharp_special(const SComplex& c, const SpecialCycleWitness& w) {
    Reduced r = reduce_special(c, w);
    return {r.A, vec_scale(Coef(-2), r.B)};
}

Vec q_tilde_special(const SComplex& c, const SpecialCycleWitness& w) {
    Reduced r = reduce_special(c, w);
    return vec_sub(r.A, vec_scale(Coef(2) * lam(), r.B));
}

std::optional<int> divisibility_index(const DvrHomology& h, const Vec& cycle) { return h.divisibility(cycle); }

std::optional<int> framed_degree(const SComplex& c, const FramedChain& z) {
    const auto deg = c.tilde_degrees();
    std::optional<int> out;
    auto visit = [&](const Vec& v, int shift) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            const int d = mod4(deg[i] + shift);
            if (out && *out != d) throw std::invalid_argument("framed chain is not homogeneous");
            out = d;
        }
    };
    visit(z.zeta1, 0);
    visit(z.zeta2, -2);
    return out;
}

namespace {

// <(f, g, a), (alpha, beta, r)> on C~' x C~. The signs make the pairing
// intertwine d~' and d~ up to -eps of the dual argument.
Coef tilde_pairing(const SComplex& c, const Vec& dual_v, const Vec& v) {
    const size_t n = c.size();
    Coef s = dual_v[2 * n] * v[2 * n];
    for (size_t i = 0; i < n; ++i) {
        s -= dual_v[n + i] * v[i];
        s += Coef(parity_sign(-c.gens[i].deg_z - 1)) * dual_v[i] * v[n + i];
    }
    return s;
}

}  // namespace

PairingResult pairing(const SComplex& c, const FramedChain& dual_chain, const FramedChain& chain) {
    const size_t m = 2 * c.size() + 1;
    if (dual_chain.zeta1.size() != m || chain.zeta1.size() != m)
        throw std::invalid_argument("pairing: chain sizes do not match the complex");
    const SComplex cd = dual(c);
    auto dd = framed_degree(cd, dual_chain);
    auto d = framed_degree(c, chain);
    if (dd && d && mod4(*dd + *d + 2) != 0) return {Coef(0), true};
    return {tilde_pairing(c, dual_chain.zeta2, chain.zeta1) + tilde_pairing(c, dual_chain.zeta1, chain.zeta2), false};
}

bool rank1_check(const SComplex& c) {
    auto r = field_ranks(build_reduced(c, 1));
    return r[0] == 1 && r[1] == 0;
}

}  // namespace scx
