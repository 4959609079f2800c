#include "scx/scomplex/ops.hpp"

#include <map>

namespace scx {

namespace {

// Sparse vector on the product basis of C~ (x) C~', keyed by basis indices.
using ProdVec = std::map<std::pair<size_t, size_t>, Coef>;

void accumulate(ProdVec& v, size_t p, size_t q, const Coef& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = v.emplace(std::make_pair(p, q), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

}  // namespace

void check_compatible(const SComplex& a, const SComplex& b) {
    if (a.ring != b.ring) throw RingMismatch("ring mismatch: " + ring_name(a.ring) + " vs " + ring_name(b.ring));
    if (a.mode != b.mode) throw RingMismatch("grading mode mismatch");
    if (a.mode == GradingMode::ZxR && a.omega != b.omega) throw RingMismatch("holonomy parameter mismatch");
}

TensorBasis::TensorBasis(const SComplex& A, const SComplex& B) : n(A.size()), m(B.size()) {
    check_compatible(A, B);
    degA = A.tilde_degrees();
    const size_t rB = 2 * m, rA = 2 * n;
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < m; ++h) {
            irr.emplace_back(g, h);
            gens.push_back({A.gens[g].name + "*" + B.gens[h].name, A.gens[g].deg_z + B.gens[h].deg_z,
                            A.gens[g].deg_i + B.gens[h].deg_i});
        }
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < m; ++h) {
            irr.emplace_back(n + g, h);
            gens.push_back({"chi(" + A.gens[g].name + ")*" + B.gens[h].name, A.gens[g].deg_z + 1 + B.gens[h].deg_z,
                            A.gens[g].deg_i + B.gens[h].deg_i});
        }
    for (size_t g = 0; g < n; ++g) {
        irr.emplace_back(g, rB);
        gens.push_back({A.gens[g].name + "*1", A.gens[g].deg_z, A.gens[g].deg_i});
    }
    for (size_t h = 0; h < m; ++h) {
        irr.emplace_back(rA, h);
        gens.push_back({"1*" + B.gens[h].name, B.gens[h].deg_z, B.gens[h].deg_i});
    }
    for (size_t k = 0; k < irr.size(); ++k) index[irr[k]] = k;
}

void TensorBasis::add_coords(size_t p, size_t q, const Coef& c, Vec& out) const {
    if (c.is_zero()) return;
    const size_t N = irr.size(), rA = 2 * n, rB = 2 * m;
    auto direct = index.find({p, q});
    if (direct != index.end()) {
        out[direct->second] += c;
        return;
    }
    if (p == rA && q == rB) {
        out[2 * N] += c;
        return;
    }
    const bool pb = p >= n && p < 2 * n, qb = q >= m && q < 2 * m;
    if (pb && qb) {
        // X(b (x) a') = eps(b) b (x) b'
        out[N + index.at({p, q - m})] += parity_sign(degA[p]) * c;
    } else if (p < n && qb) {
        // X(a (x) a') = b (x) a' + eps(a) a (x) b'
        const Coef s = parity_sign(degA[p]) * c;
        out[N + index.at({p, q - m})] += s;
        out[index.at({p + n, q - m})] -= s;
    } else if (pb && q == rB) {
        out[N + index.at({p - n, rB})] += c;
    } else if (p == rA && qb) {
        out[N + index.at({rA, q - m})] += c;
    } else {
        throw std::logic_error("tensor: product basis element outside the splitting");
    }
}

SComplex tensor(const SComplex& A, const SComplex& B) {
    TensorBasis tb(A, B);
    const size_t n = A.size(), m = B.size();
    const size_t tn = 2 * n + 1, tm = 2 * m + 1;
    const size_t rA = 2 * n, rB = 2 * m;
    const Mat dA = A.dtilde(), dB = B.dtilde();
    const size_t N = tb.irr.size();

    // Differential of x (x) y: d~x (x) y + eps(x) x (x) d~'y.
    auto dprod = [&](size_t p, size_t q) {
        ProdVec out;
        for (size_t i = 0; i < tn; ++i) accumulate(out, i, q, dA(i, p));
        const int s = parity_sign(tb.degA[p]);
        for (size_t j = 0; j < tm; ++j)
            if (!dB(j, q).is_zero()) accumulate(out, p, j, s * dB(j, q));
        return out;
    };

    SComplex T = SComplex::with_generators(A.ring, A.mode, tb.gens);
    T.omega = A.omega;
    for (size_t k = 0; k < N; ++k) {
        Vec col(2 * N + 1);
        for (const auto& [pq, c] : dprod(tb.irr[k].first, tb.irr[k].second)) tb.add_coords(pq.first, pq.second, c, col);
        for (size_t i = 0; i < N; ++i) {
            T.d(i, k) = col[i];
            T.v(i, k) = col[N + i];
        }
        T.delta1[k] = col[2 * N];
    }
    Vec rcol(2 * N + 1);
    for (const auto& [pq, c] : dprod(rA, rB)) tb.add_coords(pq.first, pq.second, c, rcol);
    for (size_t i = 0; i < N; ++i) {
        if (!rcol[i].is_zero()) throw std::logic_error("tensor: reducible differential leaves chi-image");
        T.delta2[i] = rcol[N + i];
    }
    if (!rcol[2 * N].is_zero()) throw std::logic_error("tensor: reducible differential has reducible part");
    return T;
}

SComplex dual(const SComplex& c) {
    const size_t n = c.size();
    std::vector<Generator> gens;
    for (const auto& g : c.gens) gens.push_back({g.name + "^", -g.deg_z - 1, -g.deg_i});
    SComplex r = SComplex::with_generators(c.ring, c.mode, std::move(gens));
    r.omega = c.omega;
    // d^(f) = -eps(f) f o d; see the sign discussion in the README.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const Coef& e = c.d(j, i);
            if (!e.is_zero()) r.d(i, j) = -parity_sign(r.gens[j].deg_z) * e;
            r.v(i, j) = c.v(j, i);
        }
    for (size_t i = 0; i < n; ++i) {
        r.delta1[i] = -c.delta2[i];
        r.delta2[i] = c.delta1[i];
    }
    return r;
}

SComplex direct_sum(const SComplex& a, const SComplex& b) {
    check_compatible(a, b);
    const size_t n = a.size(), m = b.size();
    std::vector<Generator> gens = a.gens;
    gens.insert(gens.end(), b.gens.begin(), b.gens.end());
    SComplex r = SComplex::with_generators(a.ring, a.mode, std::move(gens));
    r.omega = a.omega;
    r.d.set_block(0, 0, a.d);
    r.d.set_block(n, n, b.d);
    r.v.set_block(0, 0, a.v);
    r.v.set_block(n, n, b.v);
    for (size_t i = 0; i < n; ++i) {
        r.delta1[i] = a.delta1[i];
        r.delta2[i] = a.delta2[i];
    }
    for (size_t i = 0; i < m; ++i) {
        r.delta1[n + i] = b.delta1[i];
        r.delta2[n + i] = b.delta2[i];
    }
    return r;
}

}  // namespace scx
