#include "scx/equivariant/equivariant.hpp"

#include "scx/coeff/linalg.hpp"
#include "scx/coeff/local.hpp"
#include "scx/scomplex/ops.hpp"

#include <algorithm>

namespace scx {

namespace {

Vec apply_v(const SComplex& c, const Vec& a, int times) {
    Vec r = a;
    for (int t = 0; t < times; ++t) r = c.v * r;
    return r;
}

Coef apply_delta1(const SComplex& c, const Vec& a) {
    Coef s;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !c.delta1[i].is_zero()) s += c.delta1[i] * a[i];
    return s;
}

// Row vector of the functional delta1 v^m.
Vec delta1_v_row(const SComplex& c, int m) {
    Vec row = c.delta1;
    const Mat vt = c.v.transpose();
    for (int t = 0; t < m; ++t) row = vt * row;
    return row;
}

// Blocks of a C~ vector: a-part, b-part and reducible coordinate.
struct TildeParts {
    Vec a, b;
    Coef r;
};

TildeParts split_tilde(const Vec& z, size_t n) {
    TildeParts p{Vec(z.begin(), z.begin() + static_cast<long>(n)),
                 Vec(z.begin() + static_cast<long>(n), z.begin() + static_cast<long>(2 * n)), z[2 * n]};
    return p;
}

// The large-to-small map on the hat complexes.
HatChain phi_hat(const SComplex& c, const std::map<int, Vec>& zetas) {
    const size_t n = c.size();
    HatChain out{Vec(n), XPoly()};
    for (const auto& [m, z] : zetas) {
        if (m < 0) throw std::logic_error("phi_hat: negative x-exponent in the large hat model");
        TildeParts p = split_tilde(z, n);
        out.alpha = vec_add(out.alpha, apply_v(c, p.b, m));
        out.poly.add(m, p.r);
        Vec vb = p.b;
        for (int j = 0; j < m; ++j) {
            out.poly.add(m - j - 1, apply_delta1(c, vb));
            vb = c.v * vb;
        }
    }
    return out;
}

void check_ring(const SComplex& c) {
    if (c.ring == Ring::ZT)
        throw UnsupportedRing("special cycles need a field or the local ring: base-change Z[T] to Q(T) or localT1");
}

}  // namespace

std::vector<size_t> generators_in_degree(const SComplex& c, int deg) {
    std::vector<size_t> r;
    for (size_t g = 0; g < c.size(); ++g)
        if (mod4(c.gens[g].deg_z - deg) == 0) r.push_back(g);
    return r;
}

mpq_class component_level(const SComplex& c, size_t g, int D) {
    int m = 0;
    if (!pinned_u_power(D, c.gens[g].deg_z, 0, m)) throw std::logic_error("component_level: degree mismatch");
    return c.gens[g].deg_i + m;
}

HatChain SpecialSystem::chain(const Vec& u, size_t n) const {
    HatChain z{Vec(n), XPoly()};
    for (size_t j = 0; j < alpha_gens.size(); ++j) z.alpha[alpha_gens[j]] = u[j];
    for (size_t j = 0; j < a_exps.size(); ++j) z.poly.add(a_exps[j], u[alpha_gens.size() + j]);
    return z;
}

SpecialSystem special_system(const SComplex& c, int k, const Bound& s, const std::optional<mpq_class>& max_level) {
    const bool leveled = c.mode == GradingMode::ZxR;
    if (leveled && (s || max_level) && c.omega != mpq_class(1, 4))
        throw std::domain_error("filtered special cycles are implemented for omega = 1/4 only");
    const size_t n = c.size();
    SpecialSystem sys;
    sys.k = k;
    for (size_t g : generators_in_degree(c, 2 * k - 1)) {
        mpq_class lv = leveled ? component_level(c, g, 2 * k - 1) : mpq_class(0);
        if (leveled && max_level && lv > *max_level) continue;
        sys.alpha_gens.push_back(g);
        sys.unknown_levels.push_back(lv);
    }
    if (k <= 0)
        for (int i = (-k) % 2; i <= -k; i += 2) {
            mpq_class lv(i + k, 2);
            lv.canonicalize();
            if (leveled && max_level && lv > *max_level) continue;
            sys.a_exps.push_back(i);
            sys.unknown_levels.push_back(lv);
        }
    const size_t na = sys.alpha_gens.size(), nu = sys.unknowns();

    std::vector<Vec> rows;
    // Defect dalpha - sum v^i delta2(a_i), one row per target generator.
    std::vector<Vec> vd2;
    for (int i : sys.a_exps) vd2.push_back(apply_v(c, c.delta2, i));
    for (size_t g = 0; g < n; ++g) {
        if (leveled && s && mod4(c.gens[g].deg_z - (2 * k - 2)) == 0 && component_level(c, g, 2 * k - 2) <= *s)
            continue;
        Vec row(nu);
        for (size_t j = 0; j < na; ++j) row[j] = c.d(g, sys.alpha_gens[j]);
        for (size_t j = 0; j < sys.a_exps.size(); ++j) row[na + j] = -vd2[j][g];
        if (!is_zero_vec(row)) rows.push_back(std::move(row));
    }
    // Vanishing of the i-map between x^{-1} and x^{-k+1}.
    for (int m = 0; m <= k - 2; ++m) {
        Vec full = delta1_v_row(c, m);
        Vec row(nu);
        for (size_t j = 0; j < na; ++j) row[j] = full[sys.alpha_gens[j]];
        if (!is_zero_vec(row)) rows.push_back(std::move(row));
    }
    sys.constraints = Mat(rows.size(), nu);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t j = 0; j < nu; ++j) sys.constraints(r, j) = rows[r][j];

    sys.f_row = Vec(nu);
    if (k >= 1) {
        Vec full = delta1_v_row(c, k - 1);
        for (size_t j = 0; j < na; ++j) sys.f_row[j] = full[sys.alpha_gens[j]];
    } else {
        auto it = std::find(sys.a_exps.begin(), sys.a_exps.end(), -k);
        if (it != sys.a_exps.end()) sys.f_row[na + static_cast<size_t>(it - sys.a_exps.begin())] = Coef(1);
    }
    return sys;
}

HatChain dhat_apply(const SComplex& c, const HatChain& z) {
    Vec out = c.d * z.alpha;
    for (const auto& [i, a] : z.poly.terms()) out = vec_sub(out, vec_scale(a, apply_v(c, c.delta2, i)));
    return {out, XPoly()};
}

std::vector<std::pair<int, Coef>> i_map_leading(const SComplex& c, const HatChain& z, int depth) {
    std::vector<std::pair<int, Coef>> out;
    Vec va = z.alpha;
    std::vector<std::pair<int, Coef>> neg;
    for (int m = 0; m < depth; ++m) {
        Coef e = apply_delta1(c, va);
        if (!e.is_zero()) neg.emplace_back(-m - 1, e);
        va = c.v * va;
    }
    std::reverse(neg.begin(), neg.end());
    out = neg;
    for (const auto& [i, a] : z.poly.terms())
        if (i >= -depth) out.emplace_back(i, a);
    return out;
}

std::optional<SpecialCycleWitness> special_cycle_search(const SComplex& c, int k, const Bound& s) {
    check_ring(c);
    SpecialSystem sys = special_system(c, k, s);
    if (sys.unknowns() == 0) return std::nullopt;
    auto dot = [&](const Vec& col) {
        Coef f;
        for (size_t j = 0; j < col.size(); ++j) f += sys.f_row[j] * col[j];
        return f;
    };
    SpecialCycleWitness w;
    w.k = k;
    w.s = s;
    if (c.ring == Ring::QT) {
        Mat K = sys.constraints.rows() ? nullspace(sys.constraints) : Mat::identity(sys.unknowns());
        for (size_t j = 0; j < K.cols(); ++j) {
            Vec col = K.col(j);
            Coef f = dot(col);
            if (f.is_zero()) continue;
            w.chain = sys.chain(vec_scale(f.inverse(), col), c.size());
            w.f = Coef(1);
            w.valuation = 0;
            return w;
        }
        return std::nullopt;
    }
    Mat K = sys.constraints.rows() ? kernel_dvr(sys.constraints) : Mat::identity(sys.unknowns());
    int best = kInfiniteValuation;
    size_t best_j = 0;
    for (size_t j = 0; j < K.cols(); ++j) {
        Coef f = dot(K.col(j));
        if (f.is_zero()) continue;
        int val = lambda_valuation(f);
        if (val < best) {
            best = val;
            best_j = j;
        }
    }
    if (best == kInfiniteValuation) return std::nullopt;
    Vec col = K.col(best_j);
    w.chain = sys.chain(col, c.size());
    w.f = dot(col);
    w.valuation = best;
    return w;
}

int froyshov(const SComplex& c) {
    const SComplex f = c.ring == Ring::QT ? c : base_change(c, Ring::QT);
    const int n = static_cast<int>(c.size());
    for (int k = n + 1; k >= -(n + 1); --k)
        if (special_cycle_search(f, k)) return k;
    throw std::logic_error("froyshov: no special cycle within the search range");
}

std::optional<int> j_ideal_valuation(const SComplex& c, int k) {
    const SComplex l = c.ring == Ring::Local ? c : base_change(c, Ring::Local);
    auto w = special_cycle_search(l, k);
    if (!w) return std::nullopt;
    return w->valuation;
}

LargeHatChain psi_hat(const SComplex& c, const HatChain& z) {
    LargeHatChain out{{}, z.alpha, z.poly};
    for (const auto& [i, a] : z.poly.terms()) {
        Vec w = vec_scale(a, c.delta2);
        for (int j = 0; j < i; ++j) {
            auto [it, fresh] = out.first.emplace(i - j - 1, w);
            if (!fresh) it->second = vec_add(it->second, w);
            w = c.v * w;
        }
    }
    for (auto it = out.first.begin(); it != out.first.end();) {
        if (is_zero_vec(it->second)) it = out.first.erase(it);
        else ++it;
    }
    return out;
}

std::map<int, Vec> psi_hat_coefficients(const SComplex& c, const HatChain& z) {
    const size_t n = c.size();
    LargeHatChain L = psi_hat(c, z);
    std::map<int, Vec> out;
    auto slot = [&](int m) -> Vec& {
        auto [it, fresh] = out.emplace(m, Vec(2 * n + 1));
        return it->second;
    };
    for (const auto& [m, p] : L.first) {
        Vec& z_m = slot(m);
        for (size_t g = 0; g < n; ++g) z_m[g] += p[g];
    }
    if (!is_zero_vec(L.second)) {
        Vec& z0 = slot(0);
        for (size_t g = 0; g < n; ++g) z0[n + g] += L.second[g];
    }
    for (const auto& [m, a] : L.third.terms()) slot(m)[2 * n] += a;
    return out;
}

HatChain transport(const SMorphism& m, const HatChain& z) {
    const Mat lt = m.tilde();
    std::map<int, Vec> image;
    for (const auto& [i, zeta] : psi_hat_coefficients(m.source, z)) image[i] = lt * zeta;
    return phi_hat(m.target, image);
}

HatChain tensor_chain(const SComplex& a, const SComplex& b, const HatChain& za, const HatChain& zb) {
    TensorBasis tb(a, b);
    const SComplex t = tensor(a, b);
    const size_t N = t.size();
    std::map<int, Vec> prod;
    for (const auto& [i, x] : psi_hat_coefficients(a, za))
        for (const auto& [j, y] : psi_hat_coefficients(b, zb)) {
            auto [it, fresh] = prod.emplace(i + j, Vec(2 * N + 1));
            for (size_t p = 0; p < x.size(); ++p) {
                if (x[p].is_zero()) continue;
                for (size_t q = 0; q < y.size(); ++q)
                    if (!y[q].is_zero()) tb.add_coords(p, q, x[p] * y[q], it->second);
            }
        }
    return phi_hat(t, prod);
}

int check_torsion_bound(const SComplex& c, int k) {
    const SComplex f = c.ring == Ring::QT ? c : base_change(c, Ring::QT);
    const size_t n = f.size();
    const std::vector<size_t> low = generators_in_degree(f, k - 2);
    const int rank_low = static_cast<int>(low.size());
    const int depth = 2 * rank_low + 3;  // exponents -1 .. -depth are inspected

    // Cycles of the small check model in degree k: alpha in C_{k-2} (it
    // becomes the x^-1 coefficient) with d alpha = 0 and delta1 v^j alpha = 0,
    // plus any finitely supported a.
    const std::vector<size_t>& ag = low;
    std::vector<Vec> rows;
    for (size_t g = 0; g < n; ++g) {
        Vec row(ag.size());
        for (size_t j = 0; j < ag.size(); ++j) row[j] = f.d(g, ag[j]);
        rows.push_back(row);
    }
    for (int m = 0; m <= static_cast<int>(n) + depth; ++m) {
        Vec full = delta1_v_row(f, m);
        Vec row(ag.size());
        for (size_t j = 0; j < ag.size(); ++j) row[j] = full[ag[j]];
        rows.push_back(row);
    }
    Mat A(rows.size(), ag.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t j = 0; j < ag.size(); ++j) A(r, j) = rows[r][j];
    std::vector<std::pair<Vec, std::map<int, Coef>>> cycles;
    if (!ag.empty()) {
        Mat K = nullspace(A);
        for (size_t j = 0; j < K.cols(); ++j) {
            Vec alpha(n);
            for (size_t t = 0; t < ag.size(); ++t) alpha[ag[t]] = K(t, j);
            cycles.push_back({alpha, {}});
        }
    }
    // a_i x^i has degree 4m - 2i; it is admissible when -2i = k mod 4.
    for (int i = -1; i >= -depth; --i)
        if (mod4(-2 * i - k) == 0) cycles.push_back({Vec(n), {{i, Coef(1)}}});

    auto zero_tilde = [&] { return Vec(2 * n + 1); };
    const Mat dt = f.dtilde(), ch = f.chi();
    int checked = 0;
    for (const auto& [alpha, a] : cycles) {
        // Large check representative: zeta_i = (A_i, 0, a_i) for i = -1 .. -(depth + 1).
        std::map<int, Vec> zeta;
        for (int i = -1; i >= -(depth + 1); --i) {
            Vec z = zero_tilde();
            Vec va = apply_v(f, alpha, -i - 1);
            for (size_t g = 0; g < n; ++g) z[g] = va[g];
            auto it = a.find(i);
            if (it != a.end()) z[2 * n] = it->second;
            zeta[i] = z;
        }
        for (const auto& [ip, coef] : a) {
            Vec w = vec_scale(coef, f.delta2);
            for (int j = 0; ip - j - 1 >= -(depth + 1); ++j) {
                Vec& z = zeta[ip - j - 1];
                for (size_t g = 0; g < n; ++g) z[g] += w[g];
                w = f.v * w;
            }
        }
        // Cycle equations of the large check differential d~ - chi x.
        for (int i = -1; i >= -depth; --i) {
            Vec lhs = vec_sub(dt * zeta[i], ch * zeta[i - 1]);
            if (!is_zero_vec(lhs)) throw std::logic_error("torsion bound: representative is not a cycle at x^" +
                                                          std::to_string(i));
        }
        // Relation among the C-parts of zeta_{-1}, zeta_{-3}, .., zeta_{-2n-1}.
        Mat M(n, static_cast<size_t>(rank_low + 1));
        for (int t = 0; t <= rank_low; ++t) {
            const Vec& z = zeta[-2 * t - 1];
            for (size_t g = 0; g < n; ++g) {
                if (!z[g].is_zero() && mod4(f.gens[g].deg_z - (k - 2)) != 0)
                    throw std::logic_error("torsion bound: component outside degree k - 2");
                M(g, static_cast<size_t>(t)) = z[g];
            }
        }
        Mat rel = nullspace(M);
        if (rel.cols() == 0) throw std::logic_error("torsion bound: no relation of the expected length");
        // j(f(x^2) zeta) = -chi(sum b_t zeta_{-2t-1}) must vanish.
        Vec comb = zero_tilde();
        for (int t = 0; t <= rank_low; ++t) comb = vec_add(comb, vec_scale(rel(static_cast<size_t>(t), 0), zeta[-2 * t - 1]));
        if (!is_zero_vec(ch * comb)) throw std::logic_error("torsion bound: relation does not annihilate");
        ++checked;
    }
    return checked;
}

}  // namespace scx
