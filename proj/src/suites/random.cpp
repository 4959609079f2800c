#include "scx/suites/random.hpp"

#include "scx/scomplex/models.hpp"
#include "scx/scomplex/ops.hpp"

#include <functional>

namespace scx {

namespace {

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Coef small_constant(Rng& rng) {
    static const int num[] = {1, -1, 2, -2, 3, 1};
    static const int den[] = {1, 1, 1, 1, 1, 2};
    const int i = pick(rng, 0, 5);
    mpq_class c(num[i], den[i]);
    c.canonicalize();
    return Coef(c);
}

std::vector<size_t> with_degree(const SComplex& c, int deg) {
    std::vector<size_t> out;
    for (size_t i = 0; i < c.size(); ++i)
        if (c.gens[i].deg_z == deg) out.push_back(i);
    return out;
}

SMorphism move_morphism(const SComplex& from, const SComplex& to) {
    SMorphism m = SMorphism::zero(from, to, 0);
    m.lambda = Mat::identity(from.size());
    m.eta = Coef(1);
    return m;
}

// One graded change of splitting; returns false if nothing applies.
// `inverse` receives the move undoing it.
bool random_move(Rng& rng, SComplex& c, SMorphism& step, SMorphism& inverse) {
    const size_t n = c.size();
    if (n == 0) return false;
    const SComplex old = c;
    switch (pick(rng, 0, 3)) {
        case 0: {  // basis change g_j -> g_j + s g_i within one degree
            const size_t j = static_cast<size_t>(pick(rng, 0, static_cast<int>(n) - 1));
            auto same = with_degree(c, c.gens[j].deg_z);
            std::erase(same, j);
            if (same.empty()) return false;
            const size_t i = same[static_cast<size_t>(pick(rng, 0, static_cast<int>(same.size()) - 1))];
            const Coef s = random_local_element(rng);
            Mat P = Mat::identity(n), Pi = Mat::identity(n);
            P(i, j) = s;
            Pi(i, j) = -s;
            c.d = P * c.d * Pi;
            c.v = P * c.v * Pi;
            Vec d1(n);
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l) d1[k] += old.delta1[l] * Pi(l, k);
            c.delta1 = d1;
            c.delta2 = P * old.delta2;
            step = move_morphism(old, c);
            step.lambda = P;
            inverse = move_morphism(c, old);
            inverse.lambda = Pi;
            return true;
        }
        case 1: {  // v -> v + dh + hd with h of degree -1
            Mat h(n, n);
            bool any = false;
            for (size_t j = 0; j < n; ++j)
                for (size_t i : with_degree(c, c.gens[j].deg_z - 1))
                    if (pick(rng, 0, 1)) {
                        h(i, j) = random_local_element(rng);
                        any = true;
                    }
            if (!any) return false;
            c.v = c.v + c.d * h + h * c.d;
            step = move_morphism(old, c);
            step.mu = h;
            inverse = move_morphism(c, old);
            inverse.mu = -h;
            return true;
        }
        case 2: {  // delta1 -> delta1 + e d, v -> v - delta2 e, e supported in degree 0
            const auto z = with_degree(c, 0);
            if (z.empty()) return false;
            Vec e(n);
            for (size_t i : z) e[i] = random_local_element(rng);
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) c.delta1[j] += e[k] * old.d(k, j);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) c.v(i, j) -= old.delta2[i] * e[j];
            step = move_morphism(old, c);
            step.Delta1 = e;
            inverse = move_morphism(c, old);
            inverse.Delta1 = vec_scale(Coef(-1), e);
            return true;
        }
        default: {  // delta2 -> delta2 + d w, v -> v + w delta1, w supported in degree -1
            const auto z = with_degree(c, -1);
            if (z.empty()) return false;
            Vec w(n);
            for (size_t i : z) w[i] = random_local_element(rng);
            c.delta2 = vec_add(c.delta2, old.d * w);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) c.v(i, j) += w[i] * old.delta1[j];
            step = move_morphism(old, c);
            step.Delta2 = w;
            inverse = move_morphism(c, old);
            inverse.Delta2 = vec_scale(Coef(-1), w);
            return true;
        }
    }
}

}  // namespace

Coef random_local_element(Rng& rng) {
    Coef e = small_constant(rng) * Coef::T(pick(rng, -1, 1));
    const int k = pick(rng, 0, 5);
    if (k == 4) return e * Coef::lambda();
    if (k == 5) return e * Coef::tau();
    return e;
}

Coef random_local_unit(Rng& rng) {
    Coef e = small_constant(rng) * Coef::T(pick(rng, -1, 1));
    if (pick(rng, 0, 2) == 0) e = e * (Coef(1) + Coef::T());
    return e;
}

SComplex random_chain(Rng& rng, int h, Ring ring) {
    if (h < 0) return dual(random_chain(rng, -h, ring));
    SComplex c = two_bridge_model(h, ring);
    if (h == 0) return c;
    c.delta1[0] = random_local_element(rng) * Coef::lambda();
    for (int i = 1; i < h; ++i)
        c.v(static_cast<size_t>(i - 1), static_cast<size_t>(i)) = random_local_element(rng) * Coef::lambda();
    return c;
}

SComplex random_filtered_chain(Rng& rng, int h) {
    if (h < 0) return dual(random_filtered_chain(rng, -h));
    const SComplex z = two_bridge_model(h, Ring::QT);
    SComplex c = SComplex::with_generators(Ring::QT, GradingMode::ZxR, z.gens);
    c.d = z.d;
    c.v = z.v;
    c.delta1 = z.delta1;
    c.delta2 = z.delta2;
    mpq_class lvl = 0;
    for (auto& g : c.gens) {
        lvl += mpq_class(pick(rng, 1, 6), 12);
        lvl.canonicalize();
        g.deg_i = lvl;
    }
    return c;
}

RandomComplex random_complex(Rng& rng, Ring ring, size_t max_gens) {
    // Pieces with delta1 != 0 and pieces with delta2 != 0 cannot be summed
    // directly (delta2 delta1 would be uncompensated); mixed signs enter
    // through a tensor product instead.
    SComplex base = SComplex::trivial(ring);
    const int sign = pick(rng, 0, 1) ? 1 : -1;
    if (max_gens >= 4 && pick(rng, 0, 3) == 0) {
        base = tensor(random_chain(rng, 1, ring), random_chain(rng, pick(rng, 0, 1) ? 1 : -1, ring));
    } else {
        const int pieces = pick(rng, 1, 3);
        for (int p = 0; p < pieces; ++p) {
            const size_t room = max_gens - base.size();
            if (room == 0) break;
            SComplex piece;
            if (room >= 2 && pick(rng, 0, 2) == 0) {
                const int k = pick(rng, -3, 4);
                piece = SComplex::with_generators(ring, GradingMode::Z4, {{"x", k, 0}, {"y", k - 1, 0}});
                piece.d(1, 0) = random_local_unit(rng);
            } else {
                const int h = pick(rng, 1, static_cast<int>(std::min<size_t>(room, 3)));
                piece = random_chain(rng, sign * h, ring);
            }
            base = direct_sum(base, piece);
        }
    }
    for (size_t i = 0; i < base.size(); ++i) base.gens[i].name = "g" + std::to_string(i + 1);

    RandomComplex r{base, base, SMorphism::identity(base), SMorphism::identity(base)};
    const int moves = pick(rng, 2, 8);
    for (int m = 0; m < moves; ++m) {
        SMorphism step, inverse;
        if (!random_move(rng, r.complex, step, inverse)) continue;
        step.source = r.forward.target;
        r.forward = compose(step, r.forward);
        inverse.target = r.backward.source;
        r.backward = compose(r.backward, inverse);
    }
    return r;
}

}  // namespace scx
