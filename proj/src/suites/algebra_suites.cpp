#include "detail.hpp"

#include "scx/coeff/local.hpp"
#include "scx/concordance/concordance.hpp"
#include "scx/equivariant/equivariant.hpp"
#include "scx/framed/framed.hpp"
#include "scx/scomplex/models.hpp"
#include "scx/scomplex/ops.hpp"
#include "scx/scomplex/validate.hpp"
#include "scx/suites/random.hpp"

#include <algorithm>

namespace scx::suites {

namespace {

int sign(int x) { return (x > 0) - (x < 0); }

Rng case_rng(std::uint64_t seed, int i, std::uint64_t salt) {
    std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(salt)};
    return Rng(s);
}

void expect_valid(Checker& c, const SComplex& x, const std::string& what) {
    const auto v = validate_complex(x);
    c.check(v.empty(), v.empty() ? what : what + ": " + v.front());
}

// The two-sided bounds relating s-tilde and s-sharp.
void sandwich(Checker& c, const InvariantReport& r, const std::string& what) {
    c.check(r.s_sharp_plus >= r.s_sharp_minus && r.s_sharp_plus - r.s_sharp_minus <= 2,
            what + ": s#+ - s#- = " + std::to_string(r.s_sharp_plus - r.s_sharp_minus) + " outside [0, 2]");
    c.check(std::max(r.s_sharp_plus - 1, r.s_sharp_minus) <= r.s_tilde &&
                r.s_tilde <= std::min(r.s_sharp_plus, r.s_sharp_minus + 1),
            what + ": s~ = " + std::to_string(r.s_tilde) + " outside the sandwich of s#+ = " +
                std::to_string(r.s_sharp_plus) + ", s#- = " + std::to_string(r.s_sharp_minus));
}

void tensor_bounds(Checker& c, const InvariantReport& a, const InvariantReport& b, const InvariantReport& t,
                   const std::string& what) {
    c.check(std::abs(t.s_sharp - a.s_sharp - b.s_sharp) <= 1,
            what + ": s#(C (x) D) = " + std::to_string(t.s_sharp) + " vs " + std::to_string(a.s_sharp) + " + " +
                std::to_string(b.s_sharp));
    c.check(std::max(a.s_sharp_plus + b.s_sharp_minus, a.s_sharp_minus + b.s_sharp_plus) <= t.s_sharp_plus &&
                t.s_sharp_plus <= std::min(a.s_sharp_plus + b.s_sharp_plus, a.s_sharp_minus + b.s_sharp_minus + 2),
            what + ": s#+ of the tensor product out of bounds");
    c.check(std::max(a.s_sharp_minus + b.s_sharp_minus, a.s_sharp_plus + b.s_sharp_plus - 2) <= t.s_sharp_minus &&
                t.s_sharp_minus <= std::min(a.s_sharp_plus + b.s_sharp_minus, a.s_sharp_minus + b.s_sharp_plus),
            what + ": s#- of the tensor product out of bounds");
}

// s(target) <= s(source) + v for a height-i morphism with c_i = unit * L^v.
void morphism_monotone(Checker& c, const SMorphism& m, const InvariantReport& a, const InvariantReport& b,
                       const std::string& what) {
    const auto bad = validate_morphism(m);
    c.check(bad.empty(), bad.empty() ? what : what + ": " + bad.front());
    if (!bad.empty()) return;
    const MorphismClass k = classify_morphism(m);
    if (!k.height) {
        c.fail(what + ": morphism has no height");
        return;
    }
    const int i = *k.height;
    const int v = lambda_valuation(c_coefficients(m, i)[static_cast<size_t>(i)]);
    c.check(b.h >= a.h + i, what + ": froyshov decreased along the morphism");
    c.check(b.s_tilde <= a.s_tilde + v && b.s_sharp_plus <= a.s_sharp_plus + v &&
                b.s_sharp_minus <= a.s_sharp_minus + v,
            what + ": s-invariants not monotone (valuation " + std::to_string(v) + ")");
}

}  // namespace

void trefoil(const SuiteOptions&, int cases, Checker& c) {
    const SComplex r = right_trefoil(), l = left_trefoil();
    SComplex rr = r, ll = l;
    for (int n = 1; n <= cases; ++n) {
        const std::string tag = "#" + std::to_string(n);
        expect_eq(c, froyshov(rr), n, "h(" + tag + " T)");
        expect_eq(c, j_ideal_valuation(rr, n), std::optional<int>(n), "J_" + std::to_string(n) + "(" + tag + " T)");
        expect_eq(c, froyshov(ll), -n, "h(" + tag + " T*)");
        expect_eq(c, j_ideal_valuation(ll, -n), std::optional<int>(0),
                  "J_" + std::to_string(-n) + "(" + tag + " T*)");
        rr = tensor(rr, r);
        ll = tensor(ll, l);
    }
}

void two_bridge(const SuiteOptions&, int cases, Checker& c) {
    for (int h0 = 1; h0 <= cases; ++h0) {
        const std::string tag = "h0 = " + std::to_string(h0);
        const InvariantReport r = compute_invariants(two_bridge_model(h0));
        expect_eq(c, r.h, h0, tag + ": h");
        expect_eq(c, r.s_tilde, h0, tag + ": s~");
        expect_eq(c, std::pair{r.s_sharp_plus, r.s_sharp_minus}, std::pair{h0, h0 - 1}, tag + ": s#+-");
        const int sigma = -2 * h0;
        expect_eq(c, r.s_sharp, -sigma + sign(sigma), tag + ": s# = -sigma + sign(sigma)");

        const InvariantReport d = compute_invariants(dual(two_bridge_model(h0)));
        expect_eq(c, d.h, -h0, tag + ": h of the dual");
        expect_eq(c, d.s_tilde, -h0, tag + ": s~ of the dual");
        expect_eq(c, std::pair{d.s_sharp_plus, d.s_sharp_minus}, std::pair{-h0 + 1, -h0}, tag + ": s#+- of the dual");
        expect_eq(c, d.s_sharp, -(-sigma) + sign(-sigma), tag + ": s# of the dual");
    }
}

void pairing(const SuiteOptions& opt, int cases, Checker& c) {
    auto run = [](Checker& ck, const SComplex& m, const std::string& what, bool model) {
        const SComplex md = dual(m);
        const int h = froyshov(m);
        auto w = special_cycle_search(m, h);
        auto wd = special_cycle_search(md, -h);
        if (!w || !wd) {
            ck.fail(what + ": no special cycle at h");
            return;
        }
        const FramedChain plus = q_sharp_special(m, *w), minus = sharp_x_action(plus);
        const FramedChain plus_d = q_sharp_special(md, *wd), minus_d = sharp_x_action(plus_d);
        const Coef want = Coef(-2) * w->f * wd->f;
        const PairingResult a = pairing(m, plus_d, minus), b = pairing(m, minus_d, plus);
        ck.check(!a.degree_mismatch && !b.degree_mismatch, what + ": degree mismatch");
        expect_eq(ck, a.value, want, what + ": <xi#+(f'), xi#-(f)>");
        expect_eq(ck, b.value, want, what + ": <xi#-(f'), xi#+(f)>");
        // f = L^h on the model family and f' a unit, or the reverse for h < 0
        if (model)
            expect_eq(ck, std::pair{lambda_valuation(w->f), lambda_valuation(wd->f)},
                      std::pair{std::max(h, 0), std::max(-h, 0)}, what + ": valuations of f and f'");
    };
    for (int h = -5; h <= 5; ++h) run(c, two_bridge_model(h), "model h = " + std::to_string(h), true);
    parallel_cases(cases, opt.threads, c, [&](int i, Checker& ck) {
        Rng rng = case_rng(opt.seed, i, 3);
        const int h = std::uniform_int_distribution<int>(-3, 3)(rng);
        run(ck, random_chain(rng, h, Ring::Local), "random chain " + std::to_string(i) + " (h = " + std::to_string(h) + ")", false);
    });
}

void properties(const SuiteOptions& opt, int cases, Checker& c) {
    parallel_cases(cases, opt.threads, c, [&](int i, Checker& ck) {
        Rng rng = case_rng(opt.seed, i, 4);
        const Ring ring = i % 2 ? Ring::QT : Ring::Local;
        const RandomComplex rc = random_complex(rng, ring, 5);
        const std::string tag = "case " + std::to_string(i);
        const SComplex& C = rc.complex;

        SComplex D;
        switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
            case 0: D = right_trefoil(ring); break;
            case 1: D = left_trefoil(ring); break;
            case 2: D = random_chain(rng, std::uniform_int_distribution<int>(-2, 2)(rng), ring); break;
            case 3: D = random_complex(rng, ring, 2).complex; break;
            default: D = SComplex::trivial(ring); break;
        }
        const SComplex Cd = dual(C), T = tensor(C, D);
        expect_valid(ck, C, tag + ": complex");
        expect_valid(ck, Cd, tag + ": dual");
        expect_valid(ck, T, tag + ": tensor");

        const int h = froyshov(C), hd = froyshov(D);
        expect_eq(ck, froyshov(Cd), -h, tag + ": h(dual) = -h");
        expect_eq(ck, froyshov(T), h + hd, tag + ": h additive");

        const InvariantReport a = compute_invariants(C), ad = compute_invariants(Cd), b = compute_invariants(D),
                              t = compute_invariants(T), base = compute_invariants(rc.base);
        expect_eq(ck, a.h, h, tag + ": report h");
        sandwich(ck, a, tag);
        sandwich(ck, ad, tag + " dual");
        sandwich(ck, t, tag + " tensor");
        tensor_bounds(ck, a, b, t, tag);

        morphism_monotone(ck, rc.forward, base, a, tag + ": forward morphism");
        morphism_monotone(ck, rc.backward, a, base, tag + ": backward morphism");

        if (C.size() <= 4) {
            const SComplex f = ring == Ring::QT ? C : base_change(C, Ring::QT);
            for (int k = -2; k <= 3; ++k) {
                try {
                    check_torsion_bound(f, k);
                    ck.check(true, tag);
                } catch (const std::logic_error& e) {
                    ck.fail(tag + ": torsion bound at k = " + std::to_string(k) + ": " + e.what());
                }
            }
        }
    });
}

void zhat(const SuiteOptions&, int cases, Checker& c) {
    const SComplex r = right_trefoil(), l = left_trefoil();
    SComplex rr = r, ll = l;
    for (int n = 1; n <= std::min(cases, 3); ++n) {
        const auto zr = z_hat_structured({KnotFamily::TrefoilSum, n, true});
        const auto zl = z_hat_structured({KnotFamily::TrefoilSum, n, false});
        expect_eq(c, zr.l, n, "z^(#" + std::to_string(n) + " T) = I^" + std::to_string(n));
        c.check(zl.full_ring(), "z^(#" + std::to_string(n) + " T*) is the full ring");
        expect_eq(c, std::optional<int>(zr.l), j_ideal_valuation(rr, n), "z^ tag matches J on #" + std::to_string(n) + " T");
        expect_eq(c, std::optional<int>(zl.l), j_ideal_valuation(ll, -n), "z^ tag matches J on #" + std::to_string(n) + " T*");
        rr = tensor(rr, r);
        ll = tensor(ll, l);
    }
    for (int h = 1; h <= cases; ++h) {
        const auto z = z_hat_structured({KnotFamily::TwoBridge, 0, true, -2 * h});
        expect_eq(c, z.l, h, "z^ of a two-bridge knot with sigma = " + std::to_string(-2 * h));
        expect_eq(c, std::optional<int>(z.l), j_ideal_valuation(two_bridge_model(h), h), "z^ tag matches J at h = " + std::to_string(h));
        c.check(z_hat_structured({KnotFamily::TwoBridge, 0, true, 2 * h}).full_ring(),
                "z^ of a two-bridge knot with sigma = " + std::to_string(2 * h));
    }
    c.check(z_hat_structured({KnotFamily::Trivial}).full_ring(), "z^ of the unknot");
    for (int l = 0; l <= 6; ++l)
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b) {
                bool oracle = false;
                for (int i = 0; i <= l; ++i) oracle = oracle || (a >= l - i && b >= i);
                expect_eq(c, ideal_member_monomial({l}, a, b), oracle,
                          "x^" + std::to_string(a) + " tau^" + std::to_string(b) + " in I^" + std::to_string(l));
            }
}

}  // namespace scx::suites
