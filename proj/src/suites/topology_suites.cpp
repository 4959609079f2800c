#include "detail.hpp"

#include "scx/equivariant/equivariant.hpp"
#include "scx/suites/random.hpp"
#include "scx/topology/cobordism.hpp"
#include "scx/topology/descriptor.hpp"
#include "scx/topology/seifert.hpp"

namespace scx::suites {

namespace {

// P^T (L + M) P with L - L^T the standard symplectic form, M symmetric and
// P a product of elementary unimodular matrices.
SeifertMatrix random_seifert(Rng& rng) {
    std::uniform_int_distribution<int> genus(1, 4), entry(-3, 3), coin(0, 1);
    const size_t n = 2 * static_cast<size_t>(genus(rng));
    IntMatrix a(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) a[i][j] = a[j][i] = entry(rng);
    for (size_t i = 0; i < n; i += 2) a[i][i + 1] += 1;
    for (int step = 0; step < 6; ++step) {
        const size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        const long k = coin(rng) ? 1 : -1;
        for (size_t r = 0; r < n; ++r) a[r][i] += k * a[r][j];
        for (size_t c = 0; c < n; ++c) a[i][c] += k * a[j][c];
    }
    return {a};
}

LaurentPoly one_minus_t4_pow(int k) {
    LaurentPoly p(1);
    for (int i = 0; i < k; ++i) p = p * (LaurentPoly(1) - LaurentPoly::monomial(1, 4));
    return p;
}

}  // namespace

void signature(const SuiteOptions& opt, int cases, Checker& c) {
    const SeifertMatrix trefoil{{{-1, 1}, {0, -1}}};
    for (long m = 1; m <= 10; ++m)
        for (long n = 0; n <= 10; ++n)
            expect_eq(c, signature_sigma(kmn_seifert(m, n)), 0,
                      "sigma(K_" + std::to_string(m) + "," + std::to_string(n) + ")");
    for (long m = 1; m <= 6; ++m)
        for (long n = 1; n <= 6; ++n)
            expect_eq(c, hermitian_det_quarter(kmn_seifert(m, n)), mpq_class(-64 * (53 + 4 * (-17 + 53 * m) * n)),
                      "Hermitian determinant of A_" + std::to_string(m) + "," + std::to_string(n));

    for (int j = 1; j <= 10; ++j) {
        const mpq_class low = rat(j, 130), high = rat(11 + 4 * j, 132);
        expect_eq(c, tristram_levine(trefoil, low), 0, "sigma_w(trefoil) at w = " + low.get_str());
        expect_eq(c, tristram_levine(trefoil, high), -2, "sigma_w(trefoil) at w = " + high.get_str());
    }
    for (const mpq_class& w : {rat(1, 12), rat(5, 12)}) {
        c.check(!alexander_root_gate(trefoil, w), "root gate admits w = " + w.get_str());
        bool thrown = false;
        try {
            tristram_levine(trefoil, w);
        } catch (const AlexanderRootError&) {
            thrown = true;
        }
        c.check(thrown, "sigma_w(trefoil) evaluated at the Alexander root w = " + w.get_str());
    }

    for (auto [p, q] : std::vector<std::pair<long, long>>{{3, 1}, {5, 3}, {53, 34}, {7, 5}}) {
        const std::string d = "twobridge:" + std::to_string(p) + "/" + std::to_string(q);
        const int sigma = signature_sigma(two_bridge_seifert(p, q));
        expect_eq(c, froyshov(build_complex(parse_descriptor(d), Ring::Local, false)), -sigma / 2, "h(" + d + ")");
    }
    expect_eq(c, signature_sigma(two_bridge_seifert(3, 1)), -2, "sigma(K(3,1))");
    expect_eq(c, signature_sigma(two_bridge_seifert(53, 34)), 0, "sigma(K(53,34))");

    parallel_cases(cases, opt.threads, c, [&](int i, Checker& ck) {
        std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                          static_cast<std::uint32_t>(i), 8u};
        Rng rng(seq);
        const SeifertMatrix s = random_seifert(rng);
        expect_eq(ck, tristram_levine(s, rat(1, 4)), signature_sigma(s),
                  "case " + std::to_string(i) + ": sigma_{1/4} = sigma");
    });
}

void cobordism(const SuiteOptions& opt, int cases, Checker& c) {
    for (int k = 1; k < 20; ++k) {
        const mpq_class w = rat(k, 40);
        const std::string tag = "w = " + w.get_str() + ": ";
        const CobordismData d = crossing_change_data(0, 0);
        const ReducibleInvariants a0 = reducible_invariants(d, {0}, w), a1 = reducible_invariants(d, {1}, w);
        expect_eq(c, a0.kappa, mpq_class(4 * w * w), tag + "kappa(A_0)");
        expect_eq(c, a0.nu, mpq_class(0), tag + "nu(A_0)");
        expect_eq(c, a1.kappa, mpq_class(1 - 4 * w + 4 * w * w), tag + "kappa(A_e)");
        expect_eq(c, a1.nu, mpq_class(-4), tag + "nu(A_e)");
        const MinimalReducibles m = minimal_reducibles(d, w);
        expect_eq(c, m.eta, one_minus_t4_pow(1), tag + "eta of the crossing change");
        expect_eq(c, m.minimizers.size(), size_t{2}, tag + "minimizer count");
    }

    const MinimalReducibles t = minimal_reducibles(two_handle_trace_data(), rat(1, 4));
    expect_eq(c, t.kappa_min, rat(1, 16), "2-handle kappa_min");
    expect_eq(c, t.eta, LaurentPoly(1), "2-handle eta");
    expect_eq(c, t.index, -1L, "2-handle index");

    const Coef tau = Coef::tau();
    for (int sp = 1; sp <= 3; ++sp) {
        const MinimalReducibles m = minimal_reducibles(immersed_data(sp, 1, 0, 2 * sp, 0), rat(1, 5));
        const Coef ratio = Coef(m.eta) / tau.pow(sp);
        c.check(ratio.is_laurent() && ratio.to_laurent().terms().size() == 1,
                "immersed s+ = " + std::to_string(sp) + ": eta = " + m.eta.str() + " is not a unit times tau^s+");
        expect_eq(c, m.height, sp, "immersed s+ = " + std::to_string(sp) + ": height");
    }

    parallel_cases(cases, opt.threads, c, [&](int i, Checker& ck) {
        std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                          static_cast<std::uint32_t>(i), 9u};
        Rng rng(seq);
        std::uniform_int_distribution<int> small(-3, 3), nb(0, 3);
        CobordismData d;
        d.n = nb(rng);
        for (int j = 0; j < d.n; ++j) {
            d.S.push_back(small(rng));
            d.c.push_back(small(rng));
        }
        d.chi_W = d.n;
        d.sigma_W = -d.n;
        d.sigma_start = 2 * small(rng);
        std::optional<LaurentPoly> eta;
        for (int k = 1; k < 12; ++k) {
            const mpq_class w = rat(k, 24);
            MinimalReducibles m;
            try {
                m = minimal_reducibles(d, w);
            } catch (const NotNegativeDefinite&) {
                continue;
            }
            const std::string tag = "case " + std::to_string(i) + ", w = " + w.get_str();
            ck.check(m.index % 2 != 0, tag + ": even minimal index");
            if (eta) ck.check(m.eta == *eta, tag + ": eta depends on w");
            eta = m.eta;
        }
    });
}

}  // namespace scx::suites
