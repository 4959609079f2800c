#include <doctest.h>

#include "scx/coeff/parse.hpp"
#include "scx/equivariant/equivariant.hpp"
#include "scx/scomplex/validate.hpp"
#include "scx/topology/cobordism.hpp"
#include "scx/topology/descriptor.hpp"
#include "scx/topology/reference.hpp"
#include "scx/topology/seifert.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>

using namespace scx;

namespace {

const SeifertMatrix trefoil{{{-1, 1}, {0, -1}}};

mpq_class rat(long a, long b) {
    mpq_class x(a, b);
    x.canonicalize();
    return x;
}

// Floating-point Tristram-Levine signature; empty when an eigenvalue is too
// close to zero to trust.
std::optional<int> tl_float(const SeifertMatrix& s, double omega) {
    const size_t n = s.size();
    const std::complex<double> z = std::polar(1.0, 4 * M_PI * omega);
    Eigen::MatrixXcd h(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            h(static_cast<long>(i), static_cast<long>(j)) =
                (1.0 - z) * static_cast<double>(s.a[i][j]) + (1.0 - std::conj(z)) * static_cast<double>(s.a[j][i]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    int sig = 0;
    for (long i = 0; i < static_cast<long>(n); ++i) {
        const double e = es.eigenvalues()(i);
        if (std::abs(e) < 1e-7) return std::nullopt;
        sig += e > 0 ? 1 : -1;
    }
    return sig;
}

// Random Seifert matrix P^T (L + M) P with L - L^T the standard symplectic
// form, M symmetric and P unimodular.
SeifertMatrix random_seifert(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> genus(1, 4), entry(-3, 3), coin(0, 1);
    const size_t n = 2 * static_cast<size_t>(genus(rng));
    IntMatrix a(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) a[i][j] = a[j][i] = entry(rng);
    for (size_t i = 0; i < n; i += 2) a[i][i + 1] += 1;
    // elementary congruences keep det(A - A^T)
    for (int step = 0; step < 6; ++step) {
        const size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        const long k = coin(rng) ? 1 : -1;
        for (size_t r = 0; r < n; ++r) a[r][i] += k * a[r][j];
        for (size_t c = 0; c < n; ++c) a[i][c] += k * a[j][c];
    }
    return {a};
}

mpq_class eval_cf(const std::vector<long>& c) {
    mpq_class x = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) x = c[i] - 1 / x;
    return x;
}

std::vector<std::vector<long>> sym(const SeifertMatrix& s) {
    auto m = s.a;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = 0; j < s.size(); ++j) m[i][j] = s.a[i][j] + s.a[j][i];
    return m;
}

LaurentPoly one_minus_t4_pow(int k) {
    LaurentPoly p(1);
    for (int i = 0; i < k; ++i) p = p * (LaurentPoly(1) - LaurentPoly::monomial(1, 4));
    return p;
}

}  // namespace

TEST_CASE("classical signature") {
    CHECK(signature_sigma(trefoil) == -2);
    CHECK(signature_sigma(SeifertMatrix::empty()) == 0);
    CHECK(signature_sigma(mirror_seifert(trefoil)) == 2);
    CHECK(signature_sigma(block_sum(trefoil, trefoil)) == -4);
    CHECK_THROWS_AS(signature_sigma(SeifertMatrix{{{1, 0}, {0, 1}}}), std::invalid_argument);
    for (long m = 1; m <= 5; ++m)
        for (long n = 0; n <= 5; ++n) {
            CHECK(signature_sigma(kmn_seifert(m, n)) == 0);
            auto [p, q] = kmn_two_bridge(m, n);
            CHECK(signature_sigma(two_bridge_seifert(p, q)) == 0);
        }
}

TEST_CASE("K_mn and D_lmn matrices") {
    const IntMatrix k10 = {{2, 0, 0, 0, 0, 0},  {-1, 2, 0, 0, 0, 0},  {0, -1, -1, 0, 0, 0},
                           {0, 0, -1, -1, 0, 0}, {0, 0, 0, -1, -1, 0}, {0, 0, 0, 0, -1, 0}};
    CHECK(kmn_seifert(1, 0).a == k10);
    const std::vector<std::vector<long>> d122 = {{-4, -1, 0, 0}, {-1, -4, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    CHECK(sym(dlmn_seifert(1, 2, 2)) == d122);
    CHECK(signature_sigma(dlmn_seifert(1, 2, 2)) == 0);
    CHECK(dlmn_two_bridge(1, 2, 2) == std::pair<long, long>{53, -14});
    for (long l = 1; l <= 3; ++l)
        for (long m = 2; m <= 4; ++m)
            for (long n = 2; n <= 4; ++n) {
                CHECK(signature_sigma(dlmn_seifert(l, m, n)) == 0);
                auto [p, q] = dlmn_two_bridge(l, m, n);
                CHECK(signature_sigma(two_bridge_seifert(p, q)) == 0);
            }
}

TEST_CASE("hermitian determinant at omega = 1/4") {
    for (long m = 1; m <= 6; ++m)
        for (long n = 1; n <= 6; ++n) CHECK(hermitian_det_quarter(kmn_seifert(m, n)) == -64 * (53 + 4 * (-17 + 53 * m) * n));
}

TEST_CASE("even continued fractions") {
    CHECK(even_continued_fraction(3, 1) == std::vector<long>{-2, -2});
    CHECK(even_continued_fraction(53, 34) == std::vector<long>{2, 2, -4, -4});
    CHECK(even_continued_fraction(1, 0).empty());
    CHECK_THROWS_AS(even_continued_fraction(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(even_continued_fraction(9, 3), std::invalid_argument);
    for (long p = 3; p <= 41; p += 2)
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const auto c = even_continued_fraction(p, q);
            for (long x : c) CHECK(x % 2 == 0);
            long qq = q % 2 == 0 ? q : q - p;
            CHECK(eval_cf(c) == rat(p, qq));
            require_seifert(two_bridge_seifert(p, q));
        }
}

TEST_CASE("Alexander polynomial and root gate") {
    CHECK(alexander_polynomial(trefoil) == QPoly(std::vector<mpq_class>{1, -1, 1}));
    CHECK(!alexander_root_gate(trefoil, mpq_class(1, 12)));
    CHECK(!alexander_root_gate(trefoil, mpq_class(5, 12)));
    CHECK(alexander_root_gate(trefoil, mpq_class(1, 4)));
    CHECK(alexander_root_gate(SeifertMatrix::empty(), mpq_class(1, 12)));
    CHECK_THROWS_AS(alexander_root_gate(trefoil, mpq_class(1, 2)), std::domain_error);
}

TEST_CASE("Tristram-Levine signature of the trefoil") {
    CHECK(tristram_levine(trefoil, mpq_class(1, 4)) == -2);
    CHECK(tristram_levine(trefoil, mpq_class(1, 24)) == 0);
    CHECK(tristram_levine(trefoil, mpq_class(1, 8)) == -2);
    CHECK_THROWS_AS(tristram_levine(trefoil, mpq_class(1, 12)), AlexanderRootError);
    for (int k = 1; k < 60; ++k) {
        const mpq_class w = rat(k, 120);
        if (w == mpq_class(1, 12) || w == mpq_class(5, 12)) continue;
        const int expect = (w > mpq_class(1, 12) && w < mpq_class(5, 12)) ? -2 : 0;
        CHECK(tristram_levine(trefoil, w) == expect);
    }
}

TEST_CASE("Tristram-Levine signature of K_mn vanishes for m >= 7") {
    for (long m : {7, 9})
        for (long n : {0, 1, 3})
            for (int k = 1; k <= 50; ++k) CHECK(tristram_levine(kmn_seifert(m, n), rat(k, 101)) == 0);
}

TEST_CASE("Tristram-Levine agrees with the signature and a float oracle") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        SeifertMatrix s = random_seifert(rng);
        require_seifert(s);
        CHECK(tristram_levine(s, mpq_class(1, 4)) == signature_sigma(s));
        const mpq_class w = rat(static_cast<long>(rng() % 97 + 1), 199);
        if (!alexander_root_gate(s, w)) continue;
        if (auto f = tl_float(s, w.get_d())) CHECK(tristram_levine(s, w) == *f);
    }
}

TEST_CASE("descriptor parsing") {
    for (std::string s : {"unknot", "twobridge:53/34", "trefoil:+2", "trefoil:-1", "mirror(twobridge:3/1)",
                          "sum(trefoil:+1,mirror(Kmn:1,0))", "builtin:10_28_star_local", "Kmn:2,3", "Dlmn:1,2,2",
                          "Cr:3/4", "omega-block:-2", "seifert:[[-1,1],[0,-1]]"})
        CHECK(parse_descriptor(s).str() == s);
    CHECK(parse_descriptor("builtin:10_28*").kind == KnotDescriptor::Kind::Figure1028);
    for (std::string s : {"", "twobridge:4/1", "trefoil:2", "mirror(unknot", "sum(unknot,)", "Kmn:1", "Cr:0",
                          "Cr:x", "bogus", "builtin:nope", "seifert:[[1,"})
        CHECK_THROWS_AS(parse_descriptor(s), ParseError);
    CHECK(signature_sigma(seifert_for(parse_descriptor("sum(trefoil:+2,mirror(twobridge:3/1))"))) == -2);
    CHECK_THROWS_AS(seifert_for(parse_descriptor("Cr:1/2")), UnsupportedDescriptor);
}

TEST_CASE("complex builders") {
    SComplex t = build_complex(parse_descriptor("twobridge:3/1"), Ring::Local, false);
    CHECK(froyshov(t) == 1);
    for (auto [p, q] : std::vector<std::pair<long, long>>{{3, 1}, {5, 3}, {53, 34}, {7, 5}}) {
        const int sigma = signature_sigma(two_bridge_seifert(p, q));
        SComplex c = build_complex(parse_descriptor("twobridge:" + std::to_string(p) + "/" + std::to_string(q)),
                                   Ring::Local, false);
        CHECK(froyshov(c) == -sigma / 2);
    }
    CHECK(froyshov(build_complex(parse_descriptor("trefoil:+3"), Ring::Local, false)) == 3);
    CHECK(froyshov(build_complex(parse_descriptor("mirror(trefoil:+2)"), Ring::Local, false)) == -2);
    CHECK(froyshov(build_complex(parse_descriptor("sum(trefoil:+1,trefoil:-1)"), Ring::Local, false)) == 0);

    SComplex l = build_complex(parse_descriptor("builtin:10_28_star_local"), Ring::QT, true);
    REQUIRE(l.size() == 2);
    CHECK(l.gens[0].deg_z == -2);
    CHECK(l.gens[0].deg_i == mpq_class(-20, 53));
    CHECK(l.gens[1].deg_z == -1);
    CHECK(l.gens[1].deg_i == mpq_class(8, 53));
    SComplex cr = build_complex(parse_descriptor("Cr:3/4"), Ring::QT, true);
    CHECK(cr.gens[0].deg_i == mpq_class(3, 4));
    CHECK(validate_complex(build_complex(parse_descriptor("builtin:10_28*"), Ring::QT, true)).empty());
    CHECK(!validate_complex(build_complex(parse_descriptor("builtin:10_28_star_figure_raw"), Ring::QT, true)).empty());
    CHECK_THROWS_AS(build_complex(parse_descriptor("twobridge:3/1"), Ring::QT, true), UnsupportedDescriptor);
    CHECK_THROWS_AS(build_complex(parse_descriptor("seifert:[[-1,1],[0,-1]]"), Ring::QT, false),
                    UnsupportedDescriptor);
}

TEST_CASE("reducible invariants") {
    for (int k = 1; k < 20; ++k) {
        const mpq_class w = rat(k, 40);
        CobordismData d = crossing_change_data(0, 0);
        ReducibleInvariants a0 = reducible_invariants(d, {0}, w), a1 = reducible_invariants(d, {1}, w);
        CHECK(a0.kappa == 4 * w * w);
        CHECK(a0.nu == 0);
        CHECK(a1.kappa == 1 - 4 * w + 4 * w * w);
        CHECK(a1.nu == -4);
        CHECK(a0.index == -1);
        CHECK(a1.index == -1);
    }
    ReducibleInvariants h = reducible_invariants(two_handle_trace_data(), {0}, mpq_class(1, 4));
    CHECK(h.kappa == mpq_class(1, 16));
    CHECK(h.index == -1);
    ReducibleInvariants p = reducible_invariants(CobordismData{}, {}, mpq_class(1, 4));
    CHECK(p.kappa == 0);
    CHECK(p.index == -1);
    CobordismData bad = two_handle_trace_data();
    bad.sigma_W = 0;
    CHECK_THROWS_AS(reducible_invariants(bad, {0}, mpq_class(1, 4)), DataInconsistent);
    CHECK_THROWS_AS(reducible_invariants(bad, {0, 0}, mpq_class(1, 4)), DataInconsistent);
}

TEST_CASE("minimal reducibles") {
    for (int k = 1; k < 20; ++k) {
        const mpq_class w = rat(k, 40);
        MinimalReducibles m = minimal_reducibles(crossing_change_data(0, 0), w);
        CHECK(m.minimizers.size() == 2);
        CHECK(m.eta == one_minus_t4_pow(1));
        CHECK(m.strong);
        CHECK(m.height == 0);
        if (w <= mpq_class(1, 4)) CHECK(m.kappa_min == 4 * w * w);
        CHECK(minimal_reducibles(crossing_change_data(2, 0), w).height == 1);
        CHECK_THROWS_AS(minimal_reducibles(crossing_change_data(0, 2), w), NotNegativeDefinite);
    }
    MinimalReducibles t = minimal_reducibles(two_handle_trace_data(), mpq_class(1, 4));
    CHECK(t.kappa_min == mpq_class(1, 16));
    CHECK(t.eta == LaurentPoly(1));
    CHECK(t.index == -1);
    CHECK(t.minimizers == std::vector<std::vector<long>>{{0}});
    MinimalReducibles e = minimal_reducibles(CobordismData{}, mpq_class(1, 4));
    CHECK(e.height == 0);
    CHECK(e.eta == LaurentPoly(1));
}

TEST_CASE("immersed cobordisms") {
    const Coef tau = Coef::tau();
    for (int sp = 1; sp <= 3; ++sp) {
        MinimalReducibles m = minimal_reducibles(immersed_data(sp, 1, 0, 2 * sp, 0), mpq_class(1, 5));
        CHECK(m.height == sp);
        CHECK(m.eta == one_minus_t4_pow(sp));
        CHECK(m.kappa_min == 4 * sp * mpq_class(1, 25));
        // eta / tau^{s+} is a signed monomial
        const Coef ratio = Coef(m.eta) / tau.pow(sp);
        CHECK(ratio.is_laurent());
        CHECK(ratio.to_laurent().terms().size() == 1);
    }
    CHECK(minimal_reducibles(immersed_data(2, 0, 1, 4, 0), mpq_class(1, 4)).height == 1);
}

TEST_CASE("index parity and omega independence of eta") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> small(-3, 3), nb(0, 3);
    for (int i = 0; i < 60; ++i) {
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
            CHECK(m.index % 2 != 0);
            if (eta) CHECK(m.eta == *eta);
            eta = m.eta;
        }
    }
}

TEST_CASE("reference data is tagged and consistent") {
    const auto& rows = two_bridge_reference();
    CHECK(rows.size() == 20);
    for (const auto& r : rows) {
        CHECK(signature_sigma(two_bridge_seifert(r.p, r.q)) == 0);
        CHECK(r.gamma_above_eighth == (r.gamma0 > mpq_class(1, 8)));
    }
    CHECK(trefoil_gamma_reference().size() == 2);
    CHECK(!two_bridge_reference_caveat().empty());
}
