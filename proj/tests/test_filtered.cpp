#include <doctest.h>

#include "scx/filtered/filtered.hpp"
#include "scx/scomplex/models.hpp"
#include "scx/scomplex/morphism.hpp"
#include "scx/scomplex/ops.hpp"
#include "scx/scomplex/validate.hpp"

#include <random>

using namespace scx;

namespace {

const ExtQ inf = ExtQ::pos_inf();
const ExtQ ninf = ExtQ::neg_inf();

SComplex trivial_i() { return SComplex::trivial(Ring::QT, GradingMode::ZxR); }

// Two-bridge model with strictly increasing positive levels on a_1..a_h.
SComplex filtered_two_bridge(int h, std::mt19937_64& rng) {
    SComplex z = two_bridge_model(h, Ring::QT);
    SComplex c = SComplex::with_generators(Ring::QT, GradingMode::ZxR, z.gens);
    c.d = z.d;
    c.v = z.v;
    c.delta1 = z.delta1;
    c.delta2 = z.delta2;
    std::uniform_int_distribution<int> step(1, 6);
    mpq_class lvl = 0;
    for (auto& g : c.gens) {
        lvl += mpq_class(step(rng), 12);
        g.deg_i = lvl;
    }
    return c;
}

std::vector<mpq_class> s_grid() {
    std::vector<mpq_class> s;
    for (int i = 1; i <= 24; ++i) s.emplace_back(-i, 12);
    s.emplace_back(-1, 53);
    s.emplace_back(-8, 53);
    s.emplace_back(-20, 53);
    s.emplace_back(-21, 53);
    for (auto& x : s) x.canonicalize();
    return s;
}

std::vector<Bound> bounds() {
    std::vector<Bound> b = {std::nullopt};
    for (const auto& s : s_grid()) b.push_back(s);
    return b;
}

ExtQ ext(const Bound& s) { return s ? ExtQ(*s) : ninf; }

}  // namespace

TEST_CASE("extended rationals") {
    CHECK(ninf < ExtQ(mpq_class(-5)));
    CHECK(ExtQ(mpq_class(5)) < inf);
    CHECK(-inf == ninf);
    CHECK((ExtQ(mpq_class(1, 2)) + ExtQ(mpq_class(1, 3))) == ExtQ(mpq_class(5, 6)));
    CHECK((inf + ExtQ(mpq_class(1))) == inf);
    CHECK_THROWS_AS(inf + ninf, std::domain_error);
    CHECK(ext_max(ninf, ExtQ(mpq_class(0))) == ExtQ(mpq_class(0)));
    CHECK(inf.str() == "inf");
    CHECK(ExtQ(mpq_class(8, 53)).str() == "8/53");
}

TEST_CASE("N table of the trivial complex") {
    for (const Bound& s : bounds()) {
        for (int k = 1; k <= 3; ++k) CHECK(n_value(trivial_i(), k, s) == inf);
        for (int k = -2; k <= 0; ++k) CHECK(n_value(trivial_i(), k, s) == ExtQ(mpq_class(0)));
    }
    CHECK(gamma(trivial_i(), 0) == ExtQ(mpq_class(0)));
    CHECK(gamma(trivial_i(), -3) == ExtQ(mpq_class(0)));
    CHECK(n_transpose(trivial_i(), 0, mpq_class(0)) == ninf);
    CHECK(n_transpose(trivial_i(), 0, std::nullopt) == ninf);
    CHECK(r_invariant(trivial_i(), mpq_class(0)) == inf);
}

TEST_CASE("N table of C{r}") {
    for (mpq_class r : {mpq_class(1, 4), mpq_class(3, 7), mpq_class(2)}) {
        SComplex c = c_r_model(r);
        for (const Bound& s : bounds()) {
            CHECK(n_value(c, 1, s) == ExtQ(r));
            CHECK(n_value(c, 2, s) == inf);
            CHECK(n_value(c, 0, s) == ExtQ(mpq_class(0)));
        }
        CHECK(gamma(c, 1) == ExtQ(r));
        CHECK(n_transpose(c, 1, r) == ninf);
        CHECK(n_transpose(c, 1, mpq_class(r - mpq_class(1, 100))) == ExtQ(mpq_class(0)));
    }
}

TEST_CASE("dual of C{r} at k = 0") {
    // N(0, s) = 0 once the defect delta2(1) at level -r is admissible
    const mpq_class r(3, 5);
    SComplex c = dual(c_r_model(r));
    REQUIRE(validate_complex(c).empty());
    CHECK(n_value(c, 0, std::nullopt) == inf);
    CHECK(n_value(c, 0, mpq_class(-r)) == ExtQ(mpq_class(0)));
    CHECK(n_value(c, 0, mpq_class(-1, 10)) == ExtQ(mpq_class(0)));
    CHECK(n_value(c, 0, mpq_class(-1)) == inf);
    CHECK(n_value(c, -1, std::nullopt) == ExtQ(mpq_class(0)));
    CHECK(r_invariant(c, mpq_class(0)) == ExtQ(r));
}

TEST_CASE("10_28 local model") {
    SComplex c = local_10_28_model();
    REQUIRE(validate_complex(c).empty());
    CHECK(gamma(c, 0) == ExtQ(mpq_class(8, 53)));
    CHECK(gamma(c, 1) == inf);
    CHECK(gamma(c, -1) == ExtQ(mpq_class(0)));
    CHECK(n_value(c, 0, mpq_class(-20, 53)) == ExtQ(mpq_class(0)));
    CHECK(n_value(c, 0, mpq_class(-21, 53)) == ExtQ(mpq_class(8, 53)));
    // N(0, s) <= 0 exactly for s >= -20/53, so N^T(0, 0) = -20/53.
    CHECK(n_transpose(c, 0, mpq_class(0)) == ExtQ(mpq_class(-20, 53)));
    CHECK(r_invariant(c, mpq_class(0)) == ExtQ(mpq_class(20, 53)));
    CHECK(r_invariant(c, mpq_class(-1, 53)) == ExtQ(mpq_class(20, 53)));
    CHECK(r_invariant(c, mpq_class(-8, 53)) == inf);
    CHECK(r_invariant(dual(c), mpq_class(0)) == inf);
}

TEST_CASE("10_28 figure complex") {
    SComplex f = figure_10_28_model();
    CHECK(f.size() == 26);
    CHECK(validate_complex(f).empty());
    CHECK(!validate_complex(figure_10_28_model(false)).empty());
    CHECK(gamma(f, 0) == ExtQ(mpq_class(8, 53)));
    CHECK(gamma(f, 1) == inf);
    // Computed values, shared with the local model.
    CHECK(r_invariant(f, mpq_class(0)) == ExtQ(mpq_class(20, 53)));
    CHECK(r_invariant(dual(f), mpq_class(0)) == inf);
}

TEST_CASE("morphisms between the 10_28 models") {
    SComplex f = figure_10_28_model(), l = local_10_28_model();
    auto idx = [&](int z) { return static_cast<size_t>(z - 1); };

    // local model -> figure: alpha -> z19, beta -> z22; v(z22) has no z18 part
    SMorphism up = SMorphism::zero(l, f, 0);
    up.eta = Coef(1);
    up.lambda(idx(19), 0) = Coef(1);
    up.lambda(idx(22), 1) = Coef(1);
    CHECK(validate_morphism(up).empty());
    CHECK(morphism_level(up) == 0);

    // figure -> local model with Delta1 = 0: breaks at z3 since delta1(z3) != 0
    SMorphism down = SMorphism::zero(f, l, 0);
    down.eta = Coef(1);
    down.lambda(0, idx(19)) = Coef(1);
    down.lambda(1, idx(22)) = Coef(1);
    down.mu(1, idx(16)) = Coef(-1);
    CHECK(!validate_morphism(down).empty());
    down.Delta1[idx(16)] = Coef(-1);
    CHECK(validate_morphism(down).empty());
    CHECK(morphism_level(down) == 0);

    for (const Bound& s : bounds()) {
        for (int k = -1; k <= 1; ++k) {
            CHECK(n_value(f, k, s) <= n_value(l, k, s));
            CHECK(n_value(l, k, s) <= n_value(f, k, s));
        }
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(n_value(c_r_model(mpq_class(1)), 1, mpq_class(0)), std::domain_error);
    CHECK_THROWS_AS(r_invariant(c_r_model(mpq_class(1)), mpq_class(1)), std::domain_error);
    CHECK_THROWS_AS(n_value(SComplex::trivial(), 0, std::nullopt), std::invalid_argument);
    SComplex c = c_r_model(mpq_class(1));
    c.omega = mpq_class(1, 3);
    CHECK_THROWS_AS(gamma(c, 1), std::domain_error);
}

TEST_CASE("monotonicity, field collapse and transpose recovery") {
    std::mt19937_64 rng(11);
    std::vector<SComplex> cs = {trivial_i(), c_r_model(mpq_class(2, 3)), local_10_28_model(),
                                dual(local_10_28_model()), dual(c_r_model(mpq_class(1, 3)))};
    for (int h : {1, 2, 3}) {
        SComplex c = filtered_two_bridge(h, rng);
        REQUIRE(validate_complex(c).empty());
        cs.push_back(c);
        cs.push_back(dual(c));
    }
    const auto bs = bounds();
    for (const auto& c : cs) {
        for (int k = -2; k <= 3; ++k) {
            std::vector<ExtQ> row;
            for (const Bound& s : bs) {
                ExtQ n = n_value(c, k, s);
                CHECK(n == n_value(c, k, s, true));
                CHECK(n_value(c, k + 1, s) >= n);
                if (n.finite()) {
                    const auto ls = level_set(c, k);
                    CHECK(std::find(ls.begin(), ls.end(), n.value()) != ls.end());
                }
                row.push_back(n);
            }
            // bs[0] is -inf; the rest run from -1/12 downwards
            for (size_t i = 1; i < bs.size(); ++i) CHECK(n_value(c, k, bs[i]) <= row[0]);
            for (size_t i = 1; i + 1 < bs.size(); ++i)
                if (*bs[i + 1] < *bs[i]) CHECK(row[i] <= row[i + 1]);

            // N(k, s) = min{r : N^T(k, r) <= s} off the defect levels
            const auto dl = defect_levels(c, k);
            for (size_t i = 1; i < bs.size(); ++i) {
                if (std::find(dl.begin(), dl.end(), *bs[i]) != dl.end()) continue;
                ExtQ rec = inf;
                for (const mpq_class& r : level_set(c, k))
                    if (n_transpose(c, k, r) <= ExtQ(*bs[i])) {
                        rec = ExtQ(r);
                        break;
                    }
                CHECK(rec == row[i]);
            }
        }
    }
}

TEST_CASE("connected sum bound") {
    std::mt19937_64 rng(5);
    std::vector<SComplex> cs = {trivial_i(), c_r_model(mpq_class(1, 3)), c_r_model(mpq_class(5, 4)),
                                local_10_28_model(), dual(c_r_model(mpq_class(1, 2)))};
    for (int h : {1, 2}) {
        SComplex c = filtered_two_bridge(h, rng);
        cs.push_back(c);
        cs.push_back(dual(c));
    }
    std::uniform_int_distribution<int> den(1, 8);
    for (size_t a = 0; a < cs.size(); ++a) {
        for (size_t b = a; b < cs.size(); ++b) {
            SComplex t = tensor(cs[a], cs[b]);
            REQUIRE(validate_complex(t).empty());
            for (int k = -1; k <= 1; ++k) {
                for (int k2 = -1; k2 <= 1; ++k2) {
                    Bound s = mpq_class(-1, den(rng)), s2 = mpq_class(-1, den(rng));
                    if (rng() % 3 == 0) s.reset();
                    ExtQ n = n_value(cs[a], k, s), n2 = n_value(cs[b], k2, s2);
                    if (!n.finite() || !n2.finite()) continue;
                    ExtQ so = ext_max(n + ext(s2), n2 + ext(s));
                    if (!(so < ExtQ(mpq_class(0)))) continue;
                    Bound st;
                    if (so.finite()) st = so.value();
                    CHECK(n_value(t, k + k2, st) <= n + n2);
                }
            }
        }
    }
}

TEST_CASE("morphism inequality") {
    // C{r1} -> C{r2} with lambda(z) = z' has level r2 - r1 for r2 > r1
    const mpq_class r1(1, 3), r2(3, 4);
    SComplex a = c_r_model(r1), b = c_r_model(r2);
    SMorphism m = SMorphism::zero(a, b, 0);
    m.eta = Coef(1);
    m.lambda(0, 0) = Coef(1);
    REQUIRE(validate_morphism(m).empty());
    const mpq_class kappa = morphism_level(m);
    CHECK(kappa == r2 - r1);
    for (int k = 0; k <= 2; ++k)
        for (const mpq_class& s : s_grid())
            CHECK(n_value(b, k, s) <= n_value(a, k, mpq_class(s - kappa)) + ExtQ(kappa));

    // trivial -> C{r}: height 0, level 0
    SMorphism e = SMorphism::zero(trivial_i(), b, 0);
    e.eta = Coef(1);
    REQUIRE(validate_morphism(e).empty());
    CHECK(morphism_level(e) == 0);
    for (int k = -1; k <= 2; ++k)
        for (const Bound& s : bounds()) CHECK(n_value(b, k, s) <= n_value(trivial_i(), k, s));
}
