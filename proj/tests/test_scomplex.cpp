#include <doctest.h>

#include "scx/coeff/parse.hpp"
#include "scx/scomplex/io.hpp"
#include "scx/scomplex/models.hpp"
#include "scx/scomplex/morphism.hpp"
#include "scx/scomplex/ops.hpp"
#include "scx/scomplex/validate.hpp"

#include <algorithm>

using namespace scx;

namespace {

bool mentions(const std::vector<std::string>& report, const std::string& needle) {
    return std::any_of(report.begin(), report.end(),
                       [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

bool same_maps(const SComplex& a, const SComplex& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (mod4(a.gens[i].deg_z - b.gens[i].deg_z) != 0 || a.gens[i].deg_i != b.gens[i].deg_i) return false;
    return a.d == b.d && a.v == b.v && a.delta1 == b.delta1 && a.delta2 == b.delta2;
}

// d~^2 = 0 and chi d~ + d~ chi = 0 on the unsplit matrices, checked directly.
bool unsplit_ok(const SComplex& c) {
    Mat dt = c.dtilde(), ch = c.chi();
    return (dt * dt).is_zero() && (ch * dt + dt * ch).is_zero() && (ch * ch).is_zero();
}

}  // namespace

TEST_CASE("trefoil and two-bridge models validate") {
    CHECK(validate_complex(right_trefoil()).empty());
    CHECK(validate_complex(left_trefoil()).empty());
    for (int h = -3; h <= 3; ++h) CHECK(validate_complex(two_bridge_model(h)).empty());
    CHECK(validate_complex(SComplex::trivial()).empty());
    CHECK(validate_complex(local_10_28_model()).empty());
    CHECK(validate_complex(c_r_model(mpq_class(1, 3))).empty());
}

TEST_CASE("d(a) = a is rejected on grading and d^2") {
    SComplex c = right_trefoil();
    c.d(0, 0) = Coef(1);
    auto report = validate_complex(c);
    CHECK(mentions(report, "d*d"));
    CHECK(mentions(report, "grading"));
}

TEST_CASE("axiom violations are named") {
    SComplex c = two_bridge_model(2);
    c.delta1[0] = Coef(0);
    c.delta1[1] = Coef(1);  // delta1 out of degree 3
    CHECK(mentions(validate_complex(c), "grading"));

    // delta2 delta1 without compensating d v - v d.
    SComplex e = SComplex::with_generators(Ring::QT, GradingMode::Z4, {{"a", 1, 0}, {"b", -1, 0}});
    e.delta1[0] = Coef(1);
    e.delta2[1] = Coef(1);
    CHECK(mentions(validate_complex(e), "v*d - d*v + delta2*delta1"));
}

TEST_CASE("ZxR entries must strictly lower the level") {
    SComplex c = c_r_model(mpq_class(0));
    CHECK(!validate_complex(c).empty());
    CHECK(validate_complex(c_r_model(mpq_class(1, 2))).empty());
}

TEST_CASE("tensor generator count and axioms") {
    SComplex a = right_trefoil(Ring::QT), b = two_bridge_model(2, Ring::QT);
    SComplex t = tensor(a, b);
    CHECK(t.size() == 2 * 1 * 2 + 1 + 2);
    CHECK(validate_complex(t).empty());
    CHECK(unsplit_ok(t));
    SComplex tt = tensor(t, left_trefoil(Ring::QT));
    CHECK(tt.size() == 2 * 7 * 1 + 7 + 1);
    CHECK(validate_complex(tt).empty());
}

TEST_CASE("tensor with the trivial complex") {
    for (int h = -2; h <= 2; ++h) {
        SComplex c = two_bridge_model(h, Ring::QT);
        CHECK(same_maps(tensor(SComplex::trivial(), c), c));
        CHECK(same_maps(tensor(c, SComplex::trivial()), c));
    }
}

TEST_CASE("tensor rejects mismatched rings") {
    CHECK_THROWS_AS(tensor(right_trefoil(Ring::QT), right_trefoil(Ring::Local)), RingMismatch);
}

TEST_CASE("dual of the right trefoil is the left trefoil") {
    SComplex d = dual(right_trefoil());
    CHECK(validate_complex(d).empty());
    CHECK(same_maps(d, left_trefoil()));
    CHECK(same_maps(dual(SComplex::trivial()), SComplex::trivial()));
}

TEST_CASE("double dual is isomorphic via eta = -1") {
    std::vector<SComplex> cs = {two_bridge_model(3), tensor(right_trefoil(), two_bridge_model(-2)),
                                local_10_28_model()};
    for (const SComplex& c : cs) {
        SComplex dd = dual(dual(c));
        CHECK(validate_complex(dual(c)).empty());
        CHECK(dd.d == c.d);
        CHECK(dd.v == c.v);
        CHECK(dd.delta1 == vec_scale(Coef(-1), c.delta1));
        CHECK(dd.delta2 == vec_scale(Coef(-1), c.delta2));
        SMorphism iso = SMorphism::identity(c);
        iso.target = dd;
        iso.eta = Coef(-1);
        CHECK(validate_morphism(iso).empty());
        CHECK(classify_morphism(iso).local);
    }
}

TEST_CASE("ZxR levels negate under duality and add under tensor") {
    SComplex c = c_r_model(mpq_class(2, 5));
    SComplex d = dual(c);
    CHECK(d.gens[0].deg_i == mpq_class(-2, 5));
    CHECK(d.gens[0].deg_z == -2);
    SComplex t = tensor(c, c);
    CHECK(validate_complex(t).empty());
    CHECK(t.gens[0].deg_i == mpq_class(4, 5));
}

TEST_CASE("identity morphism classification") {
    SMorphism id = SMorphism::identity(two_bridge_model(2));
    CHECK(validate_morphism(id).empty());
    auto c = c_coefficients(id, 3);
    CHECK(c[0] == Coef(1));
    CHECK(c[1].is_zero());
    CHECK(c[2].is_zero());
    MorphismClass k = classify_morphism(id);
    REQUIRE(k.height);
    CHECK(*k.height == 0);
    CHECK(k.strong);
    CHECK(k.local);

    SMorphism idr = SMorphism::identity(c_r_model(mpq_class(1, 2)));
    REQUIRE(classify_morphism(idr).level);
    CHECK(*classify_morphism(idr).level == 0);
}

TEST_CASE("crossing-change morphism from the left trefoil to the unknot") {
    for (Ring ring : {Ring::QT, Ring::ZT, Ring::Local}) {
        SMorphism m = SMorphism::zero(left_trefoil(ring), SComplex::trivial(ring), 2);
        m.Delta1[0] = Coef(1);
        CHECK(validate_morphism(m).empty());
        auto c = c_coefficients(m, 2);
        CHECK(c[0].is_zero());
        CHECK(c[1] == Coef::tau());
        MorphismClass k = classify_morphism(m);
        REQUIRE(k.height);
        CHECK(*k.height == 1);
        CHECK(k.strong == (ring == Ring::QT));
        CHECK(!k.local);
    }
}

TEST_CASE("morphism with eta = tau over Z[T]") {
    SMorphism m = SMorphism::identity(SComplex::trivial(Ring::ZT));
    m.eta = Coef::tau();
    MorphismClass k = classify_morphism(m);
    REQUIRE(k.height);
    CHECK(*k.height == 0);
    CHECK(!k.strong);
}

TEST_CASE("c_j with only mu") {
    // mu: b -> a between the left and right trefoil, of degree 4.
    SMorphism m = SMorphism::zero(left_trefoil(Ring::QT), right_trefoil(Ring::QT), 4);
    m.mu(0, 0) = Coef(1);
    CHECK(validate_morphism(m).empty());
    auto cs = c_coefficients(m, 3);
    CHECK(cs[0].is_zero());
    CHECK(cs[1].is_zero());
    CHECK(cs[2] == Coef::tau() * Coef::tau());
    CHECK(cs[3].is_zero());
    MorphismClass k = classify_morphism(m);
    REQUIRE(k.height);
    CHECK(*k.height == 2);
    CHECK(k.strong);
}

TEST_CASE("composition of heights") {
    SMorphism down = SMorphism::zero(left_trefoil(), SComplex::trivial(Ring::Local), 2);
    down.Delta1[0] = Coef(1);
    SMorphism up = SMorphism::zero(SComplex::trivial(Ring::Local), right_trefoil(), 2);
    up.Delta2[0] = Coef(1);
    CHECK(validate_morphism(up).empty());
    SMorphism both = compose(up, down);
    CHECK(validate_morphism(both).empty());
    MorphismClass k = classify_morphism(both);
    REQUIRE(k.height);
    CHECK(*k.height >= 2);
    CHECK(c_coefficients(both, 2)[2] == Coef::tau() * Coef::tau());
}

TEST_CASE("invalid morphism is reported") {
    SMorphism bad = SMorphism::zero(right_trefoil(Ring::QT), right_trefoil(Ring::QT), 0);
    bad.lambda(0, 0) = Coef(1);  // eta = 0 breaks delta1' lambda = eta delta1
    CHECK(!validate_morphism(bad).empty());
    CHECK_THROWS(classify_morphism(SMorphism::zero(right_trefoil(), right_trefoil(), 1)));
}

TEST_CASE("json round trip") {
    SComplex c = local_10_28_model();
    SComplex r = complex_from_json(complex_to_json(c));
    CHECK(same_maps(r, c));
    CHECK(r.gens[1].deg_i == mpq_class(8, 53));
    SComplex t = two_bridge_model(3);
    CHECK(same_maps(complex_from_json(complex_to_json(t)), t));
}

TEST_CASE("json parsing with names and U powers") {
    const char* text = R"js({"ring": "Q(T)", "grading": "ZxR",
        "generators": [{"name": "a", "degZ": -2, "degI": "-20/53"}, {"name": "b", "degZ": -1, "degI": "8/53"}],
        "d": [["a", "b", "T^2-T^-2"]], "delta2": [["a", "T^2-T^-2"]]})js";
    SComplex c = complex_from_json(nlohmann::json::parse(text));
    CHECK(validate_complex(c).empty());
    CHECK(same_maps(c, local_10_28_model()));

    const char* bad = R"js({"ring": "Q(T)", "grading": "ZxR",
        "generators": [{"name": "z", "degZ": 1, "degI": "1/2"}], "delta1": [["z", "U^1"]]})js";
    CHECK_THROWS_AS(complex_from_json(nlohmann::json::parse(bad)), ParseError);
}
