#include <doctest.h>

#include "scx/coeff/local.hpp"
#include "scx/concordance/concordance.hpp"
#include "scx/framed/framed.hpp"
#include "scx/scomplex/models.hpp"
#include "scx/scomplex/morphism.hpp"
#include "scx/scomplex/ops.hpp"

#include <algorithm>

using namespace scx;

namespace {

int sign(int x) { return (x > 0) - (x < 0); }

// Brute force over the generators x^{l-i} tau^i.
bool member_oracle(int l, int a, int b) {
    for (int i = 0; i <= l; ++i)
        if (a >= l - i && b >= i) return true;
    return false;
}

std::vector<SComplex> corpus() {
    std::vector<SComplex> cs = {SComplex::trivial(Ring::Local), right_trefoil(), left_trefoil()};
    for (int h : {-2, 2, 3}) cs.push_back(two_bridge_model(h));
    return cs;
}

}  // namespace

TEST_CASE("two-bridge s-invariants") {
    for (int h0 = 1; h0 <= 5; ++h0) {
        InvariantReport r = compute_invariants(two_bridge_model(h0));
        CHECK(r.h == h0);
        CHECK(r.n0 == h0);
        CHECK(r.s_tilde == h0);
        CHECK(r.s_sharp_plus == h0);
        CHECK(r.s_sharp_minus == h0 - 1);
        CHECK(r.epsilon == 1);
        CHECK(r.type == GongType::I);
        const int sigma = -2 * h0;
        CHECK(r.s_sharp == -sigma + sign(sigma));

        InvariantReport d = compute_invariants(dual(two_bridge_model(h0)));
        CHECK(d.h == -h0);
        CHECK(d.s_tilde == -h0);
        CHECK(d.s_sharp_plus == -h0 + 1);
        CHECK(d.s_sharp_minus == -h0);
        CHECK(d.epsilon == -1);
        CHECK(d.type == GongType::I);
        CHECK(d.s_sharp == -(2 * h0) + sign(2 * h0));
    }
}

TEST_CASE("trivial complex") {
    InvariantReport r = compute_invariants(SComplex::trivial());
    CHECK(r.h == 0);
    CHECK(r.s_tilde == 0);
    CHECK(s_sharp_pm(SComplex::trivial()) == std::pair<int, int>{0, 0});
    CHECK(epsilon_and_type(SComplex::trivial()) == std::pair<int, GongType>{0, GongType::O});
    CHECK(!r.notes.empty());  // Q(T) input is base-changed
}

TEST_CASE("rank one failure is refused") {
    SComplex c = SComplex::with_generators(Ring::Local, GradingMode::Z4, {{"g1", 0, 0}, {"g2", 2, 0}});
    c.v(1, 0) = Coef(2) * Coef::lambda();
    c.v(0, 1) = Coef(2) * Coef::lambda();
    CHECK_THROWS_AS(compute_invariants(c), Rank1Failure);
}

TEST_CASE("report json") {
    nlohmann::json j = report_to_json(compute_invariants(two_bridge_model(2)));
    CHECK(j["s_tilde"] == 2);
    CHECK(j["type"] == "I");
    CHECK(j["witness"]["k"] == 2);
    CHECK(j["witness"]["alpha"].size() == 2);
}

TEST_CASE("z-hat of structured families") {
    CHECK(z_hat_structured({KnotFamily::TrefoilSum, 2, true}).l == 2);
    CHECK(z_hat_structured({KnotFamily::TrefoilSum, 3, false}).full_ring());
    CHECK(z_hat_structured({KnotFamily::TwoBridge, 0, true, -4}).l == 2);
    CHECK(z_hat_structured({KnotFamily::TwoBridge, 0, true, 6}).full_ring());
    CHECK(z_hat_structured({KnotFamily::Trivial}).full_ring());
    CHECK_THROWS_AS(z_hat_structured({KnotFamily::Other}), std::domain_error);
    CHECK(z_hat_structured({KnotFamily::TrefoilSum, 2, true}).str() == "I^2");
    CHECK(MonomialIdealXTau{3}.generators().size() == 4);
}

TEST_CASE("monomial membership") {
    CHECK(ideal_member_monomial({2}, 1, 1));
    CHECK(!ideal_member_monomial({2}, 1, 0));
    CHECK(ideal_member_monomial({0}, 0, 0));
    for (int l = 0; l <= 6; ++l)
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b) CHECK(ideal_member_monomial({l}, a, b) == member_oracle(l, a, b));
}

TEST_CASE("z-hat agrees with the special cycle ideal on trefoil sums") {
    // J_l of the l-fold right trefoil sum is (L^l); the left-handed sum has J_{-l} = R.
    SComplex r = right_trefoil(), l = left_trefoil();
    SComplex rr = r, ll = l;
    for (int n = 1; n <= 3; ++n) {
        CHECK(j_ideal_valuation(rr, n) == z_hat_structured({KnotFamily::TrefoilSum, n, true}).l);
        CHECK(j_ideal_valuation(ll, -n) == z_hat_structured({KnotFamily::TrefoilSum, n, false}).l);
        rr = tensor(rr, r);
        ll = tensor(ll, l);
    }
}

TEST_CASE("tensor inequalities on the structured corpus") {
    auto cs = corpus();
    std::vector<InvariantReport> rep;
    for (const auto& c : cs) rep.push_back(compute_invariants(c));
    for (size_t i = 0; i < cs.size(); ++i) {
        const auto& a = rep[i];
        CHECK(a.s_sharp_plus - a.s_sharp_minus >= 0);
        CHECK(a.s_sharp_plus - a.s_sharp_minus <= 2);
        CHECK(std::max(a.s_sharp_plus - 1, a.s_sharp_minus) <= a.s_tilde);
        CHECK(a.s_tilde <= std::min(a.s_sharp_plus, a.s_sharp_minus + 1));
        for (size_t j = i; j < cs.size(); ++j) {
            const auto& b = rep[j];
            InvariantReport t = compute_invariants(tensor(cs[i], cs[j]));
            CHECK(std::abs(t.s_sharp - a.s_sharp - b.s_sharp) <= 1);
            CHECK(t.s_tilde == a.s_tilde + b.s_tilde);
            CHECK(t.h == a.h + b.h);
            CHECK(std::max(a.s_sharp_plus + b.s_sharp_minus, a.s_sharp_minus + b.s_sharp_plus) <= t.s_sharp_plus);
            CHECK(t.s_sharp_plus <= std::min(a.s_sharp_plus + b.s_sharp_plus, a.s_sharp_minus + b.s_sharp_minus + 2));
            CHECK(std::max(a.s_sharp_minus + b.s_sharp_minus, a.s_sharp_plus + b.s_sharp_plus - 2) <= t.s_sharp_minus);
            CHECK(t.s_sharp_minus <= std::min(a.s_sharp_plus + b.s_sharp_minus, a.s_sharp_minus + b.s_sharp_plus));
            if (a.type == GongType::O) {
                CHECK(t.s_sharp_plus == a.s_sharp_plus + b.s_sharp_plus);
                CHECK(t.s_sharp_minus == a.s_sharp_minus + b.s_sharp_minus);
            }
        }
    }
}

TEST_CASE("r (x) l is locally trivial") {
    InvariantReport t = compute_invariants(tensor(right_trefoil(), left_trefoil()));
    CHECK(t.h == 0);
    CHECK(t.s_tilde == 0);
    CHECK(t.s_sharp_plus == 0);
    CHECK(t.s_sharp_minus == 0);
    CHECK(t.type == GongType::O);
}

TEST_CASE("morphism bounds") {
    // height i morphism with c_i = unit * L^k: s(target) <= s(source) + k
    auto check = [](const SMorphism& m) {
        REQUIRE(validate_morphism(m).empty());
        InvariantReport a = compute_invariants(m.source), b = compute_invariants(m.target);
        const int i = b.h - a.h;
        REQUIRE(i >= 0);
        MorphismClass k = classify_morphism(m);
        REQUIRE(k.height);
        REQUIRE(*k.height == i);
        const int val = lambda_valuation(c_coefficients(m, i)[static_cast<size_t>(i)]);
        CHECK(b.s_tilde <= a.s_tilde + val);
        CHECK(b.s_sharp_plus <= a.s_sharp_plus + val);
        CHECK(b.s_sharp_minus <= a.s_sharp_minus + val);
    };
    SMorphism down = SMorphism::zero(left_trefoil(), SComplex::trivial(Ring::Local), 2);
    down.Delta1[0] = Coef(1);
    SMorphism up = SMorphism::zero(SComplex::trivial(Ring::Local), right_trefoil(), 2);
    up.Delta2[0] = Coef(1);
    check(down);
    check(up);
    check(compose(up, down));
    check(SMorphism::identity(two_bridge_model(3)));
    SComplex c = two_bridge_model(-2);
    SMorphism iso = SMorphism::identity(c);
    iso.target = dual(dual(c));
    iso.eta = Coef(-1);
    check(iso);
}
