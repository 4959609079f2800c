#include "scx/concordance/concordance.hpp"

#include "scx/coeff/local.hpp"
#include "scx/framed/framed.hpp"

namespace scx {

std::vector<std::pair<int, int>> MonomialIdealXTau::generators() const {
    std::vector<std::pair<int, int>> g;
    for (int i = 0; i <= l; ++i) g.emplace_back(l - i, i);
    return g;
}

std::string MonomialIdealXTau::str() const { return full_ring() ? "R[x]" : "I^" + std::to_string(l); }

bool ideal_member_monomial(const MonomialIdealXTau& ideal, int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("monomial exponents must be non-negative");
    return a >= ideal.l || a + b >= ideal.l;
}

MonomialIdealXTau z_hat_structured(const FamilyDescriptor& d) {
    switch (d.family) {
        case KnotFamily::Trivial:
            return {0};
        case KnotFamily::TrefoilSum:
            if (d.count < 0) throw std::invalid_argument("trefoil count must be non-negative");
            return {d.right ? d.count : 0};
        case KnotFamily::TwoBridge:
            if (d.sigma % 2 != 0) throw std::invalid_argument("knot signature must be even");
            return {d.sigma < 0 ? -d.sigma / 2 : 0};
        case KnotFamily::Other:
            break;
    }
    throw std::domain_error("general z-hat out of scope");
}

std::string type_name(GongType t) {
    switch (t) {
        case GongType::O: return "O";
        case GongType::I: return "I";
        case GongType::II: return "II";
    }
    return "?";
}

InvariantReport compute_invariants(const SComplex& input) {
    const SComplex c = input.ring == Ring::Local ? input : base_change(input, Ring::Local);
    if (!rank1_check(c)) throw Rank1Failure("H(C~+) over the fraction field is not rank one in even degree");

    InvariantReport r;
    r.h = froyshov(c);
    auto w = special_cycle_search(c, r.h);
    if (!w) throw std::logic_error("no special cycle at the Froyshov level");
    r.witness = *w;
    r.n0 = lambda_valuation(w->f);

    auto index = [](const DvrHomology& H, const Vec& z) {
        auto m = H.divisibility(z);
        if (!m) throw std::logic_error("xi class is torsion under the rank one assumption");
        return *m;
    };
    const DvrHomology Hs = homology_dvr(build_framed(c));
    const FramedChain plus = q_sharp_special(c, *w);
    r.s_sharp_plus = r.n0 - index(Hs, plus.flat());
    r.s_sharp_minus = r.n0 - index(Hs, sharp_x_action(plus).flat());
    r.s_sharp = r.s_sharp_plus + r.s_sharp_minus;

    const DvrHomology Ht = homology_dvr(build_reduced(c, 1));
    r.s_tilde = r.n0 - index(Ht, q_tilde_special(c, *w));

    r.epsilon = 2 * r.s_tilde - r.s_sharp;
    switch (r.s_sharp_plus - r.s_sharp_minus) {
        case 0: r.type = GongType::O; break;
        case 1: r.type = GongType::I; break;
        case 2: r.type = GongType::II; break;
        default: throw std::logic_error("s#+ - s#- outside [0, 2]");
    }
    if (input.ring != Ring::Local) r.notes.push_back("base-changed to the local ring at T = 1");
    return r;
}

int s_tilde(const SComplex& c) { return compute_invariants(c).s_tilde; }

std::pair<int, int> s_sharp_pm(const SComplex& c) {
    InvariantReport r = compute_invariants(c);
    return {r.s_sharp_plus, r.s_sharp_minus};
}

std::pair<int, GongType> epsilon_and_type(const SComplex& c) {
    InvariantReport r = compute_invariants(c);
    return {r.epsilon, r.type};
}

nlohmann::json report_to_json(const InvariantReport& r) {
    nlohmann::json alpha = nlohmann::json::array();
    for (const Coef& a : r.witness.chain.alpha) alpha.push_back(a.str());
    nlohmann::json poly = nlohmann::json::object();
    for (const auto& [e, a] : r.witness.chain.poly.terms()) poly[std::to_string(e)] = a.str();
    return {{"h", r.h},
            {"n0", r.n0},
            {"s_tilde", r.s_tilde},
            {"s_sharp_plus", r.s_sharp_plus},
            {"s_sharp_minus", r.s_sharp_minus},
            {"s_sharp", r.s_sharp},
            {"epsilon_tilde", r.epsilon},
            {"type", type_name(r.type)},
            {"witness", {{"k", r.witness.k}, {"f", r.witness.f.str()}, {"alpha", alpha}, {"x_terms", poly}}},
            {"notes", r.notes}};
}

}  // namespace scx
