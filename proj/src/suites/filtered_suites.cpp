#include "detail.hpp"

#include "scx/filtered/filtered.hpp"
#include "scx/scomplex/models.hpp"
#include "scx/scomplex/morphism.hpp"
#include "scx/scomplex/ops.hpp"
#include "scx/scomplex/validate.hpp"
#include "scx/suites/random.hpp"
#include "scx/topology/reference.hpp"

#include <algorithm>

namespace scx::suites {

namespace {

SComplex trivial_i() { return SComplex::trivial(Ring::QT, GradingMode::ZxR); }

std::vector<Bound> bound_grid() {
    std::vector<Bound> b = {std::nullopt};
    for (int i = 1; i <= 12; ++i) b.emplace_back(rat(-i, 6));
    for (int i : {1, 8, 20, 21}) b.emplace_back(rat(-i, 53));
    return b;
}

std::string at(int k, const Bound& s) { return "N(" + std::to_string(k) + ", " + (s ? s->get_str() : "-inf") + ")"; }

SComplex random_filtered(Rng& rng) {
    std::uniform_int_distribution<int> kind(0, 5), num(1, 12);
    switch (kind(rng)) {
        case 0: return trivial_i();
        case 1: return c_r_model(rat(num(rng), 6));
        case 2: return dual(c_r_model(rat(num(rng), 6)));
        case 3: return rng() % 2 ? local_10_28_model() : dual(local_10_28_model());
        default: return random_filtered_chain(rng, std::uniform_int_distribution<int>(-2, 2)(rng));
    }
}

ExtQ ext(const Bound& s) { return s ? ExtQ(*s) : ExtQ::neg_inf(); }

void monotone(Checker& c, const SComplex& x, const std::vector<Bound>& bs, const std::string& tag) {
    for (int k = -2; k <= 2; ++k) {
        std::vector<ExtQ> row;
        const auto ls = level_set(x, k);
        for (const Bound& s : bs) {
            const ExtQ n = n_value(x, k, s);
            c.check(n <= n_value(x, k + 1, s), tag + ": " + at(k, s) + " > " + at(k + 1, s));
            c.check(!n.finite() || std::find(ls.begin(), ls.end(), n.value()) != ls.end(),
                    tag + ": " + at(k, s) + " = " + n.str() + " is not a level");
            row.push_back(n);
        }
        // relaxing s can only lower N
        for (size_t i = 0; i < bs.size(); ++i)
            for (size_t j = 0; j < bs.size(); ++j)
                if (ext(bs[i]) <= ext(bs[j]))
                    c.check(row[j] <= row[i], tag + ": " + at(k, bs[j]) + " > " + at(k, bs[i]));
    }
}

}  // namespace

void filtered(const SuiteOptions& opt, int cases, Checker& c) {
    const auto bs = bound_grid();
    const ExtQ inf = ExtQ::pos_inf(), zero(mpq_class(0));
    for (const Bound& s : bs) {
        for (int k = 1; k <= 3; ++k) expect_eq(c, n_value(trivial_i(), k, s), inf, "trivial " + at(k, s));
        for (int k = -3; k <= 0; ++k) expect_eq(c, n_value(trivial_i(), k, s), zero, "trivial " + at(k, s));
    }
    for (const mpq_class& r : {rat(1, 4), rat(3, 7), rat(2, 1)}) {
        const SComplex x = c_r_model(r);
        const std::string tag = "C{" + r.get_str() + "} ";
        for (const Bound& s : bs) {
            expect_eq(c, n_value(x, 1, s), ExtQ(r), tag + at(1, s));
            expect_eq(c, n_value(x, 2, s), inf, tag + at(2, s));
            expect_eq(c, n_value(x, 0, s), zero, tag + at(0, s));
        }
        expect_eq(c, gamma(x, 1), ExtQ(r), tag + "Gamma(1)");
    }
    expect_eq(c, gamma(local_10_28_model(), 0), ExtQ(rat(8, 53)), "Gamma(0) of the local 10*_28 model");

    parallel_cases(cases, opt.threads, c, [&](int i, Checker& ck) {
        std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                          static_cast<std::uint32_t>(i), 6u};
        Rng rng(seq);
        const std::string tag = "case " + std::to_string(i);
        const SComplex a = random_filtered(rng), b = random_filtered(rng);
        monotone(ck, a, bs, tag);
        for (const Bound& s : bs)
            for (int k = -1; k <= 1; ++k)
                ck.check(n_value(a, k, s) == n_value(a, k, s, true), tag + ": N and its lower variant differ at " + at(k, s));

        const SComplex t = tensor(a, b);
        const auto v = validate_complex(t);
        ck.check(v.empty(), v.empty() ? tag : tag + ": tensor invalid: " + v.front());
        std::uniform_int_distribution<int> den(1, 8), kk(-1, 1);
        for (int draw = 0; draw < 6; ++draw) {
            const int k = kk(rng), k2 = kk(rng);
            Bound s = rat(-1, den(rng)), s2 = rat(-1, den(rng));
            if (rng() % 3 == 0) s.reset();
            const ExtQ n = n_value(a, k, s), n2 = n_value(b, k2, s2);
            if (!n.finite() || !n2.finite()) continue;
            const ExtQ so = ext_max(n + ext(s2), n2 + ext(s));
            if (!(so < zero)) continue;
            Bound st;
            if (so.finite()) st = so.value();
            const ExtQ nt = n_value(t, k + k2, st);
            ck.check(nt <= n + n2, tag + ": connected-sum bound " + at(k + k2, st) + " = " + nt.str() + " > " +
                                       n.str() + " + " + n2.str());
        }
    });
}

void figure(const SuiteOptions&, int, Checker& c) {
    const SComplex f = figure_10_28_model();
    const auto v = validate_complex(f);
    c.check(v.empty(), v.empty() ? "figure complex" : "figure complex invalid: " + v.front());
    expect_eq(c, gamma(f, 0), ExtQ(rat(8, 53)), "Gamma(0) of the figure complex");

    // Reported only.
    const ExtQ r_self = r_invariant(f, mpq_class(0)), r_dual = r_invariant(dual(f), mpq_class(0));
    mpq_class reference = 0;
    for (const auto& row : two_bridge_reference())
        if (row.p == 53 && row.q == 34) reference = row.r_mirror;
    c.note("r_0 of the dual figure complex = " + r_dual.str() + "; reference table r' = " + reference.get_str() +
           (r_dual == ExtQ(reference) ? " (agrees)" : " (differs)"));
    c.note("r_0 of the figure complex itself = " + r_self.str() + "; local model r_0 = " +
           r_invariant(local_10_28_model(), mpq_class(0)).str());
    c.note(std::string("figure complex without the v arrow is ") +
           (validate_complex(figure_10_28_model(false)).empty() ? "valid" : "invalid"));

    // The printed map to the local model needs a Delta1 term at z16 to be a chain map.
    const SComplex l = local_10_28_model();
    SMorphism down = SMorphism::zero(f, l, 0);
    down.eta = Coef(1);
    down.lambda(0, 18) = Coef(1);
    down.lambda(1, 21) = Coef(1);
    down.mu(1, 15) = Coef(-1);
    const bool plain = validate_morphism(down).empty();
    down.Delta1[15] = Coef(-1);
    const bool corrected = validate_morphism(down).empty();
    c.note(std::string("map figure -> local model with Delta1 = 0 is ") + (plain ? "a chain map" : "not a chain map") +
           "; with Delta1(z16) = -1 it is " + (corrected ? "a chain map" : "not a chain map"));
}

}  // namespace scx::suites
