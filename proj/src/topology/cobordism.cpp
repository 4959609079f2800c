#include "scx/topology/cobordism.hpp"

#include <algorithm>

namespace scx {

namespace {

// Pairing of the form diag(-1, ..., -1).
mpq_class dot(const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) {
    mpq_class s = 0;
    for (size_t i = 0; i < x.size(); ++i) s -= x[i] * y[i];
    return s;
}

std::vector<mpq_class> to_q(const std::vector<long>& v) { return {v.begin(), v.end()}; }

mpz_class floor_q(const mpq_class& x) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return f;
}

}  // namespace

long CobordismData::self_intersection() const {
    long s = 0;
    for (long x : S) s -= x * x;
    return s;
}

void require_cobordism(const CobordismData& d) {
    if (d.n < 0) throw DataInconsistent("negative blowup count");
    if (d.S.size() != static_cast<size_t>(d.n) || d.c.size() != static_cast<size_t>(d.n))
        throw DataInconsistent("surface and bundle classes need " + std::to_string(d.n) + " entries");
    if (d.genus < 0 || d.s_plus < 0 || d.s_minus < 0) throw DataInconsistent("negative genus or double point count");
}

ReducibleInvariants reducible_invariants(const CobordismData& d, const std::vector<long>& c1, const mpq_class& w) {
    require_cobordism(d);
    mpq_class omega = w;
    omega.canonicalize();
    if (c1.size() != static_cast<size_t>(d.n)) throw DataInconsistent("c1 needs " + std::to_string(d.n) + " entries");
    const auto S = to_q(d.S), c = to_q(d.c), l = to_q(c1);
    std::vector<mpq_class> a(S.size()), b(S.size());
    for (size_t i = 0; i < S.size(); ++i) {
        a[i] = l[i] + omega * S[i] - c[i] / 2;
        b[i] = c[i] - 2 * l[i];
    }
    ReducibleInvariants r;
    r.kappa = -dot(a, a);
    r.nu = dot(b, S);
    const mpq_class ss = dot(S, S);
    mpq_class index = 8 * r.kappa + 2 * (1 - 4 * omega) * r.nu - mpq_class(3, 2) * (d.chi_W + d.sigma_W) + d.chi_S +
                      8 * omega * omega * ss + d.sigma_start - d.sigma_end - 1;
    index.canonicalize();
    if (index.get_den() != 1) throw DataInconsistent("reducible index " + index.get_str() + " is not an integer");
    r.index = index.get_num().get_si();
    return r;
}

MinimalReducibles minimal_reducibles(const CobordismData& d, const mpq_class& w) {
    require_cobordism(d);
    mpq_class omega = w;
    omega.canonicalize();
    // The index is a sum of one quadratic in each coordinate of c1:
    // 8 (x + w S_i - c_i/2)^2 + 2 (1 - 4w)(2x - c_i) S_i, leading coefficient 8.
    std::vector<std::vector<long>> choices;
    for (int i = 0; i < d.n; ++i) {
        const mpq_class Si = d.S[static_cast<size_t>(i)], ci = d.c[static_cast<size_t>(i)];
        auto g = [&](long x) {
            const mpq_class a = x + omega * Si - ci / 2;
            return mpq_class(8 * a * a + 2 * (1 - 4 * omega) * (2 * x - ci) * Si);
        };
        const mpq_class centre = -(omega * Si - ci / 2) - (1 - 4 * omega) * Si / 4;
        const long f = floor_q(centre).get_si();
        std::vector<long> best;
        mpq_class low;
        for (long x = f - 1; x <= f + 2; ++x) {
            const mpq_class v = g(x);
            if (best.empty() || v < low) {
                best = {x};
                low = v;
            } else if (v == low) {
                best.push_back(x);
            }
        }
        choices.push_back(best);
    }

    MinimalReducibles m;
    std::vector<long> cur(static_cast<size_t>(d.n));
    std::vector<ReducibleInvariants> inv;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == choices.size()) {
            m.minimizers.push_back(cur);
            inv.push_back(reducible_invariants(d, cur, omega));
            return;
        }
        for (long x : choices[i]) {
            cur[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);

    m.index = inv.front().index;
    if ((m.index + 1) % 2 != 0) throw DataInconsistent("minimal reducible index " + std::to_string(m.index) + " is even");
    m.height = static_cast<int>((m.index + 1) / 2);
    if (m.height < 0)
        throw NotNegativeDefinite("minimal reducible index " + std::to_string(m.index) +
                                  ": not negative definite of non-negative height");
    m.kappa_min = inv.front().kappa;
    mpq_class nu0 = inv.front().nu;
    for (const auto& r : inv) {
        m.kappa_min = std::min(m.kappa_min, r.kappa);
        nu0 = std::max(nu0, r.nu);
    }
    for (size_t k = 0; k < inv.size(); ++k) {
        long sq = 0;
        for (long x : m.minimizers[k]) sq -= x * x;
        mpq_class e = nu0 - inv[k].nu;
        e.canonicalize();
        if (e.get_den() != 1) throw DataInconsistent("non-integral T exponent in eta");
        m.eta = m.eta + LaurentPoly::monomial(sq % 2 == 0 ? 1 : -1, static_cast<int>(e.get_num().get_si()));
    }
    m.strong = !m.eta.is_zero() && m.eta.low() == 0 && abs(m.eta.coeff(0)) == 1;
    return m;
}

CobordismData crossing_change_data(int sigma_start, int sigma_end) {
    CobordismData d;
    d.n = 1;
    d.S = {-2};
    d.c = {0};
    d.s_plus = 1;
    d.chi_W = 1;
    d.sigma_W = -1;
    d.sigma_start = sigma_start;
    d.sigma_end = sigma_end;
    return d;
}

CobordismData two_handle_trace_data() {
    CobordismData d;
    d.n = 1;
    d.S = {1};
    d.c = {0};
    d.chi_W = 1;
    d.sigma_W = -1;
    return d;
}

CobordismData immersed_data(int s_plus, int s_minus, int genus, int sigma_start, int sigma_end) {
    CobordismData d;
    d.n = s_plus + s_minus;
    d.S.assign(static_cast<size_t>(s_plus), -2);
    d.S.resize(static_cast<size_t>(d.n), 0);
    d.c.assign(static_cast<size_t>(d.n), 0);
    d.genus = genus;
    d.s_plus = s_plus;
    d.s_minus = s_minus;
    d.chi_W = d.n;
    d.sigma_W = -d.n;
    d.chi_S = -2 * genus;
    d.sigma_start = sigma_start;
    d.sigma_end = sigma_end;
    return d;
}

}  // namespace scx
