#include "scx/coeff/local.hpp"

#include <stdexcept>

namespace scx {

namespace {

using Series = std::vector<mpq_class>;

Series series_mul(const Series& a, const Series& b, size_t n) {
    Series r(n, mpq_class(0));
    for (size_t i = 0; i < n && i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Series series_inverse(const Series& a, size_t n) {
    if (a.empty() || a[0] == 0) throw std::domain_error("series not invertible");
    Series r(n, mpq_class(0));
    r[0] = 1 / a[0];
    for (size_t k = 1; k < n; ++k) {
        mpq_class s = 0;
        for (size_t i = 1; i <= k && i < a.size(); ++i) s += a[i] * r[k - i];
        r[k] = -s / a[0];
    }
    return r;
}

// Horner evaluation of p at the series x.
Series series_compose(const QPoly& p, const Series& x, size_t n) {
    Series acc(n, mpq_class(0));
    const auto& c = p.coeffs();
    for (size_t i = c.size(); i-- > 0;) {
        acc = series_mul(acc, x, n);
        acc[0] += c[i];
    }
    return acc;
}

}  // namespace

LocalElement::LocalElement(const RationalFunction& r) : v_(r) {
    if (!in_local_ring(r)) throw std::domain_error("denominator vanishes at T=1: " + r.str());
}

LocalElement::LocalElement(const LaurentPoly& num, const LaurentPoly& den)
    : LocalElement(RationalFunction(num, den)) {}

bool in_local_ring(const RationalFunction& e) { return e.den().eval(1) != 0; }

int lambda_valuation(const RationalFunction& e) {
    if (e.is_zero()) return kInfiniteValuation;
    if (!in_local_ring(e)) throw std::domain_error("element outside the local ring: " + e.str());
    return e.num().order_at(1);
}

UnitDecomposition lambda_unit_decompose(const RationalFunction& e) {
    if (e.is_zero()) throw std::domain_error("zero has no unit part");
    int v = lambda_valuation(e);
    return {v, e * RationalFunction::lambda().pow(-v)};
}

std::vector<mpq_class> lambda_series_expand(const RationalFunction& e, int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("n_terms must be positive");
    if (!in_local_ring(e)) throw std::domain_error("element outside the local ring: " + e.str());
    size_t n = static_cast<size_t>(n_terms);
    // T solves T^2 - L*T - 1 = 0 with T(0) = 1; T^-1 = T - L.
    Series t(n, mpq_class(0));
    t[0] = 1;
    for (size_t k = 1; k < n; ++k) {
        mpq_class s = 0;
        for (size_t i = 1; i < k; ++i) s += t[i] * t[k - i];
        t[k] = (t[k - 1] - s) / 2;
    }
    Series tinv = t;
    if (n > 1) tinv[1] -= 1;
    Series num = series_compose(e.num(), t, n);
    Series den = series_compose(e.den(), t, n);
    Series sh(n, mpq_class(0));
    sh[0] = 1;
    const Series& base = e.shift() >= 0 ? t : tinv;
    for (int i = 0; i < std::abs(e.shift()); ++i) sh = series_mul(sh, base, n);
    return series_mul(series_mul(num, sh, n), series_inverse(den, n), n);
}

LocalElement embed_laurent_to_local(const LaurentPoly& p) { return LocalElement(RationalFunction(p)); }

}  // namespace scx
