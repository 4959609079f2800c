#pragma once

#include "scx/coeff/ratfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scx {

// Element of Q[T^{+-1}] localized at the prime (T - 1). This is an exact
// model of Q[[L]] with L = T - T^-1 for every valuation question.
class LocalElement {
public:
    LocalElement() = default;
    LocalElement(long c) : v_(c) {}  // NOLINT
    explicit LocalElement(const RationalFunction& r);
    LocalElement(const LaurentPoly& num, const LaurentPoly& den);

    const RationalFunction& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }

    friend LocalElement operator+(const LocalElement& a, const LocalElement& b) { return LocalElement(a.v_ + b.v_); }
    friend LocalElement operator-(const LocalElement& a, const LocalElement& b) { return LocalElement(a.v_ - b.v_); }
    friend LocalElement operator*(const LocalElement& a, const LocalElement& b) { return LocalElement(a.v_ * b.v_); }
    friend bool operator==(const LocalElement& a, const LocalElement& b) { return a.v_ == b.v_; }

private:
    RationalFunction v_;
};

inline constexpr int kInfiniteValuation = 1 << 30;

// Order of vanishing at T = 1; kInfiniteValuation for zero. The argument must
// lie in the local ring (denominator nonzero at T = 1).
int lambda_valuation(const RationalFunction& e);
inline int lambda_valuation(const LocalElement& e) { return lambda_valuation(e.value()); }

bool in_local_ring(const RationalFunction& e);

struct UnitDecomposition {
    int valuation;
    RationalFunction unit;
};

// e = L^valuation * unit with unit of valuation zero.
UnitDecomposition lambda_unit_decompose(const RationalFunction& e);
inline UnitDecomposition lambda_unit_decompose(const LocalElement& e) { return lambda_unit_decompose(e.value()); }

// First n coefficients of e as a power series in L.
std::vector<mpq_class> lambda_series_expand(const RationalFunction& e, int n_terms);
inline std::vector<mpq_class> lambda_series_expand(const LocalElement& e, int n) {
    return lambda_series_expand(e.value(), n);
}

LocalElement embed_laurent_to_local(const LaurentPoly& p);

}  // namespace scx
