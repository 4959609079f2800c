#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace scx {

// Dense univariate polynomial over Q, coefficients stored low degree first.
// Trailing zeros are always stripped, so the zero polynomial is empty.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> c);
    QPoly(long c);  // NOLINT: constants convert implicitly
    QPoly(const mpq_class& c);  // NOLINT

    static QPoly monomial(const mpq_class& c, int deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(int i) const;
    const mpq_class& lead() const { return c_.back(); }

    // Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
    int low_degree() const;
    // Divide by T^k; the low k coefficients must vanish.
    QPoly shift_down(int k) const;
    QPoly shift_up(int k) const;

    mpq_class eval(const mpq_class& x) const;
    QPoly derivative() const;
    QPoly monic() const;
    bool is_constant() const { return c_.size() <= 1; }
    bool has_integer_coeffs() const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const mpq_class& s);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
    static QPoly gcd(QPoly a, QPoly b);  // monic, gcd(0,0) = 0

    // Order of vanishing at x = r; -1 for the zero polynomial.
    int order_at(const mpq_class& r) const;

    std::string str(const std::string& var = "T") const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

}  // namespace scx
