#pragma once

#include "scx/equivariant/equivariant.hpp"
#include "scx/scomplex/morphism.hpp"
#include "scx/scomplex/scomplex.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace scx {

// Rational extended by -inf and +inf.
class ExtQ {
public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtQ() = default;
    ExtQ(const mpq_class& v) : kind_(Kind::Finite), v_(v) {}  // NOLINT
    static ExtQ neg_inf() { return ExtQ(Kind::NegInf); }
    static ExtQ pos_inf() { return ExtQ(Kind::PosInf); }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    const mpq_class& value() const;
    std::string str() const;

    ExtQ operator-() const;
    friend ExtQ operator+(const ExtQ& a, const ExtQ& b);  // throws on inf - inf
    friend bool operator==(const ExtQ& a, const ExtQ& b);
    friend bool operator<(const ExtQ& a, const ExtQ& b);
    friend bool operator<=(const ExtQ& a, const ExtQ& b) { return !(b < a); }
    friend bool operator>(const ExtQ& a, const ExtQ& b) { return b < a; }
    friend bool operator>=(const ExtQ& a, const ExtQ& b) { return !(a < b); }
    friend std::ostream& operator<<(std::ostream& os, const ExtQ& x) { return os << x.str(); }

private:
    explicit ExtQ(Kind k) : kind_(k) {}
    Kind kind_ = Kind::Finite;
    mpq_class v_ = 0;
};

ExtQ ext_max(const ExtQ& a, const ExtQ& b);

// Sorted distinct levels of the unknowns of a filtered special (k, *, s)-cycle.
std::vector<mpq_class> level_set(const SComplex& c, int k);
// Sorted distinct levels of the defect components (degree 2k - 2).
std::vector<mpq_class> defect_levels(const SComplex& c, int k);

// N(k, s) (underline = false: leading coefficient exactly 1; true: nonzero).
// s empty means -inf; s >= 0 is a domain error. Returns a level or +inf.
// Complexes are base-changed to Q(T); ZxR mode and omega = 1/4 are required.
ExtQ n_value(const SComplex& c, int k, const Bound& s, bool underline = false);

// N^T(k, r) = min{inf{s in [-inf, 0) : N(k, s) <= r}, 0}; r empty means +inf.
ExtQ n_transpose(const SComplex& c, int k, const Bound& r);

ExtQ gamma(const SComplex& c, int k);

// r_s = -N^T(0, -s) for s <= 0; s empty means -inf.
ExtQ r_invariant(const SComplex& c, const Bound& s);

}  // namespace scx
