#include "scx/filtered/filtered.hpp"

#include "scx/coeff/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace scx {

const mpq_class& ExtQ::value() const {
    if (!finite()) throw std::logic_error("value of an infinite level");
    return v_;
}

std::string ExtQ::str() const {
    switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "inf";
        case Kind::Finite: break;
    }
    return v_.get_str();
}

ExtQ ExtQ::operator-() const {
    switch (kind_) {
        case Kind::NegInf: return pos_inf();
        case Kind::PosInf: return neg_inf();
        case Kind::Finite: break;
    }
    return ExtQ(mpq_class(-v_));
}

ExtQ operator+(const ExtQ& a, const ExtQ& b) {
    if (a.finite() && b.finite()) return ExtQ(mpq_class(a.v_ + b.v_));
    const bool neg = a.kind_ == ExtQ::Kind::NegInf || b.kind_ == ExtQ::Kind::NegInf;
    const bool pos = a.kind_ == ExtQ::Kind::PosInf || b.kind_ == ExtQ::Kind::PosInf;
    if (neg && pos) throw std::domain_error("inf - inf");
    return neg ? ExtQ::neg_inf() : ExtQ::pos_inf();
}

bool operator==(const ExtQ& a, const ExtQ& b) { return a.kind_ == b.kind_ && (!a.finite() || a.v_ == b.v_); }

bool operator<(const ExtQ& a, const ExtQ& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.finite() && a.v_ < b.v_;
}

ExtQ ext_max(const ExtQ& a, const ExtQ& b) { return a < b ? b : a; }

namespace {

SComplex prepare(const SComplex& c) {
    if (c.mode != GradingMode::ZxR) throw std::invalid_argument("filtered invariants need a ZxR-graded complex");
    if (c.omega != mpq_class(1, 4))
        throw std::domain_error("filtered invariants are implemented for omega = 1/4 only");
    return c.ring == Ring::QT ? c : base_change(c, Ring::QT);
}

std::vector<mpq_class> sorted_unique(std::vector<mpq_class> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Some solution of the constraints has nonzero (underline) or unit leading
// coefficient.
bool feasible(const SpecialSystem& sys, bool underline) {
    const size_t nu = sys.unknowns();
    if (nu == 0) return false;
    const size_t nr = sys.constraints.rows();
    if (underline) {
        Mat aug(nr + 1, nu);
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < nu; ++j) aug(i, j) = sys.constraints(i, j);
        for (size_t j = 0; j < nu; ++j) aug(nr, j) = sys.f_row[j];
        return rank(aug) > (nr ? rank(sys.constraints) : 0);
    }
    Mat a(nr + 1, nu);
    Vec b(nr + 1);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nu; ++j) a(i, j) = sys.constraints(i, j);
    for (size_t j = 0; j < nu; ++j) a(nr, j) = sys.f_row[j];
    b[nr] = Coef(1);
    return solve(a, b).has_value();
}

ExtQ n_prepared(const SComplex& c, int k, const Bound& s, bool underline) {
    for (const mpq_class& r : level_set(c, k))
        if (feasible(special_system(c, k, s, r), underline)) return ExtQ(r);
    return ExtQ::pos_inf();
}

}  // namespace

std::vector<mpq_class> level_set(const SComplex& c, int k) {
    return sorted_unique(special_system(prepare(c), k).unknown_levels);
}

std::vector<mpq_class> defect_levels(const SComplex& c, int k) {
    const SComplex p = prepare(c);
    std::vector<mpq_class> out;
    for (size_t g : generators_in_degree(p, 2 * k - 2)) out.push_back(component_level(p, g, 2 * k - 2));
    return sorted_unique(out);
}

ExtQ n_value(const SComplex& c, int k, const Bound& s, bool underline) {
    if (s && *s >= 0) throw std::domain_error("N(k, s) needs s < 0");
    return n_prepared(prepare(c), k, s, underline);
}

ExtQ n_transpose(const SComplex& c, int k, const Bound& r) {
    const SComplex p = prepare(c);
    auto within = [&](const ExtQ& n) { return !r || n <= ExtQ(*r); };
    if (within(n_prepared(p, k, std::nullopt, false))) return ExtQ::neg_inf();
    // N(k, .) only changes where a defect component becomes admissible.
    for (const mpq_class& l : defect_levels(p, k)) {
        if (l >= 0) break;
        if (within(n_prepared(p, k, l, false))) return ExtQ(l);
    }
    return ExtQ(mpq_class(0));
}

ExtQ gamma(const SComplex& c, int k) { return n_value(c, k, std::nullopt, true); }

ExtQ r_invariant(const SComplex& c, const Bound& s) {
    if (s && *s > 0) throw std::domain_error("r_s needs s <= 0");
    Bound r;
    if (s) r = mpq_class(-*s);
    return -n_transpose(c, 0, r);
}

}  // namespace scx
