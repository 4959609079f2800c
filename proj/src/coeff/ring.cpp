#include "scx/coeff/ring.hpp"

#include "scx/coeff/local.hpp"

#include <stdexcept>

namespace scx {

Ring parse_ring(const std::string& s) {
    if (s == "Z[T]") return Ring::ZT;
    if (s == "Q(T)") return Ring::QT;
    if (s == "localT1") return Ring::Local;
    throw std::invalid_argument("unknown ring tag: " + s);
}

std::string ring_name(Ring r) {
    switch (r) {
        case Ring::ZT: return "Z[T]";
        case Ring::QT: return "Q(T)";
        case Ring::Local: return "localT1";
    }
    return "?";
}

bool ring_contains(Ring r, const Coef& e) {
    switch (r) {
        case Ring::ZT: return e.is_laurent() && e.num().has_integer_coeffs();
        case Ring::QT: return true;
        case Ring::Local: return in_local_ring(e);
    }
    return false;
}

bool ring_is_unit(Ring r, const Coef& e) {
    if (e.is_zero() || !ring_contains(r, e)) return false;
    switch (r) {
        case Ring::ZT: return e.is_laurent() && e.num().is_constant() && abs(e.num().lead()) == 1;
        case Ring::QT: return true;
        case Ring::Local: return lambda_valuation(e) == 0;
    }
    return false;
}

}  // namespace scx
