#pragma once

#include "scx/coeff/ratfunc.hpp"

#include <string>

namespace scx {

// Z[T^{+-1}], its fraction field Q(T), and the localization at T = 1.
enum class Ring { ZT, QT, Local };

Ring parse_ring(const std::string& s);
std::string ring_name(Ring r);

bool ring_contains(Ring r, const Coef& e);
bool ring_is_unit(Ring r, const Coef& e);

}  // namespace scx
