#pragma once

#include "scx/scomplex/scomplex.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace scx {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Empty iff every axiom, grading rule and ring-membership condition holds.
// Throws DimensionError for inconsistent matrix shapes.
std::vector<std::string> validate_complex(const SComplex& c);

void require_valid(const SComplex& c, const std::string& what);

}  // namespace scx
