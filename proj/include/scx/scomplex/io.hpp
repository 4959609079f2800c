#pragma once

#include "scx/scomplex/scomplex.hpp"

#include <json.hpp>

#include <string>

namespace scx {

// Reads the complex file format. Entries may carry an explicit U^m factor in
// ZxR mode; it must agree with the power pinned by the gradings.
SComplex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const SComplex& c);

SComplex load_complex(const std::string& path);
void save_complex(const SComplex& c, const std::string& path);

}  // namespace scx
