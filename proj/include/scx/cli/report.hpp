#pragma once

#include "scx/coeff/ring.hpp"
#include "scx/topology/cobordism.hpp"

#include <gmpxx.h>
#include <json.hpp>

#include <exception>
#include <string>

namespace scx {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitRefused = 2, kExitInternal = 3 };

// 1 for parse errors, 2 for refused preconditions (domain errors, invalid
// data, unsupported descriptors, rank-one failures), 3 otherwise.
int exit_code_for(const std::exception& e);

struct ReportOptions {
    Ring ring = Ring::Local;
    mpq_class omega = mpq_class(1, 4);
    bool filtered = false;
};

// Every numeric leaf is an object {"value": ..., "provenance": "computed" | "reference-data"}.
nlohmann::json invariants_report(const std::string& descriptor, const ReportOptions& opt = {});
std::string report_text(const nlohmann::json& report);

// Reads pure-blowup cobordism data; a "sample" key selects one of the
// built-in examples (crossing-change, two-handle, immersed).
CobordismData cobordism_from_json(const nlohmann::json& j);
nlohmann::json cobordism_report(const CobordismData& d, const mpq_class& omega);
std::string cobordism_text(const nlohmann::json& report);

// Accepts p/q and integers; throws ParseError.
mpq_class parse_omega(const std::string& s);

}  // namespace scx
