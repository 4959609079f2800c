#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace scx {

// Published two-bridge filtered values, recorded as reference data and never
// used as computed output.
struct TwoBridgeReferenceRow {
    long p, q;
    std::string name;
    mpq_class gamma0;       // Gamma_K(0)
    bool gamma_above_eighth;
    mpq_class r_mirror;     // r'_s(K*) for s in (-Gamma_K(0), 0]
};

const std::vector<TwoBridgeReferenceRow>& two_bridge_reference();
// Scope note of the table: sigma = 0, |p| <= 109, Gamma_K(0) and Gamma_K*(0) "not both zero".
const std::string& two_bridge_reference_caveat();

struct TrefoilGammaReference {
    mpq_class omega;
    mpq_class gamma1;  // Gamma^omega(1) of the right-handed trefoil
};
const std::vector<TrefoilGammaReference>& trefoil_gamma_reference();

}  // namespace scx
