#pragma once

#include "scx/equivariant/equivariant.hpp"
#include "scx/scomplex/scomplex.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scx {

// Raised when H(C~+) over the fraction field is not rank 1 in even degree
// and 0 in odd degree; the s-invariants are not defined then.
struct Rank1Failure : std::domain_error {
    using std::domain_error::domain_error;
};

// I^l = (x^l, x^{l-1} tau, ..., tau^l); l = 0 is the full ring R[x].
struct MonomialIdealXTau {
    int l = 0;

    bool full_ring() const { return l == 0; }
    // (x-exponent, tau-exponent) of each generator.
    std::vector<std::pair<int, int>> generators() const;
    std::string str() const;
};

bool ideal_member_monomial(const MonomialIdealXTau& ideal, int a, int b);

enum class KnotFamily { Trivial, TrefoilSum, TwoBridge, Other };

struct FamilyDescriptor {
    KnotFamily family = KnotFamily::Trivial;
    int count = 0;       // trefoil summands
    bool right = true;   // handedness of the trefoils
    int sigma = 0;       // two-bridge signature
};

// Throws std::domain_error for KnotFamily::Other.
MonomialIdealXTau z_hat_structured(const FamilyDescriptor& d);

enum class GongType { O, I, II };
std::string type_name(GongType t);

struct InvariantReport {
    int h = 0;
    int n0 = 0;
    int s_tilde = 0;
    int s_sharp_plus = 0, s_sharp_minus = 0, s_sharp = 0;
    int epsilon = 0;
    GongType type = GongType::O;
    SpecialCycleWitness witness;
    std::vector<std::string> notes;
};

// All s-type invariants from one special cycle at k = h over the local ring.
// Complexes over Q(T) are base-changed first; throws Rank1Failure.
InvariantReport compute_invariants(const SComplex& c);

int s_tilde(const SComplex& c);
std::pair<int, int> s_sharp_pm(const SComplex& c);
std::pair<int, GongType> epsilon_and_type(const SComplex& c);

nlohmann::json report_to_json(const InvariantReport& r);

}  // namespace scx
