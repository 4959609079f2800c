#pragma once

#include "scx/coeff/laurent.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace scx {

// Cobordism of pairs whose W has intersection form diag(-1, ..., -1) on Z^n.
struct CobordismData {
    int n = 0;
    std::vector<long> S;  // surface class
    std::vector<long> c;  // bundle class
    int genus = 0;
    int s_plus = 0, s_minus = 0;
    int chi_W = 0, sigma_W = 0, chi_S = 0;
    int sigma_start = 0, sigma_end = 0;  // (omega-)signatures of the two ends

    long self_intersection() const;  // S.S
};

struct NotNegativeDefinite : std::domain_error {
    using std::domain_error::domain_error;
};

struct DataInconsistent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Throws DataInconsistent on negative n or class vectors of the wrong length.
void require_cobordism(const CobordismData& d);

struct ReducibleInvariants {
    mpq_class kappa, nu;
    long index = 0;
};

// kappa = -(c1 + w S - c/2)^2, nu = (c - 2 c1).S and the index
// 8 kappa + 2(1 - 4w) nu - 3/2 (chi + sigma) + chi(S) + 8 w^2 S.S + sigma - sigma' - 1.
// A non-integral index throws DataInconsistent.
ReducibleInvariants reducible_invariants(const CobordismData& d, const std::vector<long>& c1, const mpq_class& omega);

struct MinimalReducibles {
    mpq_class kappa_min;
    int height = 0;
    long index = 0;
    bool strong = false;  // eta is a unit of Z[[T]] with vanishing deg_I
    // sum (-1)^{c1^2} T^{nu(A0) - nu(A)}, A0 the minimizer of largest nu
    LaurentPoly eta;
    std::vector<std::vector<long>> minimizers;
};

// Enumerates the index-minimizing c1; throws NotNegativeDefinite if the
// minimal index is below -1.
MinimalReducibles minimal_reducibles(const CobordismData& d, const mpq_class& omega);

// Blowup of the crossing change from a negative to a positive crossing.
CobordismData crossing_change_data(int sigma_start, int sigma_end);
// Trace of a -1 framed 2-handle along an unknotted meridian-class surface.
CobordismData two_handle_trace_data();
// Blown-up immersed annulus cobordism with the given double points.
CobordismData immersed_data(int s_plus, int s_minus, int genus, int sigma_start, int sigma_end);

}  // namespace scx
