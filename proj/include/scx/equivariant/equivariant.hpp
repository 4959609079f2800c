#pragma once

#include "scx/coeff/xpoly.hpp"
#include "scx/scomplex/morphism.hpp"
#include "scx/scomplex/scomplex.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace scx {

// Chain (alpha, sum a_i x^i) of the small model C_{*-1} + R[x].
struct HatChain {
    Vec alpha;
    XPoly poly;
};

// Filtration bound: empty means -infinity (exact cycle condition).
using Bound = std::optional<mpq_class>;

struct SpecialCycleWitness {
    HatChain chain;
    int k = 0;
    Coef f;
    Bound s;
    int valuation = 0;  // Lambda-valuation of f over the local ring, 0 over a field
};

struct UnsupportedRing : std::domain_error {
    using std::domain_error::domain_error;
};

// Linear system for special (k, f)-cycles. Unknowns are the coefficients of
// alpha on the generators of degree 2k - 1, then a_i for the admissible
// exponents i (k <= 0 only). Solutions are exactly the kernel of
// `constraints`; f is the functional `f_row`.
struct SpecialSystem {
    int k = 0;
    std::vector<size_t> alpha_gens;
    std::vector<int> a_exps;
    std::vector<mpq_class> unknown_levels;  // ZxR mode only
    Mat constraints;
    Vec f_row;

    size_t unknowns() const { return alpha_gens.size() + a_exps.size(); }
    HatChain chain(const Vec& u, size_t n) const;
};

// Defect components of level <= s are dropped in ZxR mode. With max_level,
// unknowns of level above it are dropped.
SpecialSystem special_system(const SComplex& c, int k, const Bound& s = std::nullopt,
                             const std::optional<mpq_class>& max_level = std::nullopt);

// Level of the component of a degree-D chain on generator g (ZxR mode).
mpq_class component_level(const SComplex& c, size_t g, int D);

HatChain dhat_apply(const SComplex& c, const HatChain& z);

// Terms of the i-map with x-exponent >= -depth.
std::vector<std::pair<int, Coef>> i_map_leading(const SComplex& c, const HatChain& z, int depth);

// Over Q(T): f normalized to 1. Over the local ring: f of minimal valuation.
// Z[T] complexes must be base-changed first.
std::optional<SpecialCycleWitness> special_cycle_search(const SComplex& c, int k, const Bound& s = std::nullopt);

// Largest k admitting a special cycle over the fraction field.
int froyshov(const SComplex& c);

// n0 with J_k = (L^n0) over the local ring; empty when J_k = 0.
std::optional<int> j_ideal_valuation(const SComplex& c, int k);

// Image under the quoted inverse of the large-to-small equivalence:
// (sum_m P_m x^m, alpha, sum a_i x^i).
struct LargeHatChain {
    std::map<int, Vec> first;
    Vec second;
    XPoly third;
};
LargeHatChain psi_hat(const SComplex& c, const HatChain& z);

// The C~-coefficients zeta_m of psi_hat(z) = sum_m zeta_m x^m, as vectors on
// the basis a_0.., b_0.., 1 of C~.
std::map<int, Vec> psi_hat_coefficients(const SComplex& c, const HatChain& z);

// Transport of a special cycle along a morphism of degree 2i: the image
// (Phi o lambda^ o Psi)(z) in the small model of the target.
HatChain transport(const SMorphism& m, const HatChain& z);

// Tensor product of small-model chains, realized through the large models.
HatChain tensor_chain(const SComplex& a, const SComplex& b, const HatChain& za, const HatChain& zb);

// Degree bookkeeping: the generators of C whose Z-degree is congruent to deg.
std::vector<size_t> generators_in_degree(const SComplex& c, int deg);

// Checks the torsion bound for cycles of the small check-model in degree k:
// for every basis cycle, the C-parts of zeta_{-1}, zeta_{-3}, ... admit a
// nonzero relation of length <= rank C_{k-2} + 1 that annihilates j(f(x^2)xi).
// Returns the number of cycles checked; throws std::logic_error on failure.
int check_torsion_bound(const SComplex& c, int k);

}  // namespace scx
