#pragma once

#include "scx/equivariant/equivariant.hpp"
#include "scx/scomplex/scomplex.hpp"

#include <optional>
#include <vector>

namespace scx {

// A differential on a free module with a cyclic grading: D(i, j) is the
// coefficient of basis element i in D(basis element j), degrees are taken
// modulo `modulus`.
struct GradedDifferential {
    Mat D;
    std::vector<int> degrees;
    int modulus = 4;
};

// (zeta1, zeta2) in C# = C~_* + C~_{*+2}; each slot is a vector on the C~
// basis a_0.., b_0.., 1.
struct FramedChain {
    Vec zeta1, zeta2;
    Vec flat() const;
    static FramedChain from_flat(const Vec& v);
};

// d# = [[d~, 2L^2 chi], [2 chi, d~]]. Requires 2 to be invertible.
GradedDifferential build_framed(const SComplex& c);
// (C~, d~ + sign * 2L chi), graded mod 2.
GradedDifferential build_reduced(const SComplex& c, int sign);

// x (zeta1, zeta2) = (-2L^2 zeta2, -2 zeta1).
FramedChain sharp_x_action(const FramedChain& z);

// iota_s = [L; s] : C~s -> C#, pi_s = [1, s L] : C# -> C~s.
Mat iota_matrix(const SComplex& c, int sign);
Mat pi_matrix(const SComplex& c, int sign);

struct NotACycle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Homology over the local ring at T = 1, via Smith forms of D and of D
// restricted to the complement of its image.
class DvrHomology {
public:
    explicit DvrHomology(const Mat& D);

    size_t free_rank() const { return free_rank_; }
    // Exponents e > 0 of the torsion summands R/(L^e).
    const std::vector<int>& torsion() const { return torsion_; }

    struct Coordinates {
        Vec free;
        Vec torsion;  // each reduced to a polynomial in L of degree < e
    };
    bool is_cycle(const Vec& y) const;
    Coordinates coordinates(const Vec& cycle) const;
    // Largest m with [cycle] in L^m (H / Tor); empty for torsion classes.
    std::optional<int> divisibility(const Vec& cycle) const;

private:
    Mat D_, U1_, V2inv_;
    size_t rho_ = 0, r2_ = 0, free_rank_ = 0;
    std::vector<int> exps_, torsion_;
};

DvrHomology homology_dvr(const GradedDifferential& g);

// Ranks of homology over Q(T), indexed by degree residue.
std::vector<size_t> field_ranks(const GradedDifferential& g);

// Representative of xi#+(f) for a special cycle at k = h. Throws
// std::invalid_argument when w.k != froyshov(c).
FramedChain q_sharp_special(const SComplex& c, const SpecialCycleWitness& w);
// Representative of xi~(f) in C~+ (x acting by -2L).
Vec q_tilde_special(const SComplex& c, const SpecialCycleWitness& w);

std::optional<int> divisibility_index(const DvrHomology& h, const Vec& cycle);

// Degree of a homogeneous framed chain (C# grading); empty for zero.
std::optional<int> framed_degree(const SComplex& c, const FramedChain& z);

struct PairingResult {
    Coef value;
    bool degree_mismatch = false;
};

// <(phi, psi), (zeta1, zeta2)> = <psi, zeta1> + <phi, zeta2>, with
// <(f, g, a), (alpha, beta, r)> = sum eps(g^_i) f_i beta_i - g_i alpha_i + a r
// on C~' = dual(c) against C~.
PairingResult pairing(const SComplex& c, const FramedChain& dual_chain, const FramedChain& chain);

// H(C~+) over Q(T) has rank 1 in even degree and 0 in odd degree.
bool rank1_check(const SComplex& c);

}  // namespace scx
