#pragma once

#include "scx/coeff/matrix.hpp"
#include "scx/coeff/ring.hpp"

#include <string>
#include <vector>

namespace scx {

enum class GradingMode { Z4, ZxR };

struct Generator {
    std::string name;
    int deg_z = 0;        // compared mod 4 in Z4 mode
    mpq_class deg_i = 0;  // ZxR mode only
};

// Split-form S-complex C~ = C + chi(C) + R with
//   d~(a, b, r) = (d a, v a - d b + delta2 r, delta1 a),  chi(a, b, r) = (0, a, 0).
// Matrices act on column vectors of generator coefficients: d(i, j) is the
// coefficient of generator i in d(generator j). In ZxR mode every entry
// carries an implicit power of U fixed by the Z-gradings (deg_Z U = 4).
struct SComplex {
    Ring ring = Ring::QT;
    GradingMode mode = GradingMode::Z4;
    mpq_class omega = mpq_class(1, 4);
    std::vector<Generator> gens;
    Mat d, v;
    Vec delta1;  // delta1(generator j)
    Vec delta2;  // coefficient of generator i in delta2(1)

    size_t size() const { return gens.size(); }

    static SComplex trivial(Ring ring = Ring::QT, GradingMode mode = GradingMode::Z4);
    // Empty complex with matrices sized for the given generators.
    static SComplex with_generators(Ring ring, GradingMode mode, std::vector<Generator> gens);

    // Full unsplit matrices on C~ with basis a_0..a_{n-1}, b_0..b_{n-1}, 1.
    Mat dtilde() const;
    Mat chi() const;
    // Z-gradings of the C~ basis: deg a_g = deg g, deg b_g = deg g + 1, deg 1 = 0.
    std::vector<int> tilde_degrees() const;
    std::vector<mpq_class> tilde_levels() const;
};

// Sign map epsilon: (-1)^deg on a homogeneous element.
inline int parity_sign(int deg) { return (deg % 2 == 0) ? 1 : -1; }
inline int mod4(int x) { return ((x % 4) + 4) % 4; }

// The power of U attached to an entry of a map of Z-degree `shift`
// from a generator in degree `from` to one in degree `to`, or false if the
// degrees are incompatible.
bool pinned_u_power(int from, int to, int shift, int& m);

// deg_I contribution of the T-monomials of an entry: the largest j(2w - 1/2)
// over its support. Throws for non-Laurent entries when w != 1/4.
mpq_class t_level(const Coef& c, const mpq_class& omega);

// Ring base change; entries are checked against the new ring.
SComplex base_change(const SComplex& c, Ring ring);

}  // namespace scx
