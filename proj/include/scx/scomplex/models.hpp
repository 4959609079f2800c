#pragma once

#include "scx/scomplex/scomplex.hpp"

namespace scx {

// One generator in degree 1 with delta1 = T^2 - T^-2.
SComplex right_trefoil(Ring ring = Ring::Local);
// One generator in degree -2 with delta2(1) = (T^2 - T^-2) * generator.
SComplex left_trefoil(Ring ring = Ring::Local);

// Generators a_1..a_h in degrees 2i - 1 with v(a_i) = tau * a_{i-1} and
// delta1(a_1) = tau; negative h gives the dual, h = 0 the trivial complex.
SComplex two_bridge_model(int h, Ring ring = Ring::Local);

// I-graded complex with one generator z in bidegree (1, r) and delta1(z) = 1.
SComplex c_r_model(const mpq_class& r, Ring ring = Ring::QT);

// The level-zero local model of the 10_28 mirror: a in (-2, -20/53),
// b in (-1, 8/53), d(b) = tau * a, delta2(1) = tau * a.
SComplex local_10_28_model(Ring ring = Ring::QT);

// The 10_28 mirror complex read off its generator/arrow diagram: generators
// z1..z26 with their (Z, I) bidegrees, d and delta1, delta2 as drawn (every
// arrow is +-tau). The diagram leaves v undisplayed; with_v adds
// v(z3) = tau * z22, the only component the complex axioms force.
SComplex figure_10_28_model(bool with_v = true, Ring ring = Ring::QT);

// k-fold tensor power of the degree-1 block with delta1 = 1 (dual for k < 0).
SComplex omega_block(int k, Ring ring = Ring::QT);

}  // namespace scx
