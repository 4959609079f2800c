#pragma once

#include "scx/scomplex/morphism.hpp"
#include "scx/scomplex/scomplex.hpp"

#include <random>

namespace scx {

using Rng = std::mt19937_64;

// Nonzero element of the local ring at T = 1 with small integer data.
Coef random_local_element(Rng& rng);
// Element with nonzero value at T = 1.
Coef random_local_unit(Rng& rng);

// A valid complex together with the isomorphisms relating it to the
// unperturbed direct sum it was built from.
struct RandomComplex {
    SComplex base;
    SComplex complex;
    SMorphism forward;   // base -> complex
    SMorphism backward;  // complex -> base
};

// Direct sum of random two-bridge chains, their duals and contractible
// pairs, with at most `max_gens` irreducible generators, scrambled by random
// graded basis changes and the homotopy moves on v, delta1 and delta2.
// Coefficients lie in the local ring; `ring` is Local or QT.
RandomComplex random_complex(Rng& rng, Ring ring, size_t max_gens = 5);

// Two-bridge chain of length h (or its dual for h < 0) with random
// coefficients.
SComplex random_chain(Rng& rng, int h, Ring ring);

// ZxR two-bridge model over Q(T) with random strictly increasing positive
// levels; duals for h < 0.
SComplex random_filtered_chain(Rng& rng, int h);

}  // namespace scx
