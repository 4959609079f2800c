#pragma once

#include "scx/scomplex/scomplex.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace scx {

struct RingMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void check_compatible(const SComplex& a, const SComplex& b);

// Basis of the tensor product's split form in terms of pairs of C~ basis
// indices (a_g = g, b_g = n + g, 1 = 2n).
struct TensorBasis {
    TensorBasis(const SComplex& a, const SComplex& b);
    size_t n, m;
    std::vector<int> degA;
    std::vector<std::pair<size_t, size_t>> irr;
    std::vector<Generator> gens;
    std::map<std::pair<size_t, size_t>, size_t> index;

    // Adds c * (x_p (x) y_q) to a vector on the product's C~ basis.
    void add_coords(size_t p, size_t q, const Coef& c, Vec& out) const;
};

// Tensor product with the canonical splitting: the irreducible part is
// spanned by C(x)C', chi(C)(x)C', C(x)1' and 1(x)C' (in that order), the
// reducible generator is 1(x)1'.
SComplex tensor(const SComplex& a, const SComplex& b);

// Dual complex on generators g^ of degree -deg(g) - 1 and level -deg_I(g).
SComplex dual(const SComplex& c);

// Direct sum of the irreducible parts; the reducible generators are identified.
// The result is a valid S-complex only when delta2(b) delta1(a) and
// delta2(a) delta1(b) both vanish.
SComplex direct_sum(const SComplex& a, const SComplex& b);

}  // namespace scx
