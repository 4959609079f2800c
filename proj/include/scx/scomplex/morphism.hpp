#pragma once

#include "scx/scomplex/scomplex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scx {

// lambda~ = [lambda 0 0; mu lambda Delta2; Delta1 0 eta] : C~ -> C~' of
// homological degree `shift` (= 2i). Matrices are target x source.
struct SMorphism {
    SComplex source, target;
    int shift = 0;
    Mat lambda, mu;
    Vec Delta1;  // Delta1(source generator j)
    Vec Delta2;  // coefficient of target generator i in Delta2(1)
    Coef eta;

    static SMorphism zero(const SComplex& source, const SComplex& target, int shift);
    static SMorphism identity(const SComplex& c);

    Mat tilde() const;
};

// Violated chain-map identities and grading rules; empty iff valid.
std::vector<std::string> validate_morphism(const SMorphism& m);

std::vector<Coef> c_coefficients(const SMorphism& m, int j_max);

struct MorphismClass {
    std::optional<int> height;  // empty when c_j != 0 for some j < i
    bool strong = false;
    bool local = false;
    std::optional<mpq_class> level;  // ZxR mode only
};

MorphismClass classify_morphism(const SMorphism& m);

// Largest (deg_I(output) - deg_I(input)) over nonzero entries; 0 if none.
mpq_class morphism_level(const SMorphism& m);

SMorphism compose(const SMorphism& second, const SMorphism& first);

// Unit test used for strength: the ring unit test when T is I-neutral
// (Z4 mode or w = 1/4); otherwise a power series in T with unit constant term.
bool is_strong_unit(const SComplex& c, const Coef& e);

}  // namespace scx
