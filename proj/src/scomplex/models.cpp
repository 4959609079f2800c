#include "scx/scomplex/models.hpp"

#include "scx/scomplex/ops.hpp"

namespace scx {

SComplex right_trefoil(Ring ring) {
    SComplex c = SComplex::with_generators(ring, GradingMode::Z4, {{"a", 1, 0}});
    c.delta1[0] = Coef::tau();
    return c;
}

SComplex left_trefoil(Ring ring) {
    SComplex c = SComplex::with_generators(ring, GradingMode::Z4, {{"a", -2, 0}});
    c.delta2[0] = Coef::tau();
    return c;
}

SComplex two_bridge_model(int h, Ring ring) {
    if (h < 0) return dual(two_bridge_model(-h, ring));
    std::vector<Generator> gens;
    for (int i = 1; i <= h; ++i) gens.push_back({"a" + std::to_string(i), 2 * i - 1, 0});
    SComplex c = SComplex::with_generators(ring, GradingMode::Z4, std::move(gens));
    if (h == 0) return c;
    c.delta1[0] = Coef::tau();
    for (int i = 1; i < h; ++i) c.v(static_cast<size_t>(i - 1), static_cast<size_t>(i)) = Coef::tau();
    return c;
}

SComplex c_r_model(const mpq_class& r, Ring ring) {
    SComplex c = SComplex::with_generators(ring, GradingMode::ZxR, {{"z", 1, r}});
    c.delta1[0] = Coef(1);
    return c;
}

SComplex local_10_28_model(Ring ring) {
    SComplex c = SComplex::with_generators(
        ring, GradingMode::ZxR, {{"a", -2, mpq_class(-20, 53)}, {"b", -1, mpq_class(8, 53)}});
    c.d(0, 1) = Coef::tau();
    c.delta2[0] = Coef::tau();
    return c;
}

SComplex figure_10_28_model(bool with_v, Ring ring) {
    // (Z-degree, 53 * I-degree) of z1..z26
    static const int deg[26][2] = {{2, 39},  {3, 50},  {1, 33},  {2, 41},  {0, 21},  {1, 26}, {3, 56},
                                   {0, 5},   {2, 32},  {1, 31},  {-1, 2},  {2, 51},  {0, 19}, {-1, 12},
                                   {1, 30},  {0, 20},  {2, 35},  {1, 22},  {-2, -20}, {0, 18}, {1, 27},
                                   {-1, 8},  {0, 14},  {-2, -8}, {-1, -5}, {1, 23}};
    // d arrows (source, target, sign); signs fixed by d^2 = 0.
    static const int arrows[][3] = {{2, 1, 1},   {2, 17, 1},  {1, 18, 1},  {17, 18, -1}, {22, 19, 1}, {3, 16, 1},
                                    {5, 14, -1}, {8, 11, 1},  {6, 13, 1},  {21, 20, 1},  {26, 23, 1}, {4, 15, 1},
                                    {9, 10, 1},  {7, 4, 1},   {7, 12, 1},  {13, 14, 1},  {6, 5, 1},   {12, 15, -1},
                                    {25, 24, 1}};
    std::vector<Generator> gens;
    for (int i = 0; i < 26; ++i) gens.push_back({"z" + std::to_string(i + 1), deg[i][0], mpq_class(deg[i][1], 53)});
    SComplex c = SComplex::with_generators(ring, GradingMode::ZxR, std::move(gens));
    const Coef tau = Coef::tau();
    for (const auto& a : arrows)
        c.d(static_cast<size_t>(a[1] - 1), static_cast<size_t>(a[0] - 1)) = Coef(a[2]) * tau;
    c.delta1[2] = tau;   // z3 -> reducible
    c.delta2[18] = tau;  // reducible -> z19
    if (with_v) c.v(21, 2) = tau;
    return c;
}

SComplex omega_block(int k, Ring ring) {
    if (k < 0) return dual(omega_block(-k, ring));
    SComplex one = SComplex::with_generators(ring, GradingMode::Z4, {{"w", 1, 0}});
    one.delta1[0] = Coef(1);
    if (k == 0) return SComplex::trivial(ring);
    SComplex r = one;
    for (int i = 1; i < k; ++i) r = tensor(r, one);
    return r;
}

}  // namespace scx
