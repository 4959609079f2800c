#include "scx/topology/reference.hpp"

namespace scx {

namespace {

mpq_class q(long a, long b) { return mpq_class(a, b); }

}  // namespace

const std::vector<TwoBridgeReferenceRow>& two_bridge_reference() {
    static const std::vector<TwoBridgeReferenceRow> rows = {
        {37, 17, "10_34*", q(2, 37), false, q(13, 37)},    {49, 23, "12a_169", q(4, 49), false, q(17, 49)},
        {53, 34, "10_28*", q(8, 53), true, q(19, 53)},     {61, 29, "", q(6, 61), false, q(21, 61)},
        {65, 51, "11a_333*", q(14, 65), true, q(25, 65)},  {69, 29, "10_32", q(6, 69), false, q(19, 69)},
        {73, 23, "12a_1148", q(2, 73), false, q(19, 73)},  {73, 35, "", q(8, 73), false, q(25, 73)},
        {77, 50, "12a_380*", q(18, 77), true, q(27, 77)},  {81, 52, "12a_596*", q(16, 81), true, q(29, 81)},
        {85, 41, "", q(10, 85), false, q(29, 85)},         {93, 73, "", q(22, 93), true, q(35, 93)},
        {93, 41, "11a_93*", q(8, 93), false, q(27, 93)},   {97, 31, "", q(4, 97), false, q(25, 97)},
        {97, 47, "", q(12, 97), false, q(33, 97)},         {101, 66, "", q(28, 101), true, q(35, 101)},
        {105, 41, "11a_175", q(6, 105), false, q(25, 105)}, {109, 70, "", q(24, 109), true, q(39, 109)},
        {109, 53, "", q(14, 109), true, q(37, 109)},       {109, 51, "", q(2, 109), false, q(47, 109)},
    };
    return rows;
}

const std::string& two_bridge_reference_caveat() {
    static const std::string s =
        "two-bridge knots K(p,q) with |p| <= 109, sigma = 0 and Gamma_K(0), Gamma_K*(0) not both zero, "
        "up to mirror";
    return s;
}

const std::vector<TrefoilGammaReference>& trefoil_gamma_reference() {
    static const std::vector<TrefoilGammaReference> rows = {{q(1, 10), q(1, 300)}, {q(1, 11), q(1, 1452)}};
    return rows;
}

}  // namespace scx
