#pragma once

#include "scx/coeff/matrix.hpp"

#include <optional>
#include <vector>

namespace scx {

// Linear algebra over the field Q(T).
struct Rref {
    Mat R;
    std::vector<size_t> pivots;  // pivot column of each nonzero row
};

Rref rref(const Mat& a);
size_t rank(const Mat& a);
// Columns form a basis of the right kernel.
Mat nullspace(const Mat& a);
std::optional<Vec> solve(const Mat& a, const Vec& b);
Mat inverse(const Mat& a);

// Smith normal form over the local ring at T = 1: U * A * V = D with D
// diagonal, diagonal entries exactly L^e (L = T - T^-1), exponents
// non-decreasing. Pivot rule: minimal valuation, then (row, col) order.
struct Smith {
    Mat D, U, Uinv, V, Vinv;
    size_t rank = 0;
    std::vector<int> exps;
};

Smith smith_dvr(const Mat& a);

// Saturated basis of the kernel over the local ring.
Mat kernel_dvr(const Mat& a);

}  // namespace scx
