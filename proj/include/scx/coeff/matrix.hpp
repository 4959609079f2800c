#pragma once

#include "scx/coeff/ratfunc.hpp"

#include <string>
#include <vector>

namespace scx {

using Vec = std::vector<Coef>;

// Dense row-major matrix over Q(T).
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static Mat identity(size_t n);
    static Mat column(const Vec& v);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Coef& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Coef& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    bool is_zero() const;
    Mat transpose() const;
    Vec col(size_t j) const;
    Vec row(size_t i) const;
    Mat block(size_t r0, size_t c0, size_t nr, size_t nc) const;
    void set_block(size_t r0, size_t c0, const Mat& b);
    Mat select_cols(const std::vector<size_t>& cols) const;
    Mat select_rows(const std::vector<size_t>& rows) const;
    Mat hstack(const Mat& o) const;
    Mat vstack(const Mat& o) const;

    Mat operator-() const;
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const Coef& s, const Mat& a);
    friend Vec operator*(const Mat& a, const Vec& v);
    friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    // row_i += s * row_j
    void add_row(size_t i, size_t j, const Coef& s);
    // col_i += s * col_j
    void add_col(size_t i, size_t j, const Coef& s);
    void scale_row(size_t i, const Coef& s);
    void scale_col(size_t j, const Coef& s);

    std::string str() const;

private:
    size_t r_ = 0, c_ = 0;
    std::vector<Coef> a_;
};

bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Coef& s, const Vec& a);

}  // namespace scx
