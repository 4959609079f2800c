#include "scx/coeff/matrix.hpp"

#include <stdexcept>

namespace scx {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Coef(1);
    return m;
}

Mat Mat::column(const Vec& v) {
    Mat m(v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vec Mat::col(size_t j) const {
    Vec v(r_);
    for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Mat::row(size_t i) const { return Vec(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_)); }

Mat Mat::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    Mat b(nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Mat::set_block(size_t r0, size_t c0, const Mat& b) {
    for (size_t i = 0; i < b.r_; ++i)
        for (size_t j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat Mat::select_cols(const std::vector<size_t>& cols) const {
    Mat m(r_, cols.size());
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(i, cols[j]);
    return m;
}

Mat Mat::select_rows(const std::vector<size_t>& rows) const {
    Mat m(rows.size(), c_);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < c_; ++j) m(i, j) = (*this)(rows[i], j);
    return m;
}

Mat Mat::hstack(const Mat& o) const {
    if (r_ != o.r_) throw std::invalid_argument("hstack: row mismatch");
    Mat m(r_, c_ + o.c_);
    m.set_block(0, 0, *this);
    m.set_block(0, c_, o);
    return m;
}

Mat Mat::vstack(const Mat& o) const {
    if (c_ != o.c_) throw std::invalid_argument("vstack: column mismatch");
    Mat m(r_ + o.r_, c_);
    m.set_block(0, 0, *this);
    m.set_block(r_, 0, o);
    return m;
}

Mat Mat::operator-() const {
    Mat m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix sum: shape mismatch");
    Mat m = a;
    for (size_t i = 0; i < m.a_.size(); ++i)
        if (!b.a_[i].is_zero()) m.a_[i] += b.a_[i];
    return m;
}

Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

Mat operator*(const Mat& a, const Mat& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix product: shape mismatch");
    Mat m(a.r_, b.c_);
    for (size_t i = 0; i < a.r_; ++i)
        for (size_t k = 0; k < a.c_; ++k) {
            const Coef& x = a(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < b.c_; ++j) {
                const Coef& y = b(k, j);
                if (!y.is_zero()) m(i, j) += x * y;
            }
        }
    return m;
}

Mat operator*(const Coef& s, const Mat& a) {
    Mat m = a;
    for (auto& x : m.a_)
        if (!x.is_zero()) x *= s;
    return m;
}

Vec operator*(const Mat& a, const Vec& v) {
    if (a.c_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vec r(a.r_);
    for (size_t i = 0; i < a.r_; ++i)
        for (size_t j = 0; j < a.c_; ++j)
            if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
    return r;
}

void Mat::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void Mat::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void Mat::add_row(size_t i, size_t j, const Coef& s) {
    if (s.is_zero()) return;
    for (size_t k = 0; k < c_; ++k)
        if (!(*this)(j, k).is_zero()) (*this)(i, k) += s * (*this)(j, k);
}

void Mat::add_col(size_t i, size_t j, const Coef& s) {
    if (s.is_zero()) return;
    for (size_t k = 0; k < r_; ++k)
        if (!(*this)(k, j).is_zero()) (*this)(k, i) += s * (*this)(k, j);
}

void Mat::scale_row(size_t i, const Coef& s) {
    for (size_t k = 0; k < c_; ++k)
        if (!(*this)(i, k).is_zero()) (*this)(i, k) *= s;
}

void Mat::scale_col(size_t j, const Coef& s) {
    for (size_t k = 0; k < r_; ++k)
        if (!(*this)(k, j).is_zero()) (*this)(k, j) *= s;
}

std::string Mat::str() const {
    std::string out;
    for (size_t i = 0; i < r_; ++i) {
        out += "[";
        for (size_t j = 0; j < c_; ++j) {
            if (j) out += ", ";
            out += (*this)(i, j).str();
        }
        out += "]\n";
    }
    return out;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Coef& s, const Vec& a) {
    Vec r = a;
    for (auto& x : r)
        if (!x.is_zero()) x *= s;
    return r;
}

}  // namespace scx
