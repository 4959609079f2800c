#include "scx/coeff/linalg.hpp"

#include "scx/coeff/local.hpp"

#include <stdexcept>

namespace scx {

namespace {

// Size measure used to keep pivots small during elimination.
size_t weight(const Coef& c) { return c.num().coeffs().size() + c.den().coeffs().size(); }

}  // namespace

Rref rref(const Mat& a) {
    Rref out{a, {}};
    Mat& m = out.R;
    size_t r = 0;
    for (size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
        size_t best = m.rows();
        for (size_t i = r; i < m.rows(); ++i)
            if (!m(i, j).is_zero() && (best == m.rows() || weight(m(i, j)) < weight(m(best, j)))) best = i;
        if (best == m.rows()) continue;
        m.swap_rows(r, best);
        m.scale_row(r, m(r, j).inverse());
        for (size_t i = 0; i < m.rows(); ++i)
            if (i != r && !m(i, j).is_zero()) m.add_row(i, r, -m(i, j));
        out.pivots.push_back(j);
        ++r;
    }
    return out;
}

size_t rank(const Mat& a) { return rref(a).pivots.size(); }

Mat nullspace(const Mat& a) {
    Rref e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t p : e.pivots) is_pivot[p] = true;
    std::vector<size_t> free;
    for (size_t j = 0; j < a.cols(); ++j)
        if (!is_pivot[j]) free.push_back(j);
    Mat n(a.cols(), free.size());
    for (size_t k = 0; k < free.size(); ++k) {
        n(free[k], k) = Coef(1);
        for (size_t r = 0; r < e.pivots.size(); ++r) n(e.pivots[r], k) = -e.R(r, free[k]);
    }
    return n;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    Rref e = rref(a.hstack(Mat::column(b)));
    Vec x(a.cols());
    for (size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == a.cols()) return std::nullopt;
        x[e.pivots[r]] = e.R(r, a.cols());
    }
    return x;
}

Mat inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    size_t n = a.rows();
    Rref e = rref(a.hstack(Mat::identity(n)));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    return e.R.block(0, n, n, n);
}

Smith smith_dvr(const Mat& a) {
    Smith s;
    s.D = a;
    s.U = Mat::identity(a.rows());
    s.Uinv = Mat::identity(a.rows());
    s.V = Mat::identity(a.cols());
    s.Vinv = Mat::identity(a.cols());
    Mat& D = s.D;
    const size_t n = std::min(a.rows(), a.cols());
    for (size_t t = 0; t < n; ++t) {
        size_t bi = 0, bj = 0;
        int bv = kInfiniteValuation;
        for (size_t i = t; i < D.rows(); ++i)
            for (size_t j = t; j < D.cols(); ++j) {
                if (D(i, j).is_zero()) continue;
                int v = lambda_valuation(D(i, j));
                if (v < bv) {
                    bv = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bv == kInfiniteValuation) break;
        D.swap_rows(t, bi);
        s.U.swap_rows(t, bi);
        s.Uinv.swap_cols(t, bi);
        D.swap_cols(t, bj);
        s.V.swap_cols(t, bj);
        s.Vinv.swap_rows(t, bj);
        UnitDecomposition ud = lambda_unit_decompose(D(t, t));
        Coef ui = ud.unit.inverse();
        D.scale_row(t, ui);
        s.U.scale_row(t, ui);
        s.Uinv.scale_col(t, ud.unit);
        const Coef pinv = D(t, t).inverse();
        for (size_t i = t + 1; i < D.rows(); ++i) {
            if (D(i, t).is_zero()) continue;
            Coef f = D(i, t) * pinv;
            D.add_row(i, t, -f);
            s.U.add_row(i, t, -f);
            s.Uinv.add_col(t, i, f);
        }
        for (size_t j = t + 1; j < D.cols(); ++j) {
            if (D(t, j).is_zero()) continue;
            Coef g = D(t, j) * pinv;
            D.add_col(j, t, -g);
            s.V.add_col(j, t, -g);
            s.Vinv.add_row(t, j, g);
        }
        s.exps.push_back(bv);
        ++s.rank;
    }
    return s;
}

Mat kernel_dvr(const Mat& a) {
    Smith s = smith_dvr(a);
    std::vector<size_t> cols;
    for (size_t j = s.rank; j < a.cols(); ++j) cols.push_back(j);
    return s.V.select_cols(cols);
}

}  // namespace scx
