#include "scx/topology/seifert.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <functional>
#include <numeric>

namespace scx {

namespace {

using QMat = std::vector<std::vector<mpq_class>>;

QMat to_q(const IntMatrix& a) {
    QMat m(a.size(), std::vector<mpq_class>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) m[i][j] = a[i][j];
    return m;
}

QMat transpose(const QMat& a) {
    QMat t(a.size(), std::vector<mpq_class>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
    return t;
}

QMat combine(const QMat& a, const mpq_class& x, const QMat& b, const mpq_class& y) {
    QMat m = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) m[i][j] = x * a[i][j] + y * b[i][j];
    return m;
}

// Characteristic polynomial det(x I - m) by Faddeev-LeVerrier.
QPoly char_poly(const QMat& a) {
    const size_t n = a.size();
    std::vector<mpq_class> c(n + 1);
    c[n] = 1;
    QMat mk(n, std::vector<mpq_class>(n));
    for (size_t k = 1; k <= n; ++k) {
        QMat next(n, std::vector<mpq_class>(n));
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                mpq_class s = 0;
                for (size_t l = 0; l < n; ++l) s += a[i][l] * mk[l][j];
                next[i][j] = s;
            }
            next[i][i] += c[n - k + 1];
        }
        mk = std::move(next);
        mpq_class tr = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return QPoly(c);
}

int sign_changes(const std::vector<mpq_class>& c) {
    int changes = 0, last = 0;
    for (const auto& x : c) {
        const int s = sgn(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Interpolates a polynomial of degree <= deg from its values at 0..deg.
QPoly interpolate(const std::function<mpq_class(long)>& f, int deg) {
    QPoly out;
    for (int i = 0; i <= deg; ++i) {
        QPoly basis(1);
        mpq_class denom = 1;
        for (int j = 0; j <= deg; ++j) {
            if (j == i) continue;
            basis = basis * QPoly(std::vector<mpq_class>{mpq_class(-j), mpq_class(1)});
            denom *= i - j;
        }
        basis *= f(i) / denom;
        out += basis;
    }
    return out;
}

// [[S, tK], [-tK, S]] for S = A + A^T, K = A - A^T.
QMat doubled(const QMat& s, const QMat& k, const mpq_class& t) {
    const size_t n = s.size();
    QMat m(2 * n, std::vector<mpq_class>(2 * n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            m[i][j] = m[n + i][n + j] = s[i][j];
            m[i][n + j] = t * k[i][j];
            m[n + i][j] = -t * k[i][j];
        }
    return m;
}

class Sturm {
public:
    explicit Sturm(QPoly p) {
        if (p.degree() > 0) p = QPoly::divmod(p, QPoly::gcd(p, p.derivative())).first;
        seq_.push_back(p);
        if (p.degree() <= 0) return;
        seq_.push_back(p.derivative());
        while (true) {
            QPoly r = QPoly::divmod(seq_[seq_.size() - 2], seq_.back()).second;
            if (r.is_zero()) break;
            seq_.push_back(-r);
        }
    }

    // Whether [lo, hi] contains no root.
    bool root_free(const mpq_class& lo, const mpq_class& hi) const {
        if (seq_[0].eval(lo) == 0 || seq_[0].eval(hi) == 0) return false;
        return variations(lo) == variations(hi);
    }

private:
    int variations(const mpq_class& x) const {
        std::vector<mpq_class> v;
        for (const auto& p : seq_) v.push_back(p.eval(x));
        return sign_changes(v);
    }
    std::vector<QPoly> seq_;
};

long precision_bits() {
    if (const char* env = std::getenv("SCX_PRECISION_BITS")) {
        const long v = std::atol(env);
        if (v >= 32) return v;
    }
    return 128;
}

// Certified rational enclosure [lo, hi] of cot(2 pi omega).
std::pair<mpq_class, mpq_class> cot_enclosure(const mpq_class& omega, long bits) {
    mpfr_t pi_lo, pi_hi, a_lo, a_hi, t;
    mpfr_inits2(bits, pi_lo, pi_hi, a_lo, a_hi, t, static_cast<mpfr_ptr>(nullptr));
    mpq_class two_w = 2 * omega;
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    mpfr_mul_q(a_lo, pi_lo, two_w.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(a_hi, pi_hi, two_w.get_mpq_t(), MPFR_RNDU);
    mpq_class lo, hi;
    // cot decreases on (0, pi)
    mpfr_cot(t, a_hi, MPFR_RNDD);
    mpfr_get_q(lo.get_mpq_t(), t);
    mpfr_cot(t, a_lo, MPFR_RNDU);
    mpfr_get_q(hi.get_mpq_t(), t);
    mpfr_clears(pi_lo, pi_hi, a_lo, a_hi, t, static_cast<mpfr_ptr>(nullptr));
    return {lo, hi};
}

QPoly cyclotomic(long n) {
    std::vector<mpq_class> c(static_cast<size_t>(n) + 1);
    c[0] = -1;
    c[static_cast<size_t>(n)] = 1;
    QPoly p(c);
    for (long d = 1; d < n; ++d)
        if (n % d == 0) p = QPoly::divmod(p, cyclotomic(d)).first;
    return p;
}

SeifertMatrix two_bridge_raw(long p, long q) { return plumbing_seifert(even_continued_fraction(p, q)); }

void check_calibration() {
    static const bool ok = signature_sigma(two_bridge_raw(3, 1)) == -2 && signature_sigma(two_bridge_raw(53, 34)) == 0;
    if (!ok) throw CalibrationError("two-bridge Seifert forms fail the K(3,1) / K(53,34) anchors");
}

}  // namespace

mpq_class det_q(QMat m) {
    const size_t n = m.size();
    mpq_class det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const mpq_class f = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

std::pair<int, int> inertia_q(const QMat& m) {
    const QPoly p = char_poly(m);
    std::vector<mpq_class> c = p.coeffs(), neg = c;
    for (size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    // all roots are real, so Descartes' rule counts them exactly
    return {sign_changes(c), sign_changes(neg)};
}

void require_seifert(const SeifertMatrix& s) {
    for (const auto& row : s.a)
        if (row.size() != s.size()) throw std::invalid_argument("Seifert matrix must be square");
    const QMat a = to_q(s.a);
    const mpq_class d = det_q(combine(a, 1, transpose(a), -1));
    if (d != 1 && d != -1) throw std::invalid_argument("Seifert matrix needs det(A - A^T) = +-1, got " + d.get_str());
}

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    const size_t n = a.size(), m = b.size();
    SeifertMatrix s{IntMatrix(n + m, std::vector<long>(n + m, 0))};
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) s.a[i][j] = a.a[i][j];
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) s.a[n + i][n + j] = b.a[i][j];
    return s;
}

SeifertMatrix mirror_seifert(const SeifertMatrix& s) {
    SeifertMatrix m = s;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = 0; j < s.size(); ++j) m.a[i][j] = -s.a[j][i];
    return m;
}

int signature_sigma(const SeifertMatrix& s) {
    require_seifert(s);
    const QMat a = to_q(s.a);
    auto [pos, neg] = inertia_q(combine(a, 1, transpose(a), 1));
    return pos - neg;
}

QPoly alexander_polynomial(const SeifertMatrix& s) {
    const QMat a = to_q(s.a), at = transpose(a);
    return interpolate([&](long t) { return det_q(combine(a, 1, at, -t)); }, static_cast<int>(s.size()));
}

bool alexander_root_gate(const SeifertMatrix& s, const mpq_class& w) {
    mpq_class omega = w;
    omega.canonicalize();
    if (omega <= 0 || omega >= mpq_class(1, 2)) throw std::domain_error("omega must lie in (0, 1/2)");
    mpq_class e = 2 * omega;  // z = exp(2 pi i e) is a primitive den(e)-th root of unity
    e.canonicalize();
    const long n = e.get_den().get_si();
    return !QPoly::divmod(alexander_polynomial(s), cyclotomic(n)).second.is_zero();
}

int tristram_levine(const SeifertMatrix& s, const mpq_class& w) {
    require_seifert(s);
    mpq_class omega = w;
    omega.canonicalize();
    if (!alexander_root_gate(s, omega))
        throw AlexanderRootError("exp(4 pi i omega) is a root of the Alexander polynomial at omega = " +
                                 omega.get_str());
    if (s.size() == 0) return 0;
    const QMat a = to_q(s.a), at = transpose(a);
    const QMat sym = combine(a, 1, at, 1), skew = combine(a, 1, at, -1);
    // Scaling by 1/(1 - cos 4 pi omega) > 0 leaves S - i t K with t = cot(2 pi omega).
    auto at_t = [&](const mpq_class& t) {
        auto [pos, neg] = inertia_q(doubled(sym, skew, t));
        return (pos - neg) / 2;
    };
    mpq_class e = 4 * omega;
    e.canonicalize();
    if (e == mpq_class(1, 2)) return at_t(1);
    if (e == 1) return at_t(0);
    if (e == mpq_class(3, 2)) return at_t(-1);

    const int deg = 2 * static_cast<int>(s.size());
    const Sturm sturm(interpolate([&](long t) { return det_q(doubled(sym, skew, t)); }, deg));
    for (long bits = precision_bits(); bits <= (1L << 16); bits *= 2) {
        auto [lo, hi] = cot_enclosure(omega, bits);
        if (sturm.root_free(lo, hi)) return at_t(lo);
    }
    throw std::runtime_error("could not certify the Tristram-Levine signature at omega = " + omega.get_str());
}

mpq_class hermitian_det_quarter(const SeifertMatrix& s) {
    const QMat a = to_q(s.a);
    return det_q(combine(a, 2, transpose(a), 2));
}

std::vector<long> even_continued_fraction(long p, long q) {
    if (p < 1 || p % 2 == 0) throw std::invalid_argument("two-bridge K(p, q) needs odd p >= 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("two-bridge K(p, q) needs gcd(p, q) = 1");
    if (p == 1) return {};
    long qq = ((q % p) + p) % p;
    if (qq % 2 != 0) qq -= p;
    std::vector<long> c;
    mpq_class x(p, qq);
    x.canonicalize();
    for (int guard = 0; guard < 4096; ++guard) {
        // nearest even integer
        mpq_class half = x / 2 + mpq_class(1, 2);
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
        const mpz_class ci = 2 * f;
        if (x.get_den() == 1 && mpz_odd_p(x.get_num_mpz_t()))
            throw std::logic_error("odd integer in an even continued fraction");
        c.push_back(ci.get_si());
        const mpq_class rest = mpq_class(ci) - x;
        if (rest == 0) return c;
        x = 1 / rest;
    }
    throw std::logic_error("even continued fraction did not terminate");
}

SeifertMatrix plumbing_seifert(const std::vector<long>& c) {
    const size_t n = c.size();
    SeifertMatrix s{IntMatrix(n, std::vector<long>(n, 0))};
    for (size_t i = 0; i < n; ++i) {
        if (c[i] % 2 != 0) throw std::invalid_argument("plumbing weights must be even");
        s.a[i][i] = c[i] / 2;
        if (i > 0) s.a[i][i - 1] = -1;
    }
    return s;
}

SeifertMatrix two_bridge_seifert(long p, long q) {
    check_calibration();
    return two_bridge_raw(p, q);
}

SeifertMatrix trefoil_sum_seifert(int l, bool right) {
    if (l < 0) throw std::invalid_argument("trefoil count must be non-negative");
    const SeifertMatrix t{{{-1, 1}, {0, -1}}};
    SeifertMatrix s;
    for (int i = 0; i < l; ++i) s = block_sum(s, t);
    return right ? s : mirror_seifert(s);
}

SeifertMatrix kmn_seifert(long m, long n) { return plumbing_seifert({4, 4, -2, -2, -2 * m, 2 * n}); }

SeifertMatrix dlmn_seifert(long l, long m, long n) { return plumbing_seifert({-2 * m, -2 * n, 2 * l, 2}); }

std::pair<long, long> kmn_two_bridge(long m, long n) { return {212 * m * n - 68 * n + 53, 106 * m - 34}; }

std::pair<long, long> dlmn_two_bridge(long l, long m, long n) {
    return {16 * l * m * n - 4 * l - 4 * m * n + 4 * m + 1, -8 * l * n + 2 * n - 2};
}

}  // namespace scx
