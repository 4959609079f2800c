#pragma once

#include "scx/coeff/qpoly.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace scx {

using IntMatrix = std::vector<std::vector<long>>;

// Integer Seifert matrix A with det(A - A^T) = +-1.
struct SeifertMatrix {
    IntMatrix a;

    size_t size() const { return a.size(); }
    static SeifertMatrix empty() { return {}; }
};

struct AlexanderRootError : std::domain_error {
    using std::domain_error::domain_error;
};

struct CalibrationError : std::logic_error {
    using std::logic_error::logic_error;
};

// Throws std::invalid_argument unless A is square with det(A - A^T) = +-1.
void require_seifert(const SeifertMatrix& s);

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b);
// Seifert matrix of the mirror: -A^T.
SeifertMatrix mirror_seifert(const SeifertMatrix& s);

int signature_sigma(const SeifertMatrix& s);

// Delta(t) = det(A - t A^T).
QPoly alexander_polynomial(const SeifertMatrix& s);

// Whether e^{4 pi i omega} is not a root of Delta (exact cyclotomic test).
bool alexander_root_gate(const SeifertMatrix& s, const mpq_class& omega);

// Tristram-Levine signature for omega in (0, 1/2); throws AlexanderRootError
// when the gate fails. The precision of the interval path starts at
// SCX_PRECISION_BITS (default 128) and doubles until the sign is certified.
int tristram_levine(const SeifertMatrix& s, const mpq_class& omega);

// det of the Hermitian matrix (1 - z) A + (1 - z^-1) A^T at omega = 1/4 (z = -1).
mpq_class hermitian_det_quarter(const SeifertMatrix& s);

// Exact symmetric-matrix helpers over Q.
mpq_class det_q(std::vector<std::vector<mpq_class>> m);
// (positive, negative) eigenvalue counts of a symmetric rational matrix.
std::pair<int, int> inertia_q(const std::vector<std::vector<mpq_class>>& m);

// Continued fraction p/q = c1 - 1/(c2 - 1/(...)) with every c_i even, taken
// for the representative q' = q mod p that is even with |q'| < p.
std::vector<long> even_continued_fraction(long p, long q);

// Plumbing Seifert matrix: diagonal c_i / 2, subdiagonal -1.
SeifertMatrix plumbing_seifert(const std::vector<long>& c);

// K(p, q) with the convention that K(3, 1) is the right-handed trefoil
// (signature -2); checked against K(53, 34) with signature 0.
SeifertMatrix two_bridge_seifert(long p, long q);

// [[-1, 1], [0, -1]] per right-handed summand; left-handed sums are mirrors.
SeifertMatrix trefoil_sum_seifert(int l, bool right);
SeifertMatrix kmn_seifert(long m, long n);
SeifertMatrix dlmn_seifert(long l, long m, long n);

// (p, q) of K_{m,n} and D_{l,m,n}.
std::pair<long, long> kmn_two_bridge(long m, long n);
std::pair<long, long> dlmn_two_bridge(long l, long m, long n);

}  // namespace scx
