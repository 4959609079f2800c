#pragma once

#include "scx/coeff/ring.hpp"
#include "scx/scomplex/scomplex.hpp"
#include "scx/topology/seifert.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace scx {

struct UnsupportedDescriptor : std::domain_error {
    using std::domain_error::domain_error;
};

struct KnotDescriptor {
    enum class Kind { Unknot, TwoBridge, TrefoilSum, Mirror, Sum, Seifert, Figure1028, FigureRaw1028, Local1028, Kmn, Dlmn, Cr, OmegaBlock };

    Kind kind = Kind::Unknot;
    std::vector<long> params;  // (p, q), (l), (m, n), (l, m, n), (k)
    bool right = true;         // trefoil handedness
    mpq_class r = 0;           // Cr level
    SeifertMatrix seifert;
    std::vector<KnotDescriptor> children;

    std::string str() const;
};

// Grammar: unknot | twobridge:p/q | trefoil:+l | trefoil:-l | mirror(D) |
// sum(D,D,...) | seifert:[[..],..] | builtin:10_28* | builtin:10_28_star_figure |
// builtin:10_28_star_figure_raw | builtin:10_28_star_local | Kmn:m,n |
// Dlmn:l,m,n | Cr:p/q | omega-block:k. Throws ParseError.
KnotDescriptor parse_descriptor(const std::string& text);

// Seifert matrix of a classical knot descriptor; UnsupportedDescriptor otherwise.
SeifertMatrix seifert_for(const KnotDescriptor& d);

// Whether the descriptor names an I-graded complex (10_28 builtins, Cr and
// their mirrors and sums, or the unknot).
bool has_filtered_model(const KnotDescriptor& d);

// Unfiltered: two-bridge families give the local model at h = -sigma/2,
// trefoil sums tensor powers of the trefoil models, mirror the dual and sum
// the tensor product; I-graded models forget their levels. Filtered: ZxR
// complexes over Q(T) base-changed to `ring`.
SComplex build_complex(const KnotDescriptor& d, Ring ring, bool filtered);

}  // namespace scx
