#include "scx/scomplex/validate.hpp"

namespace scx {

namespace {

std::string entry_name(const SComplex& c, const char* map, size_t i, size_t j) {
    return std::string(map) + "[" + c.gens[i].name + "<-" + c.gens[j].name + "]";
}

// Checks grading and filtration of one entry of a map of Z-degree `shift`.
void check_entry(const SComplex& c, std::vector<std::string>& out, const std::string& what, const Coef& e,
                 int from_deg, const mpq_class& from_lvl, int to_deg, const mpq_class& to_lvl, int shift) {
    if (e.is_zero()) return;
    if (!ring_contains(c.ring, e)) out.push_back(what + ": entry " + e.str() + " not in " + ring_name(c.ring));
    int m = 0;
    if (!pinned_u_power(from_deg, to_deg, shift, m)) {
        out.push_back(what + ": grading mismatch (degree " + std::to_string(from_deg) + " to " +
                      std::to_string(to_deg) + ", map degree " + std::to_string(shift) + ")");
        return;
    }
    if (c.mode != GradingMode::ZxR) return;
    mpq_class lvl;
    try {
        lvl = to_lvl + m + t_level(e, c.omega);
    } catch (const std::domain_error& ex) {
        out.push_back(what + ": " + ex.what());
        return;
    }
    if (lvl >= from_lvl)
        out.push_back(what + ": does not lower deg_I (" + from_lvl.get_str() + " to " + lvl.get_str() + ")");
}

void check_zero(std::vector<std::string>& out, const std::string& what, const Mat& m) {
    if (!m.is_zero()) out.push_back(what + " != 0");
}

}  // namespace

std::vector<std::string> validate_complex(const SComplex& c) {
    const size_t n = c.size();
    if (c.d.rows() != n || c.d.cols() != n || c.v.rows() != n || c.v.cols() != n || c.delta1.size() != n ||
        c.delta2.size() != n)
        throw DimensionError("matrix dimensions do not match the generator count " + std::to_string(n));
    std::vector<std::string> out;
    if (c.mode == GradingMode::ZxR && (c.omega <= 0 || c.omega >= mpq_class(1, 2)))
        out.push_back("omega must lie in (0, 1/2)");

    const mpq_class zero = 0;
    for (size_t j = 0; j < n; ++j) {
        const auto& g = c.gens[j];
        for (size_t i = 0; i < n; ++i) {
            const auto& h = c.gens[i];
            check_entry(c, out, entry_name(c, "d", i, j), c.d(i, j), g.deg_z, g.deg_i, h.deg_z, h.deg_i, -1);
            check_entry(c, out, entry_name(c, "v", i, j), c.v(i, j), g.deg_z, g.deg_i, h.deg_z, h.deg_i, -2);
        }
        check_entry(c, out, "delta1[" + g.name + "]", c.delta1[j], g.deg_z, g.deg_i, 0, zero, -1);
        check_entry(c, out, "delta2[" + g.name + "]", c.delta2[j], 0, zero, g.deg_z, g.deg_i, -2);
    }

    Mat d1(1, n), d2(n, 1);
    for (size_t i = 0; i < n; ++i) {
        d1(0, i) = c.delta1[i];
        d2(i, 0) = c.delta2[i];
    }
    check_zero(out, "d*d", c.d * c.d);
    check_zero(out, "delta1*d", d1 * c.d);
    check_zero(out, "d*delta2", c.d * d2);
    check_zero(out, "v*d - d*v + delta2*delta1", c.v * c.d - c.d * c.v + d2 * d1);
    return out;
}

void require_valid(const SComplex& c, const std::string& what) {
    auto r = validate_complex(c);
    if (!r.empty()) throw std::invalid_argument(what + " is not a valid S-complex: " + r.front());
}

}  // namespace scx
