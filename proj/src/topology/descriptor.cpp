#include "scx/topology/descriptor.hpp"

#include "scx/coeff/parse.hpp"
#include "scx/scomplex/models.hpp"
#include "scx/scomplex/ops.hpp"

#include <json.hpp>

#include <cctype>

namespace scx {

namespace {

using Kind = KnotDescriptor::Kind;

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

long parse_long(const std::string& s, const std::string& what) {
    const std::string t = trim(s);
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(t, &pos);
    } catch (const std::exception&) {
        throw ParseError(what + ": expected an integer, got '" + t + "'");
    }
    if (pos != t.size()) throw ParseError(what + ": expected an integer, got '" + t + "'");
    return v;
}

std::vector<long> parse_list(const std::string& s, char sep, size_t count, const std::string& what) {
    std::vector<long> out;
    size_t start = 0;
    while (true) {
        const size_t at = s.find(sep, start);
        out.push_back(parse_long(s.substr(start, at == std::string::npos ? std::string::npos : at - start), what));
        if (at == std::string::npos) break;
        start = at + 1;
    }
    if (out.size() != count) throw ParseError(what + ": expected " + std::to_string(count) + " values");
    return out;
}

// Splits at top-level commas.
std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[') ++depth;
        if (s[i] == ')' || s[i] == ']') --depth;
        if (depth < 0) throw ParseError("unbalanced brackets in '" + s + "'");
        if (s[i] == ',' && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    if (depth != 0) throw ParseError("unbalanced brackets in '" + s + "'");
    out.push_back(s.substr(start));
    // a bare integer continues the parameter list of the previous item (Kmn:1,0)
    std::vector<std::string> merged;
    for (const auto& a : out) {
        const std::string t = trim(a);
        const bool number = !t.empty() && t.find_first_not_of("+-0123456789") == std::string::npos;
        if (number && !merged.empty()) merged.back() += "," + a;
        else merged.push_back(a);
    }
    return merged;
}

KnotDescriptor make(Kind k, std::vector<long> params = {}) {
    KnotDescriptor d;
    d.kind = k;
    d.params = std::move(params);
    return d;
}

std::string join(const std::vector<long>& v, char sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return s;
}

bool is_1028(Kind k) { return k == Kind::Figure1028 || k == Kind::FigureRaw1028 || k == Kind::Local1028; }

SComplex forget_levels(SComplex c) {
    c.mode = GradingMode::Z4;
    for (auto& g : c.gens) g.deg_i = 0;
    return c;
}

SComplex tensor_all(const std::vector<KnotDescriptor>& ds, Ring ring, bool filtered) {
    SComplex t = build_complex(ds.front(), ring, filtered);
    for (size_t i = 1; i < ds.size(); ++i) t = tensor(t, build_complex(ds[i], ring, filtered));
    return t;
}

SComplex from_sigma(int sigma, Ring ring) {
    if (sigma % 2 != 0) throw std::logic_error("odd knot signature");
    return two_bridge_model(-sigma / 2, ring);
}

}  // namespace

std::string KnotDescriptor::str() const {
    switch (kind) {
        case Kind::Unknot: return "unknot";
        case Kind::TwoBridge: return "twobridge:" + join(params, '/');
        case Kind::TrefoilSum: return std::string("trefoil:") + (right ? "+" : "-") + std::to_string(params[0]);
        case Kind::Mirror: return "mirror(" + children[0].str() + ")";
        case Kind::Sum: {
            std::string s = "sum(";
            for (size_t i = 0; i < children.size(); ++i) s += (i ? "," : "") + children[i].str();
            return s + ")";
        }
        case Kind::Seifert: return "seifert:" + nlohmann::json(seifert.a).dump();
        case Kind::Figure1028: return "builtin:10_28_star_figure";
        case Kind::FigureRaw1028: return "builtin:10_28_star_figure_raw";
        case Kind::Local1028: return "builtin:10_28_star_local";
        case Kind::Kmn: return "Kmn:" + join(params, ',');
        case Kind::Dlmn: return "Dlmn:" + join(params, ',');
        case Kind::Cr: return "Cr:" + r.get_str();
        case Kind::OmegaBlock: return "omega-block:" + std::to_string(params[0]);
    }
    return "?";
}

KnotDescriptor parse_descriptor(const std::string& text) {
    const std::string s = trim(text);
    if (s.empty()) throw ParseError("empty knot descriptor");
    if (s == "unknot") return make(Kind::Unknot);

    for (const char* head : {"mirror(", "sum("}) {
        const std::string h = head;
        if (s.rfind(h, 0) != 0) continue;
        if (s.back() != ')') throw ParseError("missing ')' in '" + s + "'");
        const std::string inner = s.substr(h.size(), s.size() - h.size() - 1);
        KnotDescriptor d = make(h == "mirror(" ? Kind::Mirror : Kind::Sum);
        const auto args = d.kind == Kind::Mirror ? std::vector<std::string>{inner} : split_args(inner);
        for (const auto& a : args) d.children.push_back(parse_descriptor(a));
        return d;
    }

    const size_t colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("unknown knot descriptor '" + s + "'");
    const std::string key = s.substr(0, colon), arg = trim(s.substr(colon + 1));
    if (key == "twobridge") {
        KnotDescriptor d = make(Kind::TwoBridge, parse_list(arg, '/', 2, "twobridge"));
        if (d.params[0] < 1 || d.params[0] % 2 == 0) throw ParseError("twobridge: p must be odd and positive");
        return d;
    }
    if (key == "trefoil") {
        if (arg.empty() || (arg[0] != '+' && arg[0] != '-')) throw ParseError("trefoil: expected +l or -l");
        KnotDescriptor d = make(Kind::TrefoilSum, {parse_long(arg.substr(1), "trefoil")});
        if (d.params[0] < 0) throw ParseError("trefoil: count must be non-negative");
        d.right = arg[0] == '+';
        return d;
    }
    if (key == "seifert") {
        KnotDescriptor d = make(Kind::Seifert);
        try {
            d.seifert.a = nlohmann::json::parse(arg).get<IntMatrix>();
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("seifert: ") + e.what());
        }
        return d;
    }
    if (key == "builtin") {
        if (arg == "10_28*" || arg == "10_28_star_figure") return make(Kind::Figure1028);
        if (arg == "10_28_star_figure_raw") return make(Kind::FigureRaw1028);
        if (arg == "10_28_star_local") return make(Kind::Local1028);
        throw ParseError("unknown builtin '" + arg + "'");
    }
    if (key == "Kmn") return make(Kind::Kmn, parse_list(arg, ',', 2, "Kmn"));
    if (key == "Dlmn") return make(Kind::Dlmn, parse_list(arg, ',', 3, "Dlmn"));
    if (key == "Cr") {
        KnotDescriptor d = make(Kind::Cr);
        try {
            d.r = mpq_class(arg);
        } catch (const std::invalid_argument&) {
            throw ParseError("Cr: expected a rational, got '" + arg + "'");
        }
        d.r.canonicalize();
        if (d.r <= 0) throw ParseError("Cr: level must be positive");
        return d;
    }
    if (key == "omega-block") return make(Kind::OmegaBlock, {parse_long(arg, "omega-block")});
    throw ParseError("unknown knot descriptor '" + s + "'");
}

SeifertMatrix seifert_for(const KnotDescriptor& d) {
    switch (d.kind) {
        case Kind::Unknot: return SeifertMatrix::empty();
        case Kind::TwoBridge: return two_bridge_seifert(d.params[0], d.params[1]);
        case Kind::TrefoilSum: return trefoil_sum_seifert(static_cast<int>(d.params[0]), d.right);
        case Kind::Mirror: return mirror_seifert(seifert_for(d.children[0]));
        case Kind::Sum: {
            SeifertMatrix s;
            for (const auto& c : d.children) s = block_sum(s, seifert_for(c));
            return s;
        }
        case Kind::Seifert: require_seifert(d.seifert); return d.seifert;
        case Kind::Figure1028:
        case Kind::FigureRaw1028:
        case Kind::Local1028: return two_bridge_seifert(53, 34);
        case Kind::Kmn: return kmn_seifert(d.params[0], d.params[1]);
        case Kind::Dlmn: return dlmn_seifert(d.params[0], d.params[1], d.params[2]);
        case Kind::Cr:
        case Kind::OmegaBlock: break;
    }
    throw UnsupportedDescriptor("no Seifert matrix for '" + d.str() + "'");
}

bool has_filtered_model(const KnotDescriptor& d) {
    switch (d.kind) {
        case Kind::Unknot:
        case Kind::Cr: return true;
        case Kind::Mirror:
        case Kind::Sum:
            for (const auto& c : d.children)
                if (!has_filtered_model(c)) return false;
            return true;
        default: return is_1028(d.kind);
    }
}

SComplex build_complex(const KnotDescriptor& d, Ring ring, bool filtered) {
    if (filtered) {
        if (!has_filtered_model(d)) throw UnsupportedDescriptor("no I-graded model for '" + d.str() + "'");
        SComplex c;
        switch (d.kind) {
            case Kind::Unknot: c = SComplex::trivial(Ring::QT, GradingMode::ZxR); break;
            case Kind::Cr: c = c_r_model(d.r); break;
            case Kind::Figure1028: c = figure_10_28_model(true); break;
            case Kind::FigureRaw1028: c = figure_10_28_model(false); break;
            case Kind::Local1028: c = local_10_28_model(); break;
            case Kind::Mirror: c = dual(build_complex(d.children[0], Ring::QT, true)); break;
            case Kind::Sum: c = tensor_all(d.children, Ring::QT, true); break;
            default: throw std::logic_error("unreachable");
        }
        return ring == Ring::QT ? c : base_change(c, ring);
    }
    switch (d.kind) {
        case Kind::Unknot: return SComplex::trivial(ring);
        case Kind::TwoBridge:
        case Kind::Kmn:
        case Kind::Dlmn: return from_sigma(signature_sigma(seifert_for(d)), ring);
        case Kind::TrefoilSum: {
            SComplex t = SComplex::trivial(ring);
            const SComplex one = d.right ? right_trefoil(ring) : left_trefoil(ring);
            for (long i = 0; i < d.params[0]; ++i) t = i == 0 ? one : tensor(t, one);
            return t;
        }
        case Kind::Mirror: return dual(build_complex(d.children[0], ring, false));
        case Kind::Sum: return tensor_all(d.children, ring, false);
        case Kind::OmegaBlock: return omega_block(static_cast<int>(d.params[0]), ring);
        case Kind::Seifert: break;
        case Kind::Cr:
        case Kind::Figure1028:
        case Kind::FigureRaw1028:
        case Kind::Local1028: {
            SComplex c = forget_levels(build_complex(d, Ring::QT, true));
            return ring == Ring::QT ? c : base_change(c, ring);
        }
    }
    throw UnsupportedDescriptor("no S-complex model for '" + d.str() + "'");
}

}  // namespace scx
