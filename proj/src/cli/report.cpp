#include "scx/cli/report.hpp"

#include "scx/coeff/parse.hpp"
#include "scx/concordance/concordance.hpp"
#include "scx/filtered/filtered.hpp"
#include "scx/topology/descriptor.hpp"
#include "scx/topology/reference.hpp"
#include "scx/topology/seifert.hpp"

#include <algorithm>
#include <sstream>

namespace scx {

using nlohmann::json;

namespace {

json computed(json v) { return {{"value", std::move(v)}, {"provenance", "computed"}}; }
json reference(json v) { return {{"value", std::move(v)}, {"provenance", "reference-data"}}; }

json ext_json(const ExtQ& x) { return x.str(); }

std::string bound_str(const Bound& s) { return s ? s->get_str() : "-inf"; }

mpq_class rat(long a, long b) {
    mpq_class x(a, b);
    x.canonicalize();
    return x;
}

json invariants_json(const InvariantReport& r) {
    json j = report_to_json(r);
    for (const char* k : {"h", "n0", "s_tilde", "s_sharp_plus", "s_sharp_minus", "s_sharp", "epsilon_tilde"})
        j[k] = computed(j[k]);
    j["witness"]["k"] = computed(j["witness"]["k"]);
    return j;
}

json filtered_json(const SComplex& c) {
    json g = json::object();
    for (int k = -3; k <= 3; ++k) g[std::to_string(k)] = computed(ext_json(gamma(c, k)));
    json r = json::array();
    for (const mpq_class& s : {rat(0, 1), rat(-1, 53), rat(-1, 12), rat(-8, 53), rat(-1, 4), rat(-1, 2), rat(-1, 1)})
        r.push_back({{"s", s.get_str()}, {"r", computed(ext_json(r_invariant(c, s)))}});
    json n = json::array();
    std::vector<Bound> bs = {std::nullopt};
    for (const mpq_class& s : {rat(-1, 53), rat(-1, 12), rat(-8, 53), rat(-20, 53), rat(-1, 2), rat(-1, 1)})
        bs.emplace_back(s);
    for (int k = -2; k <= 2; ++k)
        for (const Bound& s : bs) n.push_back({{"k", k}, {"s", bound_str(s)}, {"N", computed(ext_json(n_value(c, k, s)))}});
    return {{"gamma", g}, {"r", r}, {"N", n}};
}

void add_references(const KnotDescriptor& d, json& refs, json& warnings) {
    long p = 0, q = 0;
    if (d.kind == KnotDescriptor::Kind::TwoBridge) {
        p = d.params[0];
        q = d.params[1];
    } else if (d.kind == KnotDescriptor::Kind::Figure1028 || d.kind == KnotDescriptor::Kind::FigureRaw1028 ||
               d.kind == KnotDescriptor::Kind::Local1028) {
        p = 53;
        q = 34;
    }
    for (const auto& row : two_bridge_reference()) {
        if (row.p != p || (row.q - q) % row.p != 0) continue;
        refs.push_back({{"table", "two-bridge Gamma and r'"},
                        {"knot", row.name.empty() ? "K(" + std::to_string(row.p) + "," + std::to_string(row.q) + ")"
                                                  : row.name},
                        {"gamma0", reference(row.gamma0.get_str())},
                        {"gamma0_above_1/8", row.gamma_above_eighth},
                        {"r_prime_mirror", reference(row.r_mirror.get_str())},
                        {"caveat", two_bridge_reference_caveat()}});
        if (row.p == 53)
            warnings.push_back("contingent: the table's r' = " + row.r_mirror.get_str() +
                               " for 10*_28 is reference data; the computed r_0 of the figure complex is 20/53 and "
                               "of its dual is inf (see the figure suite)");
    }
    if (d.kind == KnotDescriptor::Kind::TrefoilSum && d.params[0] == 1 && d.right)
        for (const auto& row : trefoil_gamma_reference())
            refs.push_back({{"table", "Gamma^omega(1) of the right-handed trefoil"},
                            {"omega", row.omega.get_str()},
                            {"gamma1", reference(row.gamma1.get_str())}});
}

json signatures_json(const SeifertMatrix& s, const mpq_class& omega) {
    json samples = json::array();
    std::vector<mpq_class> ws = {rat(1, 8), rat(1, 6), rat(1, 4), rat(1, 3), rat(3, 8)};
    if (std::find(ws.begin(), ws.end(), omega) == ws.end()) ws.push_back(omega);
    std::sort(ws.begin(), ws.end());
    for (const mpq_class& w : ws) {
        json e = {{"omega", w.get_str()}};
        if (alexander_root_gate(s, w))
            e["sigma_omega"] = computed(tristram_levine(s, w));
        else
            e["alexander_root"] = true;
        samples.push_back(e);
    }
    return {{"sigma", computed(signature_sigma(s))},
            {"alexander", computed(alexander_polynomial(s).str())},
            {"samples", samples}};
}

std::string value_str(const json& v) {
    if (v.is_object() && v.contains("value")) {
        const json& x = v["value"];
        std::string s = x.is_string() ? x.get<std::string>() : x.dump();
        if (v["provenance"] == "reference-data") s += " [reference]";
        return s;
    }
    return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const json::exception*>(&e)) return kExitUsage;
    if (dynamic_cast<const CalibrationError*>(&e)) return kExitInternal;
    if (dynamic_cast<const std::domain_error*>(&e) || dynamic_cast<const std::invalid_argument*>(&e))
        return kExitRefused;
    return kExitInternal;
}

mpq_class parse_omega(const std::string& s) {
    mpq_class w;
    try {
        w = mpq_class(s);
    } catch (const std::invalid_argument&) {
        throw ParseError("omega: expected p/q, got '" + s + "'");
    }
    if (w.get_den() == 0) throw ParseError("omega: zero denominator");
    w.canonicalize();
    return w;
}

json invariants_report(const std::string& descriptor, const ReportOptions& opt) {
    const KnotDescriptor d = parse_descriptor(descriptor);
    json warnings = json::array(), refs = json::array();
    json out;
    out["input"] = {{"descriptor", descriptor},
                    {"normalized", d.str()},
                    {"ring", ring_name(opt.ring)},
                    {"omega", opt.omega.get_str()},
                    {"filtered", opt.filtered}};
    if (opt.omega <= 0 || opt.omega >= mpq_class(1, 2)) throw std::domain_error("omega must lie in (0, 1/2)");

    try {
        const SComplex c = build_complex(d, opt.ring, false);
        out["invariants"] = invariants_json(compute_invariants(c));
    } catch (const UnsupportedDescriptor& e) {
        out["invariants"] = nullptr;
        warnings.push_back(std::string("no S-complex model: ") + e.what());
    }

    if (opt.filtered) {
        const SComplex c = build_complex(d, Ring::QT, true);
        SComplex w = c;
        w.omega = opt.omega;
        out["filtered"] = filtered_json(w);
    }

    try {
        out["signatures"] = signatures_json(seifert_for(d), opt.omega);
    } catch (const UnsupportedDescriptor& e) {
        out["signatures"] = nullptr;
        warnings.push_back(std::string("no Seifert matrix: ") + e.what());
    }

    add_references(d, refs, warnings);
    if (d.kind == KnotDescriptor::Kind::FigureRaw1028)
        warnings.push_back("the raw figure transcription omits the v arrow and is not a valid I-graded complex");
    out["reference"] = refs;
    out["warnings"] = warnings;
    return out;
}

std::string report_text(const json& r) {
    std::ostringstream os;
    os << "knot " << r["input"]["normalized"].get<std::string>() << " over " << r["input"]["ring"].get<std::string>()
       << ", omega = " << r["input"]["omega"].get<std::string>() << "\n";
    if (!r["invariants"].is_null()) {
        const json& i = r["invariants"];
        os << "  h = " << value_str(i["h"]) << ", s~ = " << value_str(i["s_tilde"]) << ", s#+ = "
           << value_str(i["s_sharp_plus"]) << ", s#- = " << value_str(i["s_sharp_minus"]) << ", s# = "
           << value_str(i["s_sharp"]) << "\n";
        os << "  epsilon~ = " << value_str(i["epsilon_tilde"]) << ", type " << i["type"].get<std::string>()
           << ", n0 = " << value_str(i["n0"]) << "\n";
    }
    if (r.contains("filtered")) {
        const json& f = r["filtered"];
        os << "  Gamma(k):";
        for (int k = -3; k <= 3; ++k) os << " " << k << ":" << value_str(f["gamma"][std::to_string(k)]);
        os << "\n  r_s:";
        for (const auto& e : f["r"]) os << " " << e["s"].get<std::string>() << ":" << value_str(e["r"]);
        os << "\n  N(k, s):\n";
        int last = 99;
        for (const auto& e : f["N"]) {
            if (e["k"].get<int>() != last) {
                if (last != 99) os << "\n";
                last = e["k"].get<int>();
                os << "    k = " << last << ":";
            }
            os << " " << e["s"].get<std::string>() << "->" << value_str(e["N"]);
        }
        os << "\n";
    }
    if (!r["signatures"].is_null()) {
        const json& s = r["signatures"];
        os << "  sigma = " << value_str(s["sigma"]) << ", Alexander " << value_str(s["alexander"]) << "\n  sigma_w:";
        for (const auto& e : s["samples"])
            os << " " << e["omega"].get<std::string>() << ":"
               << (e.contains("alexander_root") ? std::string("root") : value_str(e["sigma_omega"]));
        os << "\n";
    }
    for (const auto& ref : r["reference"]) {
        os << "  reference " << ref["table"].get<std::string>() << ":";
        for (auto it = ref.begin(); it != ref.end(); ++it)
            if (it.key() != "table" && it.key() != "caveat") os << " " << it.key() << " = " << value_str(it.value());
        os << "\n";
    }
    for (const auto& w : r["warnings"]) os << "  warning: " << w.get<std::string>() << "\n";
    return os.str();
}

CobordismData cobordism_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("cobordism data must be a JSON object");
    if (j.contains("sample")) {
        const std::string s = j.at("sample").get<std::string>();
        if (s == "crossing-change") return crossing_change_data(j.value("sigma_start", 0), j.value("sigma_end", 0));
        if (s == "two-handle") return two_handle_trace_data();
        if (s == "immersed")
            return immersed_data(j.value("s_plus", 0), j.value("s_minus", 0), j.value("genus", 0),
                                 j.value("sigma_start", 0), j.value("sigma_end", 0));
        throw ParseError("unknown cobordism sample '" + s + "'");
    }
    CobordismData d;
    d.S = j.value("S", std::vector<long>{});
    d.n = j.value("n", static_cast<int>(d.S.size()));
    d.c = j.value("c", std::vector<long>(d.S.size(), 0));
    d.genus = j.value("genus", 0);
    d.s_plus = j.value("s_plus", 0);
    d.s_minus = j.value("s_minus", 0);
    d.chi_W = j.value("chi_W", d.n);
    d.sigma_W = j.value("sigma_W", -d.n);
    d.chi_S = j.value("chi_S", 0);
    d.sigma_start = j.value("sigma_start", 0);
    d.sigma_end = j.value("sigma_end", 0);
    require_cobordism(d);
    return d;
}

json cobordism_report(const CobordismData& d, const mpq_class& omega) {
    if (omega <= 0 || omega >= mpq_class(1, 2)) throw std::domain_error("omega must lie in (0, 1/2)");
    const MinimalReducibles m = minimal_reducibles(d, omega);
    return {{"input", {{"n", d.n}, {"S", d.S}, {"c", d.c}, {"omega", omega.get_str()}}},
            {"kappa_min", computed(m.kappa_min.get_str())},
            {"height", computed(m.height)},
            {"index", computed(m.index)},
            {"eta", computed(m.eta.str())},
            {"strong", m.strong},
            {"minimizers", computed(m.minimizers)}};
}

std::string cobordism_text(const json& r) {
    std::ostringstream os;
    os << "kappa_min = " << value_str(r["kappa_min"]) << ", height = " << value_str(r["height"])
       << ", index = " << value_str(r["index"]) << "\n";
    os << "eta = " << value_str(r["eta"]) << (r["strong"].get<bool>() ? " (strong)" : "") << "\n";
    os << "minimizers: " << r["minimizers"]["value"].dump() << "\n";
    return os.str();
}

}  // namespace scx
