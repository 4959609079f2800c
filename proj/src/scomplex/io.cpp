#include "scx/scomplex/io.hpp"

#include "scx/coeff/parse.hpp"

#include <fstream>
#include <map>

namespace scx {

namespace {

using nlohmann::json;

mpq_class parse_rational(const json& j) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (j.is_string()) {
        Coef c = parse_coef(j.get<std::string>());
        if (!c.is_constant()) throw ParseError("expected a rational number, got " + j.get<std::string>());
        return c.constant();
    }
    throw ParseError("expected a rational number");
}

Coef parse_entry(const SComplex& c, const json& coeff, int from, int to, int shift, const std::string& what) {
    if (!coeff.is_string()) throw ParseError(what + ": coefficient must be a string");
    UTerm t = parse_u_term(coeff.get<std::string>());
    if (t.has_u) {
        if (c.mode != GradingMode::ZxR) throw ParseError(what + ": U only allowed in ZxR mode");
        int m = 0;
        if (!pinned_u_power(from, to, shift, m) || m != t.u_exp)
            throw ParseError(what + ": U-power " + std::to_string(t.u_exp) + " disagrees with the gradings");
    }
    return t.c;
}

std::string entry_string(const SComplex& c, const Coef& e, int from, int to, int shift) {
    int m = 0;
    if (c.mode == GradingMode::ZxR && pinned_u_power(from, to, shift, m) && m != 0)
        return "(" + e.str() + ")*U^" + std::to_string(m);
    return e.str();
}

}  // namespace

SComplex complex_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("complex file must be a JSON object");
    Ring ring;
    try {
        ring = parse_ring(j.value("ring", std::string("Q(T)")));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    std::string mode = j.value("grading", std::string("Z4"));
    if (mode != "Z4" && mode != "ZxR") throw ParseError("grading must be Z4 or ZxR");
    GradingMode gm = mode == "Z4" ? GradingMode::Z4 : GradingMode::ZxR;

    std::vector<Generator> gens;
    std::map<std::string, size_t> index;
    for (const auto& g : j.at("generators")) {
        Generator gen;
        gen.name = g.at("name").get<std::string>();
        gen.deg_z = g.at("degZ").get<int>();
        if (gm == GradingMode::ZxR) gen.deg_i = parse_rational(g.at("degI"));
        if (index.count(gen.name)) throw ParseError("duplicate generator " + gen.name);
        index[gen.name] = gens.size();
        gens.push_back(gen);
    }
    SComplex c = SComplex::with_generators(ring, gm, gens);
    if (j.contains("omega")) c.omega = parse_rational(j.at("omega"));

    auto gen_index = [&](const json& x) -> size_t {
        if (x.is_number_integer()) {
            long i = x.get<long>();
            if (i < 0 || static_cast<size_t>(i) >= c.size()) throw ParseError("generator index out of range");
            return static_cast<size_t>(i);
        }
        auto it = index.find(x.get<std::string>());
        if (it == index.end()) throw ParseError("unknown generator " + x.get<std::string>());
        return it->second;
    };
    auto matrix = [&](const char* key, Mat& m, int shift) {
        if (!j.contains(key)) return;
        for (const auto& t : j.at(key)) {
            if (!t.is_array() || t.size() != 3) throw ParseError(std::string(key) + ": entries are [row, col, coeff]");
            size_t r = gen_index(t[0]), col = gen_index(t[1]);
            m(r, col) += parse_entry(c, t[2], c.gens[col].deg_z, c.gens[r].deg_z, shift, key);
        }
    };
    matrix("d", c.d, -1);
    matrix("v", c.v, -2);
    if (j.contains("delta1"))
        for (const auto& t : j.at("delta1")) {
            size_t col = gen_index(t.at(0));
            c.delta1[col] += parse_entry(c, t.at(1), c.gens[col].deg_z, 0, -1, "delta1");
        }
    if (j.contains("delta2"))
        for (const auto& t : j.at("delta2")) {
            size_t r = gen_index(t.at(0));
            c.delta2[r] += parse_entry(c, t.at(1), 0, c.gens[r].deg_z, -2, "delta2");
        }
    return c;
}

json complex_to_json(const SComplex& c) {
    json j;
    j["ring"] = ring_name(c.ring);
    j["grading"] = c.mode == GradingMode::Z4 ? "Z4" : "ZxR";
    if (c.mode == GradingMode::ZxR) j["omega"] = c.omega.get_str();
    j["generators"] = json::array();
    for (const auto& g : c.gens) {
        json x = {{"name", g.name}, {"degZ", g.deg_z}};
        if (c.mode == GradingMode::ZxR) x["degI"] = g.deg_i.get_str();
        j["generators"].push_back(x);
    }
    auto matrix = [&](const Mat& m, int shift) {
        json a = json::array();
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t col = 0; col < m.cols(); ++col)
                if (!m(r, col).is_zero())
                    a.push_back({c.gens[r].name, c.gens[col].name,
                                 entry_string(c, m(r, col), c.gens[col].deg_z, c.gens[r].deg_z, shift)});
        return a;
    };
    j["d"] = matrix(c.d, -1);
    j["v"] = matrix(c.v, -2);
    j["delta1"] = json::array();
    j["delta2"] = json::array();
    for (size_t i = 0; i < c.size(); ++i) {
        if (!c.delta1[i].is_zero())
            j["delta1"].push_back({c.gens[i].name, entry_string(c, c.delta1[i], c.gens[i].deg_z, 0, -1)});
        if (!c.delta2[i].is_zero())
            j["delta2"].push_back({c.gens[i].name, entry_string(c, c.delta2[i], 0, c.gens[i].deg_z, -2)});
    }
    return j;
}

SComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    try {
        return complex_from_json(j);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_complex(const SComplex& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << complex_to_json(c).dump(2) << "\n";
}

}  // namespace scx
