#include "scx/cli/report.hpp"
#include "scx/coeff/parse.hpp"
#include "scx/equivariant/equivariant.hpp"
#include "scx/scomplex/io.hpp"
#include "scx/scomplex/ops.hpp"
#include "scx/scomplex/validate.hpp"
#include "scx/suites/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace scx;
using nlohmann::json;

namespace {

struct Args {
    std::string format = "json";

    std::string descriptor;
    std::string ring = "localT1";
    std::string omega = "1/4";
    bool filtered = false;

    std::vector<std::string> files;
    std::string output;

    std::string data;

    std::string suite = "all";
    std::uint64_t seed = 7;
    int cases = 0;
    unsigned threads = 0;
};

void emit(const Args& a, const json& j, const std::string& text) {
    if (a.format == "text")
        std::cout << text;
    else
        std::cout << j.dump(2) << "\n";
}

int cmd_invariants(const Args& a) {
    ReportOptions opt;
    opt.ring = [&] {
        try {
            return parse_ring(a.ring);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }();
    opt.omega = parse_omega(a.omega);
    opt.filtered = a.filtered;
    const json r = invariants_report(a.descriptor, opt);
    emit(a, r, report_text(r));
    return kExitOk;
}

void write_complex(const Args& a, const SComplex& c) {
    if (a.output.empty())
        std::cout << complex_to_json(c).dump(2) << "\n";
    else
        save_complex(c, a.output);
}

int cmd_complex(const std::string& sub, const Args& a) {
    const size_t need = sub == "tensor" ? 2 : 1;
    if (a.files.size() != need)
        throw ParseError(sub + " takes " + std::to_string(need) + " complex file" + (need > 1 ? "s" : ""));
    const SComplex c = load_complex(a.files[0]);
    if (sub == "validate") {
        const auto v = validate_complex(c);
        json j = {{"file", a.files[0]}, {"valid", v.empty()}, {"violations", v}};
        std::string text = v.empty() ? "valid\n" : "invalid\n";
        for (const auto& s : v) text += "  " + s + "\n";
        emit(a, j, text);
        return v.empty() ? kExitOk : kExitRefused;
    }
    require_valid(c, a.files[0]);
    if (sub == "froyshov") {
        const int h = froyshov(c);
        emit(a, {{"file", a.files[0]}, {"h", {{"value", h}, {"provenance", "computed"}}}},
             "h = " + std::to_string(h) + "\n");
        return kExitOk;
    }
    if (sub == "dual") {
        write_complex(a, dual(c));
        return kExitOk;
    }
    const SComplex c2 = load_complex(a.files[1]);
    require_valid(c2, a.files[1]);
    write_complex(a, tensor(c, c2));
    return kExitOk;
}

int cmd_cobordism(const Args& a) {
    std::ifstream in(a.data);
    if (!in) throw ParseError("cannot open " + a.data);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(a.data + ": " + e.what());
    }
    const json r = cobordism_report(cobordism_from_json(j), parse_omega(a.omega));
    emit(a, r, cobordism_text(r));
    return kExitOk;
}

int cmd_selftest(const Args& a) {
    if (a.suite != "all" && !is_suite(a.suite)) throw ParseError("unknown suite '" + a.suite + "'");
    const auto rs = run_suites(a.suite, {a.seed, a.cases, a.threads});
    emit(a, summary_json(rs), summary_text(rs));
    for (const auto& r : rs)
        if (!r.passed()) return kExitInternal;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"S-complex and knot invariant calculator"};
    app.require_subcommand(1);
    Args a;
    auto format = [&](CLI::App* c) {
        c->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    auto* inv = app.add_subcommand("invariants", "Invariant report for a knot descriptor");
    inv->add_option("descriptor", a.descriptor, "Knot descriptor, e.g. twobridge:3/1")->required();
    inv->add_option("--ring", a.ring, "Z[T], Q(T) or localT1");
    inv->add_option("--omega", a.omega, "Holonomy parameter p/q");
    inv->add_flag("--filtered", a.filtered, "Include the filtered table");
    format(inv);

    auto* cx = app.add_subcommand("complex", "Operations on complex files");
    cx->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> subs;
    for (const char* s : {"validate", "tensor", "dual", "froyshov"}) {
        auto* sc = cx->add_subcommand(s);
        sc->add_option("files", a.files, "Complex files")->required()->check(CLI::ExistingFile);
        if (std::string(s) == "tensor" || std::string(s) == "dual") sc->add_option("-o,--output", a.output, "Output file");
        format(sc);
        subs.emplace_back(s, sc);
    }

    auto* cob = app.add_subcommand("cobordism", "Minimal reducibles of cobordism data");
    cob->add_option("data", a.data, "Cobordism data file")->required();
    cob->add_option("--omega", a.omega, "Holonomy parameter p/q");
    format(cob);

    auto* st = app.add_subcommand("selftest", "Run the acceptance suites");
    st->add_option("--suite", a.suite, "Suite name or all");
    st->add_option("--seed", a.seed, "Random seed");
    st->add_option("--cases", a.cases, "Case count for randomized suites");
    st->add_option("--threads", a.threads, "Worker threads (0: all cores)");
    format(st);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (inv->parsed()) return cmd_invariants(a);
        if (cob->parsed()) return cmd_cobordism(a);
        if (st->parsed()) return cmd_selftest(a);
        for (const auto& [name, sc] : subs)
            if (sc->parsed()) return cmd_complex(name, a);
    } catch (const std::exception& e) {
        const int rc = exit_code_for(e);
        std::cerr << "error: " << e.what() << "\n";
        return rc;
    }
    return kExitUsage;
}
