#include "scx/suites/suites.hpp"

#include "detail.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace scx {

void Checker::check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
}

void parallel_cases(int count, unsigned threads, Checker& out, const std::function<void(int, Checker&)>& body) {
    if (count <= 0) return;
    std::vector<Checker> per(static_cast<size_t>(count));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < count; i = next++) {
            Checker& c = per[static_cast<size_t>(i)];
            try {
                body(i, c);
            } catch (const std::exception& e) {
                c.fail("case " + std::to_string(i) + ": unexpected exception: " + e.what());
            }
        }
    };
    unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(count));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& c : per) {
        out.checks += c.checks;
        out.failures.insert(out.failures.end(), c.failures.begin(), c.failures.end());
        out.notes.insert(out.notes.end(), c.notes.begin(), c.notes.end());
    }
}

namespace {

struct Entry {
    const char* name;
    const char* title;
    int default_cases;
    void (*run)(const SuiteOptions&, int, Checker&);
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> r = {
        {"trefoil", "trefoil sums: h and J ideals", 3, suites::trefoil},
        {"twobridge", "two-bridge s-invariants", 5, suites::two_bridge},
        {"pairing", "duality pairing", 40, suites::pairing},
        {"properties", "random complex properties", 200, suites::properties},
        {"zhat", "z-hat ideals and monomial membership", 6, suites::zhat},
        {"filtered", "filtered invariants", 100, suites::filtered},
        {"figure", "10*_28 figure complex", 1, suites::figure},
        {"signature", "signatures", 100, suites::signature},
        {"cobordism", "minimal reducibles", 60, suites::cobordism},
    };
    return r;
}

const Entry& find(const std::string& name) {
    for (const auto& e : registry())
        if (name == e.name) return e;
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : registry()) v.emplace_back(e.name);
        return v;
    }();
    return names;
}

bool is_suite(const std::string& name) {
    return std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    const Entry& e = find(name);
    SuiteResult r;
    r.name = e.name;
    r.title = e.title;
    r.cases = opt.cases > 0 ? opt.cases : e.default_cases;
    Checker c;
    try {
        e.run(opt, r.cases, c);
    } catch (const std::exception& ex) {
        c.fail(std::string("unexpected exception: ") + ex.what());
    }
    r.checks = c.checks;
    r.failures = std::move(c.failures);
    r.notes = std::move(c.notes);
    return r;
}

std::vector<SuiteResult> run_suites(const std::string& name_or_all, const SuiteOptions& opt) {
    std::vector<SuiteResult> out;
    if (name_or_all == "all") {
        for (const auto& n : suite_names()) out.push_back(run_suite(n, opt));
    } else {
        out.push_back(run_suite(name_or_all, opt));
    }
    return out;
}

std::string summary_text(const std::vector<SuiteResult>& rs) {
    std::ostringstream os;
    int failed = 0;
    for (const auto& r : rs) {
        os << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.checks << " checks, "
           << r.failures.size() << " failures\n";
        failed += !r.passed();
    }
    for (const auto& r : rs) {
        for (const auto& f : r.failures) os << "  failure [" << r.name << "] " << f << "\n";
        for (const auto& n : r.notes) os << "  note [" << r.name << "] " << n << "\n";
    }
    os << (failed ? "FAILED" : "OK") << ": " << rs.size() - static_cast<size_t>(failed) << "/" << rs.size()
       << " suites passed\n";
    return os.str();
}

nlohmann::json summary_json(const std::vector<SuiteResult>& rs) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rs)
        j.push_back({{"suite", r.name},
                     {"title", r.title},
                     {"passed", r.passed()},
                     {"cases", r.cases},
                     {"checks", r.checks},
                     {"failures", r.failures},
                     {"notes", r.notes}});
    return j;
}

}  // namespace scx
