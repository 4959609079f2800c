#pragma once

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace scx {

struct SuiteOptions {
    std::uint64_t seed = 7;
    int cases = 0;        // 0: the suite's default case count
    unsigned threads = 0;  // 0: hardware concurrency
};

struct SuiteResult {
    std::string name;
    std::string title;
    int cases = 0;
    long checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;  // reported, never gating

    bool passed() const { return failures.empty(); }
};

// Collects check outcomes; failure messages are kept in call order.
class Checker {
public:
    void check(bool ok, const std::string& what);
    void fail(const std::string& what) { check(false, what); }
    void note(const std::string& what) { notes.push_back(what); }

    long checks = 0;
    std::vector<std::string> failures, notes;
};

// trefoil, twobridge, pairing, properties, zhat, filtered, figure,
// signature, cobordism, in acceptance-criterion order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Throws std::invalid_argument for an unknown name. "all" is not a suite
// here; see run_suites.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});
std::vector<SuiteResult> run_suites(const std::string& name_or_all, const SuiteOptions& opt = {});

// Deterministic summary: one line per suite, then failures and notes.
std::string summary_text(const std::vector<SuiteResult>& rs);
nlohmann::json summary_json(const std::vector<SuiteResult>& rs);

// Runs body(i, checker) for i in [0, count) on a worker pool and merges the
// per-case checkers in index order.
void parallel_cases(int count, unsigned threads, Checker& out, const std::function<void(int, Checker&)>& body);

}  // namespace scx
