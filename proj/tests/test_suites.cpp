#include "scx/concordance/concordance.hpp"
#include "scx/scomplex/morphism.hpp"
#include "scx/scomplex/validate.hpp"
#include "scx/suites/random.hpp"
#include "scx/suites/suites.hpp"

#include <doctest.h>

#include <atomic>

using namespace scx;

TEST_CASE("random complexes and their change-of-splitting maps are valid") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Rng rng(seed);
        const RandomComplex r = random_complex(rng, Ring::Local);
        INFO("seed " << seed);
        CHECK(r.base.size() <= 5);
        CHECK(validate_complex(r.base).empty());
        CHECK(validate_complex(r.complex).empty());
        CHECK(validate_morphism(r.forward).empty());
        CHECK(validate_morphism(r.backward).empty());
        CHECK(compute_invariants(r.base).h == compute_invariants(r.complex).h);
    }
}

TEST_CASE("random chains have the requested Froyshov invariant") {
    Rng rng(11);
    for (int h = -4; h <= 4; ++h) CHECK(compute_invariants(random_chain(rng, h, Ring::Local)).h == h);
}

TEST_CASE("random generators are reproducible") {
    Rng a(5), b(5);
    for (int i = 0; i < 20; ++i) CHECK(random_local_element(a) == random_local_element(b));
}

TEST_CASE("parallel_cases merges in index order") {
    Checker ck;
    std::atomic<int> ran{0};
    parallel_cases(50, 4, ck, [&](int i, Checker& c) {
        ++ran;
        c.check(i % 7 != 3, "case " + std::to_string(i));
        if (i == 20) throw std::runtime_error("boom");
    });
    CHECK(ran == 50);
    CHECK(ck.checks >= 50);
    REQUIRE(ck.failures.size() == 8);
    CHECK(ck.failures[0] == "case 3");
    CHECK(ck.failures[1] == "case 10");
    bool saw_throw = false;
    for (const auto& f : ck.failures) saw_throw |= f.find("boom") != std::string::npos;
    CHECK(saw_throw);
}

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 9);
    CHECK(suite_names().front() == "trefoil");
    CHECK(is_suite("cobordism"));
    CHECK_FALSE(is_suite("all"));
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}

TEST_CASE("small suite runs pass and are deterministic") {
    const SuiteOptions opt{3, 4, 1};
    for (const char* name : {"trefoil", "pairing", "properties", "filtered", "signature", "cobordism"}) {
        INFO(name);
        const auto a = run_suite(name, opt);
        CHECK(a.passed());
        CHECK(a.checks > 0);
        const auto b = run_suite(name, opt);
        CHECK(summary_text({a}) == summary_text({b}));
    }
}

TEST_CASE("summary formats") {
    SuiteResult ok{"x", "title", 2, 5, {}, {"a note"}};
    SuiteResult bad{"y", "title", 1, 1, {"broken"}, {}};
    const std::string t = summary_text({ok, bad});
    CHECK(t.find("PASS x") != std::string::npos);
    CHECK(t.find("FAIL y") != std::string::npos);
    CHECK(t.find("broken") != std::string::npos);
    CHECK(t.find("1/2 suites passed") != std::string::npos);
    const auto j = summary_json({ok, bad});
    CHECK(j.dump().find("broken") != std::string::npos);
}
