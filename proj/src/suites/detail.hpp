#pragma once

#include "scx/suites/suites.hpp"

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <sstream>
#include <string>

namespace scx::suites {

void trefoil(const SuiteOptions& opt, int cases, Checker& c);
void two_bridge(const SuiteOptions& opt, int cases, Checker& c);
void pairing(const SuiteOptions& opt, int cases, Checker& c);
void properties(const SuiteOptions& opt, int cases, Checker& c);
void zhat(const SuiteOptions& opt, int cases, Checker& c);
void filtered(const SuiteOptions& opt, int cases, Checker& c);
void figure(const SuiteOptions& opt, int cases, Checker& c);
void signature(const SuiteOptions& opt, int cases, Checker& c);
void cobordism(const SuiteOptions& opt, int cases, Checker& c);

template <class T>
std::string show(const T& x) {
    if constexpr (requires { x.str(); }) {
        return x.str();
    } else {
        std::ostringstream os;
        os << x;
        return os.str();
    }
}

template <class T>
std::string show(const std::optional<T>& x) {
    return x ? show(*x) : std::string("none");
}

template <class A, class B>
std::string show(const std::pair<A, B>& x) {
    return "(" + show(x.first) + ", " + show(x.second) + ")";
}

template <class A, class B>
void expect_eq(Checker& c, const A& got, const B& want, const std::string& what) {
    const bool ok = got == want;
    c.check(ok, ok ? what : what + ": got " + show(got) + ", expected " + show(want));
}

inline mpq_class rat(long a, long b) {
    mpq_class x(a, b);
    x.canonicalize();
    return x;
}

}  // namespace scx::suites
