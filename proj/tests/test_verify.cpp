#include <cmath>

#include "doctest.h"

#include "fht/expression.hpp"
#include "fht/verify.hpp"

using namespace fht;

TEST_CASE("parseval suite passes with fixed and random pairs") {
    VerificationReport rep = verify_parseval(123, 8);
    CHECK(rep.suite == "parseval");
    CHECK(rep.cases.size() == 3 + 8);
    CHECK(rep.all_pass());
    for (auto& c : rep.cases) {
        CHECK_FALSE(c.is_margin);
        CHECK(c.residual <= c.tolerance);
    }
}

TEST_CASE("inversion suite: left and right identities") {
    VerificationReport rep = verify_inversion(7, 5);
    CHECK(rep.all_pass());
    bool saw_left = false, saw_right = false;
    for (auto& c : rep.cases) {
        if (c.id.rfind("inversion-left", 0) == 0) saw_left = true;
        if (c.id.rfind("inversion-right", 0) == 0) saw_right = true;
    }
    CHECK(saw_left);
    CHECK(saw_right);
}

TEST_CASE("lower-bound suite: every margin is positive") {
    VerificationReport rep = verify_lower_bound(99, 12);
    CHECK(rep.all_pass());
    for (auto& c : rep.cases) {
        CHECK(c.is_margin);
        CHECK(c.residual > 0.0);
    }
}

TEST_CASE("suites are deterministic for a fixed seed") {
    VerificationReport a = verify_lower_bound(5, 6);
    VerificationReport b = verify_lower_bound(5, 6);
    REQUIRE(a.cases.size() == b.cases.size());
    for (size_t i = 0; i < a.cases.size(); ++i) {
        CHECK(a.cases[i].id == b.cases[i].id);
        CHECK(a.cases[i].inputs == b.cases[i].inputs);
        CHECK(a.cases[i].residual == b.cases[i].residual);
    }
    VerificationReport c = verify_lower_bound(6, 6);
    bool different = false;
    for (size_t i = 0; i < c.cases.size(); ++i)
        different = different || c.cases[i].inputs != a.cases[i].inputs;
    CHECK(different);
}

TEST_CASE("domain probe certifies divergence for the log profile") {
    VerificationReport rep =
        probe_optimal_domain(parse_expression("abs(log((1-x)/(1+x)))"), 117);
    CHECK(rep.all_pass());
    bool certified = false;
    for (auto& c : rep.cases)
        if (c.id == "divergence-certificate" && c.residual > 0.0) certified = true;
    CHECK(certified);
}

TEST_CASE("domain probe declines for bounded inputs") {
    VerificationReport rep = probe_optimal_domain(parse_expression("chi(-1,1)"), 20);
    REQUIRE(rep.cases.size() == 1);
    CHECK(rep.cases[0].id == "bounded-input-decline");
    CHECK(rep.cases[0].pass);

    VerificationReport rep2 =
        probe_optimal_domain(parse_expression("sin(3*x) + 2"), 20);
    CHECK(rep2.cases[0].id == "bounded-input-decline");
}

TEST_CASE("domain probe on a slowly unbounded input keeps positive margins") {
    // |f| = log(1 + |log|x||) on (0,1): unbounded at 0 but so slowly that
    // the level sets shrink super-exponentially; every nonempty level set
    // still clears the universal lower bound.
    FunctionHandle f = parse_expression("log(1+abs(log(abs(x)+1e-310)))*chi(0,1)");
    VerificationReport rep = probe_optimal_domain(f, 6);
    CHECK(rep.cases.size() > 1);
    int levels = 0;
    for (auto& c : rep.cases) {
        if (c.id.rfind("level-set-", 0) == 0 && c.is_margin) {
            CHECK(c.residual > 0.0);
            ++levels;
        }
    }
    CHECK(levels >= 3);
}
