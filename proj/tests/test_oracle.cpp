#include <set>
#include <tuple>

#include "doctest.h"

#include "faulhaber/oracle.hpp"

using namespace faulhaber;

TEST_CASE("brute_force_sum") {
    CHECK(brute_force_sum(10, 3) == Integer(60074));
    CHECK(brute_force_sum(7, 0) == Integer(0));
    CHECK(brute_force_sum(1, 100) == Integer(5050));
    CHECK(brute_force_sum(0, 9) == Integer(9));
    CHECK_THROWS_AS(brute_force_sum(-1, 3), DomainError);
    for (std::int64_t p = 0; p <= 15; ++p) {
        for (std::int64_t n = 1; n <= 30; ++n) {
            mpz_class np;
            mpz_ui_pow_ui(np.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(p));
            CHECK(brute_force_sum(p, n) - brute_force_sum(p, n - 1) == Integer(np));
        }
    }
}

TEST_CASE("run_verification passes on clean inputs") {
    const auto report = run_verification(11, 50, 5);
    CHECK(report.passed());
    CHECK(report.checks_run > 0);

    const auto tiny = run_verification(1, 1, 1);
    CHECK(tiny.passed());
    CHECK(tiny.checks_run > 0);

    CHECK_THROWS_AS(run_verification(0, 1, 1), DomainError);
}

TEST_CASE("run_verification is deterministic") {
    CHECK(run_verification(6, 10, 3) == run_verification(6, 10, 3));
}

TEST_CASE("injected faults are reported exactly where they land") {
    VerifyOptions opts;
    opts.tamper = [](Method m, FaulhaberCoeffs& c) {
        if (m == Method::witmer && c.p == 5) c.f[1] += Rational(1);
    };
    const auto report = run_verification(8, 5, 2, opts);
    REQUIRE(report.failures.size() == 1);
    const auto& f = report.failures.front();
    CHECK(f.check == "agreement/witmer");
    CHECK(f.p == 5);
    CHECK(f.index == 1);
    CHECK(f.actual == f.expected + Rational(1));
}

TEST_CASE("a corrupted reference propagates to every dependent check") {
    VerifyOptions opts;
    opts.tamper = [](Method m, FaulhaberCoeffs& c) {
        if (m == Method::recurrence && c.p == 4) c.f[0] += Rational(1);
    };
    const auto report = run_verification(5, 3, 1, opts);
    CHECK_FALSE(report.passed());
    std::set<std::string> names;
    for (const auto& f : report.failures) {
        CHECK(f.p == 4);
        names.insert(f.check);
    }
    CHECK(names.count("agreement/determinant") == 1);
    CHECK(names.count("agreement/witmer") == 1);
    CHECK(names.count("agreement/explicit") == 1);
    CHECK(names.count("agreement/closed-form") == 1);
    CHECK(names.count("eval/center") == 1);
    // b_{k,j} never reads f_0, so the s1 form stays correct.
    CHECK(names.count("eval/s1") == 0);
    CHECK(names.count("eval/power") == 0);
    // Ordered by check name, then p, then index.
    for (std::size_t i = 1; i < report.failures.size(); ++i) {
        const auto& a = report.failures[i - 1];
        const auto& b = report.failures[i];
        CHECK(std::tie(a.check, a.p, a.index) <= std::tie(b.check, b.p, b.index));
    }
}

TEST_CASE("report serialization") {
    VerifyOptions opts;
    opts.tamper = [](Method m, FaulhaberCoeffs& c) {
        if (m == Method::explicit_bernoulli && c.p == 2) c.f[0] = Rational(7);
    };
    const auto report = run_verification(2, 2, 1, opts);
    const Json j = to_json(report);
    CHECK(j["passed"] == false);
    REQUIRE(j["failures"].size() == 1);
    CHECK(j["failures"][0]["check"] == "agreement/explicit");
    CHECK(j["failures"][0]["expected"] == "-1/12");
    CHECK(j["failures"][0]["actual"] == "7");
    const std::string text = render_text(report);
    CHECK(text.find("agreement/explicit") != std::string::npos);
    CHECK(text.find("FAIL") != std::string::npos);
}
