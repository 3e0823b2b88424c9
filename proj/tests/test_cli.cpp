#include <sstream>

#include "doctest.h"

#include "faulhaber/cli.hpp"

using namespace faulhaber;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const CliHooks& hooks = {}) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err, hooks);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("coeffs command") {
    const auto r = run({"coeffs", "--p", "10", "--method", "determinant", "--format", "json"});
    CHECK(r.status == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["f"].back() == "1/11");
    CHECK(j["f"].front() == "-2555/33792");
    CHECK(j["parity"] == "even");
    CHECK_FALSE(j.contains("constant"));

    const auto d = run({"coeffs", "--p", "11", "--method", "derivative", "--format", "json"});
    CHECK(d.status == kExitOk);
    CHECK(Json::parse(d.out)["constant"] == "691/16384");

    const auto cf = run({"coeffs", "--p", "11", "--method", "closed-form", "--format", "json"});
    CHECK(cf.out == d.out);

    const auto text = run({"coeffs", "--p", "10"});
    CHECK(text.out.find("f_5 = 1/11\nf_4 = -5/12") != std::string::npos);
}

TEST_CASE("coeffs usage errors") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"coeffs", "--p", "0", "--format", "json"},
             {"coeffs", "--p", "10", "--method", "derivative"},
             {"coeffs", "--p", "10", "--method", "nope"},
             {"coeffs", "--p", "10", "--format", "xml"},
             {"coeffs"},
             {},
             {"frobnicate"},
         }) {
        const auto r = run(args);
        CHECK(r.status == kExitUsage);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("poly command") {
    const auto s1 = run({"poly", "--p", "10", "--basis", "s1", "--format", "text"});
    CHECK(s1.status == kExitOk);
    CHECK(s1.out.find("5/11 - 30/11 S_1(n) + 68/11 S_1(n)^2 - 80/11 S_1(n)^3 + 48/11 S_1(n)^4") !=
          std::string::npos);
    CHECK(run({"poly", "--p", "1", "--basis", "center"}).out == "S_1(n) = 1/2 N^2 - 1/8\n");
    CHECK(run({"poly", "--p", "1", "--basis", "s1"}).status == kExitUsage);
    CHECK(run({"poly", "--p", "0", "--basis", "power"}).out == "S_0(n) = n\n");
    const auto latex = run({"poly", "--p", "11", "--format", "latex"});
    CHECK(latex.out.find("+ \\frac{691}{16384}") != std::string::npos);
}

TEST_CASE("eval command") {
    CHECK(run({"eval", "--p", "10", "--n", "3"}).out == "60074\n");
    CHECK(run({"eval", "--p", "11", "--n", "-1/2"}).out == "691/16384\n");
    CHECK(run({"eval", "--p", "11", "--n=-1/2", "--basis", "s1"}).out == "691/16384\n");
    CHECK(run({"eval", "--p", "5", "--n", "0"}).out == "0\n");
    CHECK(run({"eval", "--p", "5", "--n", "7", "--basis", "power"}).out == "29008\n");
    const auto j = Json::parse(run({"eval", "--p", "2", "--n", "4", "--format", "json"}).out);
    CHECK(j["value"] == "30");
    CHECK(run({"eval", "--p", "5", "--n", "1/0"}).status == kExitUsage);
    CHECK(run({"eval", "--p", "5", "--n", "x"}).status == kExitUsage);
}

TEST_CASE("convert command") {
    const auto r = run({"convert", "--p", "11", "--from", "s1", "--to", "center", "--coefficients",
                        "5/3,-20/3,34/3,-32/3,16/3", "--format", "json"});
    CHECK(r.status == kExitOk);
    CHECK(Json::parse(r.out)["constant"] == "691/16384");

    const auto p = run({"convert", "--p", "2", "--from", "center", "--to", "power", "--format", "json"});
    CHECK(Json::parse(p.out)["coefficients"] == Json::array({"1/6", "1/2", "1/3"}));

    const auto bad = run({"convert", "--p", "3", "--from", "center", "--to", "power", "--coefficients",
                          "-1/8,1/4", "--constant", "1"});
    CHECK(bad.status == kExitUsage);
    CHECK(bad.out.empty());
}

TEST_CASE("verify command") {
    CHECK(run({"verify", "--p-max", "11", "--n-max", "50", "--k-max", "5"}).status == kExitOk);
    CHECK(run({"verify", "--p-max", "1", "--n-max", "1", "--k-max", "1"}).status == kExitOk);
    CHECK(run({"verify", "--p-max", "0"}).status == kExitUsage);

    CliHooks hooks;
    hooks.verify.tamper = [](Method m, FaulhaberCoeffs& c) {
        if (m == Method::determinant && c.p == 3) c.f[0] = Rational(0);
    };
    const auto r = run({"verify", "--p-max", "4", "--n-max", "3", "--k-max", "1", "--format", "json"}, hooks);
    CHECK(r.status == kExitVerifyFailed);
    CHECK(Json::parse(r.out)["failures"][0]["check"] == "agreement/determinant");
}

TEST_CASE("bench command") {
    const auto r = run({"bench", "--k-max", "1", "--format", "json"});
    CHECK(r.status == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["consistent"] == true);
    CHECK(j["rows"].size() == 4);

    const auto sub = run({"bench", "--k-max", "3", "--methods", "recurrence,explicit", "--format", "json"});
    const Json js = Json::parse(sub.out);
    for (const auto& row : js["rows"]) CHECK(row["method"] != "determinant");
    CHECK(js["rows"].size() == 6);
    CHECK(run({"bench", "--k-max", "2", "--methods", "bogus"}).status == kExitUsage);
    CHECK(run({"bench", "--k-max", "0"}).status == kExitUsage);
}

TEST_CASE("json output is byte-stable") {
    const std::vector<std::string> args = {"poly", "--p", "7", "--basis", "s1", "--format", "json"};
    CHECK(run(args).out == run(args).out);
    CHECK(run(args).out == "{\n  \"p\": 7,\n  \"basis\": \"s1\",\n  \"coefficients\": [\n    \"1/3\",\n"
                           "    \"-4/3\",\n    \"2\"\n  ]\n}\n");
}
