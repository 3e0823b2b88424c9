#include "faulhaber/oracle.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/linsys.hpp"
#include "faulhaber/polyforms.hpp"

namespace faulhaber {

Integer brute_force_sum(std::int64_t p, std::int64_t n) {
    if (p < 0 || n < 0) throw DomainError("brute_force_sum: p and n must be non-negative");
    mpz_class sum = 0;
    mpz_class term;
    for (std::int64_t i = 1; i <= n; ++i) {
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(p));
        sum += term;
    }
    return Integer(std::move(sum));
}

namespace {

class Checker {
public:
    explicit Checker(VerifyReport& report) : report_(report) {}

    void expect_eq(const std::string& check, std::int64_t p, std::int64_t index,
                   const Rational& expected, const Rational& actual) {
        ++report_.checks_run;
        if (expected != actual) report_.failures.push_back({check, p, index, expected, actual, {}});
    }

    void fail(const std::string& check, std::int64_t p, std::int64_t index, std::string note) {
        ++report_.checks_run;
        report_.failures.push_back({check, p, index, Rational(0), Rational(0), std::move(note)});
    }

    // Runs `body`, turning an escaping exception into a recorded failure.
    template <typename Fn>
    void guarded(const std::string& check, std::int64_t p, std::int64_t index, Fn&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            fail(check, p, index, e.what());
        }
    }

    // One check per vector: reports the first differing index, or a length mismatch.
    void expect_vec(const std::string& check, std::int64_t p, const std::vector<Rational>& expected,
                    const std::vector<Rational>& actual) {
        if (expected.size() != actual.size()) {
            fail(check, p, -1, "length " + std::to_string(actual.size()) + " != " +
                                   std::to_string(expected.size()));
            return;
        }
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (expected[i] != actual[i]) {
                ++report_.checks_run;
                report_.failures.push_back(
                    {check, p, static_cast<std::int64_t>(i), expected[i], actual[i], {}});
                return;
            }
        }
        ++report_.checks_run;
    }

    void expect_coeffs(const std::string& check, const FaulhaberCoeffs& expected,
                       const FaulhaberCoeffs& actual) {
        expect_vec(check, expected.p, expected.f, actual.f);
        if (expected.constant || actual.constant) {
            expect_eq(check + "/constant", expected.p, expected.k,
                      expected.constant.value_or(Rational(0)), actual.constant.value_or(Rational(0)));
        }
    }

private:
    VerifyReport& report_;
};

FaulhaberCoeffs produce(Method m, std::int64_t p, const VerifyOptions& options) {
    FaulhaberCoeffs c = compute_coeffs(p, m);
    if (options.tamper) options.tamper(m, c);
    return c;
}

void check_methods(Checker& ck, std::int64_t p_max, const VerifyOptions& options,
                   std::map<std::int64_t, FaulhaberCoeffs>& reference) {
    for (std::int64_t p = 1; p <= p_max; ++p) {
        const FaulhaberCoeffs ref = produce(Method::recurrence, p, options);
        reference.emplace(p, ref);
        for (Method m : {Method::determinant, Method::witmer, Method::explicit_bernoulli,
                         Method::derivative}) {
            if (!method_applies(m, p)) continue;
            const std::string name = std::string("agreement/") + to_string(m);
            ck.guarded(name, p, 0, [&] { ck.expect_coeffs(name, ref, produce(m, p, options)); });
        }
        ck.guarded("agreement/closed-form", p, 0, [&] {
            ck.expect_coeffs("agreement/closed-form", ref,
                             explicit_center_polynomial(p).center_coeffs());
        });
        ck.expect_eq("leading", p, ref.k, rat(1, p + 1), ref.f.back());
        if (ref.constant) {
            ck.expect_eq("constant_law", p, ref.k, constant_term(ref.f), *ref.constant);
        }
    }
}

void check_evaluation(Checker& ck, std::int64_t p_max, std::int64_t n_max,
                      const std::map<std::int64_t, FaulhaberCoeffs>& reference) {
    for (std::int64_t p = 0; p <= p_max; ++p) {
        std::vector<std::pair<std::string, PolyForm>> forms;
        forms.emplace_back("eval/power", power_basis_bernoulli(p));
        if (p >= 1) {
            const PolyForm center = PolyForm::from_center(reference.at(p));
            forms.emplace_back("eval/center", center);
            if (p >= 2) {
                try {
                    forms.emplace_back("eval/s1", center_to_s1(center));
                } catch (const std::exception& e) {
                    ck.fail("eval/s1", p, 0, e.what());
                }
            }
        }
        // Running brute-force sum in plain integers.
        mpz_class sum = 0;
        mpz_class term;
        for (std::int64_t n = 0; n <= n_max; ++n) {
            if (n > 0) {
                mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(p));
                sum += term;
            }
            const Rational expected{Integer(mpz_class(sum))};
            for (const auto& [name, form] : forms) {
                ck.expect_eq(name, p, n, expected, evaluate(form, Rational(n)));
            }
        }
    }
}

void check_round_trips(Checker& ck, std::int64_t p_max,
                       const std::map<std::int64_t, FaulhaberCoeffs>& reference) {
    for (std::int64_t p = 1; p <= p_max; ++p) {
        const PolyForm center = PolyForm::from_center(reference.at(p));
        ck.guarded("roundtrip/power", p, 0, [&] {
            const PolyForm power = center_to_power(center);
            ck.expect_vec("power_vs_bernoulli", p, power_basis_bernoulli(p).coefficients,
                          power.coefficients);
            const PolyForm back = power_to_center(power);
            ck.expect_coeffs("roundtrip/power", center.center_coeffs(), back.center_coeffs());
        });
        if (p >= 2) {
            ck.guarded("roundtrip/s1", p, 0, [&] {
                const PolyForm back = s1_to_center(center_to_s1(center));
                ck.expect_coeffs("roundtrip/s1", center.center_coeffs(), back.center_coeffs());
            });
        }
        const PolyForm power = power_basis_bernoulli(p);
        const std::vector<Rational> reflected = reflect(power);
        std::vector<Rational> expected(power.coefficients.size() + 1);
        for (std::size_t i = 0; i < power.coefficients.size(); ++i) {
            expected[i + 1] = Rational(sign_power(p + 1)) * power.coefficients[i];
        }
        ck.expect_vec("symmetry", p, expected, reflected);
    }
}

void check_determinants(Checker& ck, std::int64_t k_max) {
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const Rational bh = bernoulli_half(2 * k);
        const Rational sgn(sign_power(k));
        ck.expect_eq("delta_closed_form/even", 2 * k, k,
                     sgn * Rational(double_factorial(2 * k + 1)) * bh,
                     determinant(build_delta(Parity::even, k, k)));
        ck.expect_eq("delta_closed_form/odd", 2 * k + 1, k,
                     sgn * Rational(2 * k + 1) * Rational(k + 1) * Rational(double_factorial(2 * k)) * bh,
                     determinant(build_delta(Parity::odd, k, k)));
    }
    for (std::int64_t k = 0; k <= k_max; ++k) {
        for (std::int64_t j = 0; j <= k; ++j) {
            ck.expect_eq("system_determinant/even", 2 * k, j,
                         rat(double_factorial(2 * k + 1), double_factorial(2 * k - 2 * j - 1)),
                         system_determinant(Parity::even, k, j));
            ck.expect_eq("system_determinant/odd", 2 * k + 1, j,
                         rat(double_factorial(2 * k + 2), double_factorial(2 * k - 2 * j)),
                         system_determinant(Parity::odd, k, j));
        }
    }
}

void check_derivative_and_scaling(Checker& ck, std::int64_t k_max) {
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const PolyForm even = PolyForm::from_center(coeffs_by_recurrence(2 * k));
        const PolyForm odd = PolyForm::from_center(coeffs_by_recurrence(2 * k + 1));
        ck.guarded("derivative", 2 * k + 1, 0, [&] {
            ck.expect_vec("derivative", 2 * k + 1, even.coefficients, derivative(odd).coefficients);
        });
        const PolyForm b = center_to_s1(even);
        const PolyForm c = center_to_s1(odd);
        for (std::int64_t j = 0; j < k; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            ck.expect_eq("scaling", 2 * k + 1, j, rat(4 * k + 2, 3 * j + 6) * b.coefficients[ju],
                         c.coefficients[ju]);
        }
    }
}

}  // namespace

VerifyReport run_verification(std::int64_t p_max, std::int64_t n_max, std::int64_t k_max,
                              const VerifyOptions& options) {
    if (p_max < 1 || n_max < 1 || k_max < 1) {
        throw DomainError("run_verification: p_max, n_max and k_max must be >= 1");
    }
    VerifyReport report;
    report.p_max = p_max;
    report.n_max = n_max;
    report.k_max = k_max;
    Checker ck(report);

    std::map<std::int64_t, FaulhaberCoeffs> reference;
    check_methods(ck, p_max, options, reference);
    check_evaluation(ck, p_max, n_max, reference);
    check_round_trips(ck, p_max, reference);
    check_determinants(ck, k_max);
    check_derivative_and_scaling(ck, k_max);

    std::stable_sort(report.failures.begin(), report.failures.end(),
                     [](const CheckFailure& a, const CheckFailure& b) {
                         return std::tie(a.check, a.p, a.index) < std::tie(b.check, b.p, b.index);
                     });
    return report;
}

Json to_json(const VerifyReport& report) {
    Json j;
    j["p_range"] = {1, report.p_max};
    j["n_range"] = {0, report.n_max};
    j["k_range"] = {1, report.k_max};
    j["checks_run"] = report.checks_run;
    j["passed"] = report.passed();
    Json fails = Json::array();
    for (const auto& f : report.failures) {
        Json e;
        e["check"] = f.check;
        e["p"] = f.p;
        e["index"] = f.index;
        e["expected"] = f.expected.to_string();
        e["actual"] = f.actual.to_string();
        if (!f.note.empty()) e["note"] = f.note;
        fails.push_back(std::move(e));
    }
    j["failures"] = std::move(fails);
    return j;
}

std::string render_text(const VerifyReport& report) {
    std::ostringstream os;
    os << "verify p<=" << report.p_max << " n<=" << report.n_max << " k<=" << report.k_max
       << ": " << report.checks_run << " checks, " << report.failures.size() << " failures\n";
    if (!report.failures.empty()) {
        os << std::left << std::setw(32) << "check" << std::setw(6) << "p" << std::setw(8) << "index"
           << "expected -> actual\n";
        for (const auto& f : report.failures) {
            os << std::left << std::setw(32) << f.check << std::setw(6) << f.p << std::setw(8) << f.index
               << f.expected << " -> " << f.actual;
            if (!f.note.empty()) os << "  (" << f.note << ")";
            os << "\n";
        }
    }
    os << (report.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace faulhaber
