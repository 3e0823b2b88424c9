#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force power sums and the exhaustive cross-method verifier.
 *
 * brute_force_sum touches only integer arithmetic, never the polynomial
 * machinery, so it stays independent of every code path it checks.
 */

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "faulhaber/coeffs.hpp"
#include "faulhaber/ratnum.hpp"
#include "faulhaber/render.hpp"

namespace faulhaber {

/// 1^p + 2^p + ... + n^p; zero when n = 0. @throws DomainError on negative input.
Integer brute_force_sum(std::int64_t p, std::int64_t n);

struct CheckFailure {
    std::string check;
    std::int64_t p = 0;
    std::int64_t index = 0;  // n, m, j or exponent depending on the check
    Rational expected;
    Rational actual;
    std::string note;

    friend bool operator==(const CheckFailure&, const CheckFailure&) = default;
};

struct VerifyReport {
    std::int64_t p_max = 0;
    std::int64_t n_max = 0;
    std::int64_t k_max = 0;
    std::uint64_t checks_run = 0;
    std::vector<CheckFailure> failures;  // ordered by (check, p, index)

    [[nodiscard]] bool passed() const { return failures.empty(); }
    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

struct VerifyOptions {
    /// Test hook: called on every coefficient vector produced by a method
    /// before it is checked. Lets tests inject faults.
    std::function<void(Method, FaulhaberCoeffs&)> tamper;
};

/// Runs method agreement (p <= p_max), evaluation against brute force
/// (p <= p_max, 0 <= n <= n_max), basis round trips, symmetry, the
/// determinant closed forms and |M_j| (k <= k_max), the derivative
/// identity and the b/c scaling relation (k <= k_max).
/// @throws DomainError when any range bound is below 1.
VerifyReport run_verification(std::int64_t p_max, std::int64_t n_max, std::int64_t k_max,
                              const VerifyOptions& options = {});

Json to_json(const VerifyReport& report);
std::string render_text(const VerifyReport& report);

}  // namespace faulhaber
