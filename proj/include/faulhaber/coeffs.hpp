#pragma once

/**
 * @file coeffs.hpp
 * @brief Faulhaber coefficients of S_p(n) in the centered variable N = n + 1/2.
 *
 *     S_{2k}(n)   = sum_{m=0}^{k} f_m N^{2m+1}
 *     S_{2k+1}(n) = c + sum_{m=0}^{k} f_m N^{2m+2}
 *
 * Each method below is an independent route to the same vector, so tests
 * and the `verify` command can cross-check them. No method falls back to
 * another.
 */

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/linsys.hpp"
#include "faulhaber/ratnum.hpp"

namespace faulhaber {

struct FaulhaberCoeffs {
    std::int64_t p = 1;
    Parity parity = Parity::odd;
    std::int64_t k = 0;
    std::vector<Rational> f;             // f[m], m = 0..k
    std::optional<Rational> constant;    // c_p, present iff p is odd

    friend bool operator==(const FaulhaberCoeffs&, const FaulhaberCoeffs&) = default;
};

enum class Method { recurrence, determinant, witmer, explicit_bernoulli, derivative };

const char* to_string(Method m);
/// Accepts "recurrence", "determinant", "witmer", "explicit", "derivative".
std::optional<Method> parse_method(std::string_view name);
/// Whether `m` can produce coefficients for degree p (derivative needs odd p >= 3).
bool method_applies(Method m, std::int64_t p);

/// Splits p >= 1 into (parity, k). @throws DomainError when p < 1.
std::pair<Parity, std::int64_t> split_degree(std::int64_t p);

FaulhaberCoeffs coeffs_by_recurrence(std::int64_t p);
FaulhaberCoeffs coeffs_by_determinant(std::int64_t p);
FaulhaberCoeffs coeffs_by_witmer(std::int64_t p);
FaulhaberCoeffs coeffs_by_explicit(std::int64_t p, BernoulliCache& cache = default_bernoulli_cache());

/// Transfers S_{2k} coefficients to S_{2k+1} via f_m' = (2k+1)/(2m+2) f_m.
/// @throws DomainError on odd input or k < 1.
FaulhaberCoeffs odd_from_even(const FaulhaberCoeffs& even);

/// c_{2k+1} = -sum_m f_m / 4^{m+1}.
Rational constant_term(const std::vector<Rational>& f);

/// Dispatches on `method`; derivative uses the recurrence for the even input.
/// @throws DomainError when the method does not apply to p.
FaulhaberCoeffs compute_coeffs(std::int64_t p, Method method,
                               BernoulliCache& cache = default_bernoulli_cache());

}  // namespace faulhaber
