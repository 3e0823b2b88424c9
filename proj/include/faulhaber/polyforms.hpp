#pragma once

/**
 * @file polyforms.hpp
 * @brief S_p(n) as an exact polynomial in one of three bases.
 *
 *  - power:  S_p(n) = sum_{j=1}^{p+1} a_j n^j; coefficients[i] holds a_{i+1}.
 *  - center: the Faulhaber form in N = n + 1/2; coefficients are f_0..f_k and
 *            `constant` holds c_p for odd p.
 *  - s1:     S_{2k}(n)   = S_2(n)   * sum_{j<k} b_j S_1(n)^j, or
 *            S_{2k+1}(n) = S_1(n)^2 * sum_{j<k} c_j S_1(n)^j.
 *            Only the bracketed vector is stored; the prefactor is implied
 *            by the parity of p. Defined for p >= 2.
 */

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "faulhaber/bernoulli.hpp"
#include "faulhaber/coeffs.hpp"
#include "faulhaber/ratnum.hpp"

namespace faulhaber {

enum class Basis { power, center, s1 };

const char* to_string(Basis b);
std::optional<Basis> parse_basis(std::string_view name);

/// Raised when a conversion detects coefficients that cannot describe S_p.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PolyForm {
    std::int64_t p = 0;
    Basis basis = Basis::power;
    std::vector<Rational> coefficients;
    std::optional<Rational> constant;

    static PolyForm from_center(const FaulhaberCoeffs& c);
    /// Reinterprets a center-basis form as coefficients. @throws DomainError otherwise.
    [[nodiscard]] FaulhaberCoeffs center_coeffs() const;

    friend bool operator==(const PolyForm&, const PolyForm&) = default;
};

/// a_j = C(p+1, j) (-1)^{p+1-j} B_{p+1-j} / (p+1). @throws DomainError when p < 0.
PolyForm power_basis_bernoulli(std::int64_t p, BernoulliCache& cache = default_bernoulli_cache());

/// Expands the powers of (n + 1/2). @throws ConsistencyError if a constant term survives.
PolyForm center_to_power(const PolyForm& pf);

/// Substitutes n = N - 1/2. @throws ConsistencyError if the result lacks the
/// parity structure of a Faulhaber form; DomainError when p < 1.
PolyForm power_to_center(const PolyForm& pf);

/// b_j (even) or c_j (odd) from the centered coefficients. @throws DomainError when p < 2.
PolyForm center_to_s1(const PolyForm& pf);

/// Inverse of center_to_s1, including c_{2k+1} for odd p.
PolyForm s1_to_center(const PolyForm& pf);

/// Converts between any two bases by way of the center basis.
PolyForm convert(const PolyForm& pf, Basis target);

/// Horner evaluation in n, N or S_1(n) depending on the basis.
Rational evaluate(const PolyForm& pf, const Rational& n);

/// d/dn of an odd-degree center form, divided by p. Yields the center form
/// of S_{p-1}. @throws DomainError on even parity or p < 3.
PolyForm derivative(const PolyForm& pf);

/// Coefficients of S_p(-(n+1)) in powers of n, index 0 being the constant term.
std::vector<Rational> reflect(const PolyForm& pf);

/// Center form straight from the Bernoulli closed form, constant included.
/// @throws DomainError when p < 1.
PolyForm explicit_center_polynomial(std::int64_t p, BernoulliCache& cache = default_bernoulli_cache());

/// The default route to S_p in the requested basis: power via the Bernoulli
/// formula, center via the triangular recurrence, s1 via center_to_s1.
PolyForm make_form(std::int64_t p, Basis basis);

}  // namespace faulhaber
