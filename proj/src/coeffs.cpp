#include "faulhaber/coeffs.hpp"

#include <string>

namespace faulhaber {

namespace {

FaulhaberCoeffs make_coeffs(std::int64_t p, std::vector<Rational> f) {
    const auto [parity, k] = split_degree(p);
    FaulhaberCoeffs out;
    out.p = p;
    out.parity = parity;
    out.k = k;
    out.f = std::move(f);
    if (parity == Parity::odd) out.constant = constant_term(out.f);
    return out;
}

std::vector<Rational> witmer_even(std::int64_t k) {
    // rows[d] holds f^{(2d)} for d = 1..k; entries with i > d are implicitly zero.
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(k + 1));
    for (std::int64_t kk = 1; kk <= k; ++kk) {
        const Rational scale = -Rational(1) / Rational(2 * kk + 1);
        std::vector<Rational> weights;  // 4^{j-kk} C(2kk+1, 2j), j = 1..kk-1
        for (std::int64_t j = 1; j < kk; ++j) {
            weights.push_back(pow4(j - kk) * Rational(binomial(2 * kk + 1, 2 * j)));
        }
        std::vector<Rational> row(static_cast<std::size_t>(kk + 1));
        row[static_cast<std::size_t>(kk)] = rat(1, 2 * kk + 1);
        for (std::int64_t i = 0; i < kk; ++i) {
            Rational sum = i == 0 ? pow4(-kk) : Rational(0);
            for (std::int64_t j = std::max<std::int64_t>(i, 1); j < kk; ++j) {
                sum += weights[static_cast<std::size_t>(j - 1)] *
                       rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            }
            row[static_cast<std::size_t>(i)] = scale * sum;
        }
        rows[static_cast<std::size_t>(kk)] = std::move(row);
    }
    return rows[static_cast<std::size_t>(k)];
}

std::pair<std::vector<Rational>, Rational> witmer_odd(std::int64_t k) {
    // rows[d] holds f^{(2d+1)}, consts[d] holds c_{2d+1}, d = 0..k.
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(k + 1));
    std::vector<Rational> consts(static_cast<std::size_t>(k + 1));
    for (std::int64_t kk = 0; kk <= k; ++kk) {
        const Rational scale = -Rational(1) / Rational(2 * kk + 2);
        std::vector<Rational> weights;  // 4^{j-kk} C(2kk+2, 2j+1), j = 0..kk-1
        for (std::int64_t j = 0; j < kk; ++j) {
            weights.push_back(pow4(j - kk) * Rational(binomial(2 * kk + 2, 2 * j + 1)));
        }
        std::vector<Rational> row(static_cast<std::size_t>(kk + 1));
        row[static_cast<std::size_t>(kk)] = rat(1, 2 * kk + 2);
        for (std::int64_t i = 0; i < kk; ++i) {
            Rational sum;
            for (std::int64_t j = i; j < kk; ++j) {
                sum += weights[static_cast<std::size_t>(j)] *
                       rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            }
            row[static_cast<std::size_t>(i)] = scale * sum;
        }
        Rational csum = pow4(-(kk + 1));
        for (std::int64_t j = 0; j < kk; ++j) {
            csum += weights[static_cast<std::size_t>(j)] * consts[static_cast<std::size_t>(j)];
        }
        consts[static_cast<std::size_t>(kk)] = scale * csum;
        rows[static_cast<std::size_t>(kk)] = std::move(row);
    }
    return {rows[static_cast<std::size_t>(k)], consts[static_cast<std::size_t>(k)]};
}

}  // namespace

const char* to_string(Method m) {
    switch (m) {
        case Method::recurrence: return "recurrence";
        case Method::determinant: return "determinant";
        case Method::witmer: return "witmer";
        case Method::explicit_bernoulli: return "explicit";
        case Method::derivative: return "derivative";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    for (Method m : {Method::recurrence, Method::determinant, Method::witmer,
                     Method::explicit_bernoulli, Method::derivative}) {
        if (name == to_string(m)) return m;
    }
    return std::nullopt;
}

bool method_applies(Method m, std::int64_t p) {
    if (p < 1) return false;
    if (m == Method::derivative) return p >= 3 && p % 2 == 1;
    return true;
}

std::pair<Parity, std::int64_t> split_degree(std::int64_t p) {
    if (p < 1) {
        throw DomainError("centered coefficients need p >= 1, got p=" + std::to_string(p));
    }
    return p % 2 == 0 ? std::pair{Parity::even, p / 2} : std::pair{Parity::odd, (p - 1) / 2};
}

Rational constant_term(const std::vector<Rational>& f) {
    Rational sum;
    for (std::size_t m = 0; m < f.size(); ++m) {
        sum += f[m] * pow4(-static_cast<std::int64_t>(m) - 1);
    }
    return -sum;
}

FaulhaberCoeffs coeffs_by_recurrence(std::int64_t p) {
    const auto [parity, k] = split_degree(p);
    return make_coeffs(p, solve_triangular(build_system(parity, k)));
}

FaulhaberCoeffs coeffs_by_determinant(std::int64_t p) {
    const auto [parity, k] = split_degree(p);
    const Rational top(parity == Parity::even ? double_factorial(2 * k + 1)
                                              : double_factorial(2 * k + 2));
    std::vector<Rational> f(static_cast<std::size_t>(k + 1));
    for (std::int64_t j = 0; j <= k; ++j) {
        const Rational delta = j == 0 ? Rational(1) : determinant(build_delta(parity, k, j));
        const Rational bottom(parity == Parity::even ? double_factorial(2 * k - 2 * j - 1)
                                                     : double_factorial(2 * k - 2 * j));
        f[static_cast<std::size_t>(k - j)] = Rational(sign_power(j)) * bottom / top * delta;
    }
    return make_coeffs(p, std::move(f));
}

FaulhaberCoeffs coeffs_by_witmer(std::int64_t p) {
    const auto [parity, k] = split_degree(p);
    if (parity == Parity::even) return make_coeffs(p, witmer_even(k));
    auto [f, c] = witmer_odd(k);
    FaulhaberCoeffs out;
    out.p = p;
    out.parity = parity;
    out.k = k;
    out.f = std::move(f);
    out.constant = std::move(c);
    return out;
}

FaulhaberCoeffs coeffs_by_explicit(std::int64_t p, BernoulliCache& cache) {
    const auto [parity, k] = split_degree(p);
    std::vector<Rational> f(static_cast<std::size_t>(k + 1));
    for (std::int64_t m = 0; m <= k; ++m) {
        const Rational bh = cache.half(2 * k - 2 * m);
        f[static_cast<std::size_t>(m)] =
            parity == Parity::even
                ? Rational(binomial(2 * k, 2 * m)) * bh / Rational(2 * m + 1)
                : Rational(binomial(2 * k + 1, 2 * m + 1)) * bh / Rational(2 * m + 2);
    }
    return make_coeffs(p, std::move(f));
}

FaulhaberCoeffs odd_from_even(const FaulhaberCoeffs& even) {
    if (even.parity != Parity::even) throw DomainError("odd_from_even: input must have even parity");
    if (even.k < 1) throw DomainError("odd_from_even: need k >= 1");
    std::vector<Rational> f(even.f.size());
    for (std::size_t m = 0; m < f.size(); ++m) {
        f[m] = rat(2 * even.k + 1, 2 * static_cast<std::int64_t>(m) + 2) * even.f[m];
    }
    return make_coeffs(even.p + 1, std::move(f));
}

FaulhaberCoeffs compute_coeffs(std::int64_t p, Method method, BernoulliCache& cache) {
    if (!method_applies(method, p)) {
        throw DomainError(std::string("method '") + to_string(method) +
                          "' does not apply to p=" + std::to_string(p));
    }
    switch (method) {
        case Method::recurrence: return coeffs_by_recurrence(p);
        case Method::determinant: return coeffs_by_determinant(p);
        case Method::witmer: return coeffs_by_witmer(p);
        case Method::explicit_bernoulli: return coeffs_by_explicit(p, cache);
        case Method::derivative: return odd_from_even(coeffs_by_recurrence(p - 1));
    }
    throw DomainError("unknown method");
}

}  // namespace faulhaber
