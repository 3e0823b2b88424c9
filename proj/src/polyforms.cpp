#include "faulhaber/polyforms.hpp"

#include <string>

namespace faulhaber {

namespace {

std::size_t idx(std::int64_t i) { return static_cast<std::size_t>(i); }

void require_basis(const PolyForm& pf, Basis b, const char* what) {
    if (pf.basis != b) {
        throw DomainError(std::string(what) + ": expected " + to_string(b) + " basis, got " +
                          to_string(pf.basis));
    }
}

// Horner in x over coefficients c[0] + c[1] x + ...
Rational horner(const std::vector<Rational>& c, const Rational& x) {
    Rational acc;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

}  // namespace

const char* to_string(Basis b) {
    switch (b) {
        case Basis::power: return "power";
        case Basis::center: return "center";
        case Basis::s1: return "s1";
    }
    return "?";
}

std::optional<Basis> parse_basis(std::string_view name) {
    for (Basis b : {Basis::power, Basis::center, Basis::s1}) {
        if (name == to_string(b)) return b;
    }
    return std::nullopt;
}

PolyForm PolyForm::from_center(const FaulhaberCoeffs& c) {
    return PolyForm{c.p, Basis::center, c.f, c.constant};
}

FaulhaberCoeffs PolyForm::center_coeffs() const {
    require_basis(*this, Basis::center, "center_coeffs");
    const auto [parity, k] = split_degree(p);
    if (coefficients.size() != idx(k + 1)) {
        throw DomainError("center form of p=" + std::to_string(p) + " needs " +
                          std::to_string(k + 1) + " coefficients");
    }
    if ((parity == Parity::odd) != constant.has_value()) {
        throw DomainError("center form: constant must be present exactly for odd p");
    }
    return FaulhaberCoeffs{p, parity, k, coefficients, constant};
}

PolyForm power_basis_bernoulli(std::int64_t p, BernoulliCache& cache) {
    if (p < 0) throw DomainError("power basis needs p >= 0, got p=" + std::to_string(p));
    PolyForm out{p, Basis::power, {}, std::nullopt};
    out.coefficients.reserve(idx(p + 1));
    for (std::int64_t j = 1; j <= p + 1; ++j) {
        out.coefficients.push_back(Rational(binomial(p + 1, j)) *
                                   Rational(sign_power(p + 1 - j)) * cache.number(p + 1 - j) /
                                   Rational(p + 1));
    }
    return out;
}

PolyForm center_to_power(const PolyForm& pf) {
    const FaulhaberCoeffs c = pf.center_coeffs();
    const std::int64_t offset = c.parity == Parity::even ? 1 : 2;
    const std::int64_t top = 2 * c.k + offset;  // == p + 1

    // Expand f_m (n + 1/2)^e into powers n^i with weight C(e, i) 2^{i-e}.
    std::vector<Rational> dense(idx(top + 1));
    if (c.constant) dense[0] = *c.constant;
    for (std::int64_t m = 0; m <= c.k; ++m) {
        const std::int64_t e = 2 * m + offset;
        for (std::int64_t i = 0; i <= e; ++i) {
            dense[idx(i)] += c.f[idx(m)] * Rational(binomial(e, i)) * pow2(i - e);
        }
    }
    if (!dense[0].is_zero()) {
        throw ConsistencyError("center_to_power: nonzero constant term " + dense[0].to_string() +
                               " for p=" + std::to_string(c.p));
    }
    dense.erase(dense.begin());
    return PolyForm{c.p, Basis::power, std::move(dense), std::nullopt};
}

PolyForm power_to_center(const PolyForm& pf) {
    require_basis(pf, Basis::power, "power_to_center");
    const auto [parity, k] = split_degree(pf.p);
    if (pf.coefficients.size() != idx(pf.p + 1)) {
        throw DomainError("power form of p=" + std::to_string(pf.p) + " needs " +
                          std::to_string(pf.p + 1) + " coefficients");
    }
    // Coefficient of N^i in sum_j a_j (N - 1/2)^j.
    std::vector<Rational> dense(idx(pf.p + 2));
    for (std::int64_t j = 1; j <= pf.p + 1; ++j) {
        const Rational& a = pf.coefficients[idx(j - 1)];
        for (std::int64_t i = 0; i <= j; ++i) {
            dense[idx(i)] += a * Rational(binomial(j, i)) * Rational(sign_power(j - i)) * pow2(i - j);
        }
    }
    const std::int64_t offset = parity == Parity::even ? 1 : 2;
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(dense.size()); ++i) {
        const bool allowed = (i % 2 == 1) == (parity == Parity::even);
        if (!allowed && !dense[idx(i)].is_zero()) {
            throw ConsistencyError("power_to_center: N^" + std::to_string(i) +
                                   " term breaks the parity of p=" + std::to_string(pf.p));
        }
    }
    FaulhaberCoeffs c{pf.p, parity, k, std::vector<Rational>(idx(k + 1)), std::nullopt};
    for (std::int64_t m = 0; m <= k; ++m) c.f[idx(m)] = dense[idx(2 * m + offset)];
    if (parity == Parity::odd) c.constant = dense[0];
    return PolyForm::from_center(c);
}

PolyForm center_to_s1(const PolyForm& pf) {
    const FaulhaberCoeffs c = pf.center_coeffs();
    if (c.p < 2) throw DomainError("s1 basis is defined for p >= 2, got p=" + std::to_string(c.p));
    std::vector<Rational> out(idx(c.k));
    for (std::int64_t j = 0; j < c.k; ++j) {
        Rational sum;
        for (std::int64_t m = j + 1; m <= c.k; ++m) {
            if (c.parity == Parity::even) {
                sum += Rational(binomial(m, j + 1)) * c.f[idx(m)] * pow4(-m);
            } else {
                sum += Rational(binomial(m + 1, j + 2)) * c.f[idx(m)] * pow4(-(m + 1));
            }
        }
        out[idx(j)] = c.parity == Parity::even ? rat(3, 2) * pow2(3 * (j + 1)) * sum
                                               : pow2(3 * (j + 2)) * sum;
    }
    return PolyForm{c.p, Basis::s1, std::move(out), std::nullopt};
}

PolyForm s1_to_center(const PolyForm& pf) {
    require_basis(pf, Basis::s1, "s1_to_center");
    const auto [parity, k] = split_degree(pf.p);
    if (pf.p < 2) throw DomainError("s1 basis is defined for p >= 2, got p=" + std::to_string(pf.p));
    if (pf.coefficients.size() != idx(k)) {
        throw DomainError("s1 form of p=" + std::to_string(pf.p) + " needs " + std::to_string(k) +
                          " coefficients");
    }
    // s(j) = b_{k,j-1} or c_{k,j-1}, with the j = 0 entry defined as zero.
    const auto s = [&](std::int64_t j) { return j == 0 ? Rational(0) : pf.coefficients[idx(j - 1)]; };

    FaulhaberCoeffs c{pf.p, parity, k, std::vector<Rational>(idx(k + 1)), std::nullopt};
    for (std::int64_t m = 0; m <= k; ++m) {
        Rational sum;
        for (std::int64_t j = m; j <= k; ++j) {
            if (parity == Parity::even) {
                sum += Rational(sign_power(j)) * pow2(-3 * j) * Rational(binomial(j, m)) * s(j);
            } else {
                sum += Rational(sign_power(j + 1)) * pow2(-3 * (j + 1)) *
                       Rational(binomial(j + 1, m + 1)) * s(j);
            }
        }
        c.f[idx(m)] = parity == Parity::even
                          ? rat(2, 3) * Rational(sign_power(m)) * pow4(m) * sum
                          : Rational(sign_power(m + 1)) * pow4(m + 1) * sum;
    }
    if (parity == Parity::odd) {
        Rational cst;
        for (std::int64_t j = 0; j < k; ++j) {
            cst += Rational(sign_power(j)) * pow2(-3 * (j + 2)) * pf.coefficients[idx(j)];
        }
        c.constant = cst;
    }
    return PolyForm::from_center(c);
}

PolyForm convert(const PolyForm& pf, Basis target) {
    if (pf.basis == target) return pf;
    PolyForm center = pf;
    if (pf.basis == Basis::power) center = power_to_center(pf);
    else if (pf.basis == Basis::s1) center = s1_to_center(pf);
    switch (target) {
        case Basis::center: return center;
        case Basis::power: return center_to_power(center);
        case Basis::s1: return center_to_s1(center);
    }
    return center;
}

Rational evaluate(const PolyForm& pf, const Rational& n) {
    switch (pf.basis) {
        case Basis::power:
            return horner(pf.coefficients, n) * n;
        case Basis::center: {
            const Rational big_n = n + rat(1, 2);
            const Rational sq = big_n * big_n;
            const Rational inner = horner(pf.coefficients, sq);
            if (pf.p % 2 == 0) return big_n * inner;
            return sq * inner + pf.constant.value_or(Rational(0));
        }
        case Basis::s1: {
            const Rational s1 = n * (n + Rational(1)) / Rational(2);
            const Rational inner = horner(pf.coefficients, s1);
            if (pf.p % 2 == 0) {
                const Rational s2 = n * (n + Rational(1)) * (Rational(2) * n + Rational(1)) / Rational(6);
                return s2 * inner;
            }
            return s1 * s1 * inner;
        }
    }
    return Rational(0);
}

PolyForm derivative(const PolyForm& pf) {
    const FaulhaberCoeffs c = pf.center_coeffs();
    if (c.parity != Parity::odd) throw DomainError("derivative: input must have odd parity");
    if (c.k < 1) throw DomainError("derivative: need p >= 3");
    FaulhaberCoeffs out{c.p - 1, Parity::even, c.k, std::vector<Rational>(c.f.size()), std::nullopt};
    for (std::int64_t m = 0; m <= c.k; ++m) {
        out.f[idx(m)] = Rational(2 * m + 2) * c.f[idx(m)] / Rational(2 * c.k + 1);
    }
    return PolyForm::from_center(out);
}

std::vector<Rational> reflect(const PolyForm& pf) {
    require_basis(pf, Basis::power, "reflect");
    const auto top = static_cast<std::int64_t>(pf.coefficients.size());
    std::vector<Rational> out(idx(top + 1));
    // a_j (-(n+1))^j = a_j (-1)^j sum_i C(j, i) n^i
    for (std::int64_t j = 1; j <= top; ++j) {
        const Rational a = pf.coefficients[idx(j - 1)] * Rational(sign_power(j));
        for (std::int64_t i = 0; i <= j; ++i) out[idx(i)] += a * Rational(binomial(j, i));
    }
    return out;
}

PolyForm explicit_center_polynomial(std::int64_t p, BernoulliCache& cache) {
    const auto [parity, k] = split_degree(p);
    FaulhaberCoeffs c{p, parity, k, std::vector<Rational>(idx(k + 1)), std::nullopt};
    // Term j carries B_{2j}(1/2) and lands on N^{p+1-2j}, i.e. f_{k-j}.
    const Rational scale = rat(1, p + 1);
    Rational cst;
    for (std::int64_t j = 0; j <= k; ++j) {
        const Rational w = scale * Rational(binomial(p + 1, 2 * j)) * cache.half(2 * j);
        c.f[idx(k - j)] = w;
        if (parity == Parity::odd) cst -= w * pow4(j - k - 1);
    }
    if (parity == Parity::odd) c.constant = cst;
    return PolyForm::from_center(c);
}

PolyForm make_form(std::int64_t p, Basis basis) {
    switch (basis) {
        case Basis::power: return power_basis_bernoulli(p);
        case Basis::center: return PolyForm::from_center(coeffs_by_recurrence(p));
        case Basis::s1: return center_to_s1(PolyForm::from_center(coeffs_by_recurrence(p)));
    }
    throw DomainError("unknown basis");
}

}  // namespace faulhaber
