#include "doctest.h"

#include "faulhaber/coeffs.hpp"
#include "faulhaber/polyforms.hpp"
#include "support/oracles.hpp"

using namespace faulhaber;
using faulhaber::testing::rats;

namespace {

const std::vector<Rational> kF10 = rats({"-2555/33792", "127/256", "-31/32", "7/8", "-5/12", "1/11"});
const std::vector<Rational> kF11 = rats({"-2555/6144", "1397/1024", "-341/192", "77/64", "-11/24", "1/12"});

}  // namespace

TEST_CASE("split_degree") {
    CHECK(split_degree(10) == std::pair{Parity::even, std::int64_t{5}});
    CHECK(split_degree(11) == std::pair{Parity::odd, std::int64_t{5}});
    CHECK(split_degree(1) == std::pair{Parity::odd, std::int64_t{0}});
    CHECK_THROWS_AS(split_degree(0), DomainError);
}

TEST_CASE("recurrence method") {
    const auto c10 = coeffs_by_recurrence(10);
    CHECK(c10.f == kF10);
    CHECK(c10.parity == Parity::even);
    CHECK(c10.k == 5);
    CHECK_FALSE(c10.constant.has_value());

    const auto c1 = coeffs_by_recurrence(1);
    CHECK(c1.f == rats({"1/2"}));
    CHECK(c1.constant == rat(-1, 8));

    CHECK(coeffs_by_recurrence(2).f == rats({"-1/12", "1/3"}));
    CHECK_THROWS_AS(coeffs_by_recurrence(0), DomainError);
}

TEST_CASE("determinant method") {
    const auto c10 = coeffs_by_determinant(10);
    CHECK(c10.f[5] == rat(1, 11));
    CHECK(c10.f[4] == rat(-5, 12));
    CHECK(c10.f == kF10);

    const auto c11 = coeffs_by_determinant(11);
    CHECK(c11.f == kF11);
    CHECK(c11.constant == rat(691, 16384));

    CHECK(coeffs_by_determinant(1).f == rats({"1/2"}));
    CHECK(coeffs_by_determinant(2).f == rats({"-1/12", "1/3"}));
    CHECK_THROWS_AS(coeffs_by_determinant(-4), DomainError);
}

TEST_CASE("Witmer method") {
    CHECK(coeffs_by_witmer(2).f == rats({"-1/12", "1/3"}));
    const auto c3 = coeffs_by_witmer(3);
    CHECK(c3.f == rats({"-1/8", "1/4"}));
    CHECK(c3.constant == rat(1, 64));
    CHECK(constant_term(c3.f) == rat(1, 64));
    CHECK(coeffs_by_witmer(10) == coeffs_by_recurrence(10));
    CHECK(coeffs_by_witmer(11).constant == rat(691, 16384));
    CHECK(coeffs_by_witmer(1).constant == rat(-1, 8));
}

TEST_CASE("explicit method") {
    CHECK(coeffs_by_explicit(10).f[0] == rat(-2555, 33792));
    CHECK(coeffs_by_explicit(11).f[0] == rat(-2555, 6144));
    CHECK(coeffs_by_explicit(2).f[1] == rat(1, 3));
    CHECK(coeffs_by_explicit(11).f == kF11);
}

TEST_CASE("odd_from_even") {
    const auto c11 = odd_from_even(coeffs_by_recurrence(10));
    CHECK(c11.p == 11);
    CHECK(c11.f == kF11);
    CHECK(c11.constant == rat(691, 16384));

    const auto c3 = odd_from_even(coeffs_by_recurrence(2));
    CHECK(c3.f == rats({"-1/8", "1/4"}));
    CHECK(c3.constant == rat(1, 64));
    CHECK(c3 == coeffs_by_witmer(3));

    for (std::int64_t k = 1; k <= 20; ++k) {
        CHECK(odd_from_even(coeffs_by_recurrence(2 * k)).f.back() == rat(1, 2 * k + 2));
    }
    CHECK_THROWS_AS(odd_from_even(coeffs_by_recurrence(3)), DomainError);
}

TEST_CASE("constant_term") {
    CHECK(constant_term(kF11) == rat(691, 16384));
    CHECK(constant_term(rats({"1/2"})) == rat(-1, 8));
    CHECK(constant_term(rats({"-1/8", "1/4"})) == rat(1, 64));
}

TEST_CASE("compute_coeffs dispatch") {
    CHECK_THROWS_AS(compute_coeffs(10, Method::derivative), DomainError);
    CHECK_THROWS_AS(compute_coeffs(1, Method::derivative), DomainError);
    CHECK(compute_coeffs(11, Method::derivative).f == kF11);
    CHECK(parse_method("explicit") == Method::explicit_bernoulli);
    CHECK_FALSE(parse_method("closed-form").has_value());
    CHECK_FALSE(method_applies(Method::recurrence, 0));
}

TEST_CASE("all methods agree and match brute-force fits") {
    for (std::int64_t p = 1; p <= 40; ++p) {
        const auto ref = coeffs_by_recurrence(p);
        CHECK_MESSAGE(coeffs_by_determinant(p) == ref, "p=" << p);
        CHECK_MESSAGE(coeffs_by_witmer(p) == ref, "p=" << p);
        CHECK_MESSAGE(coeffs_by_explicit(p) == ref, "p=" << p);
        if (p >= 3 && p % 2 == 1) CHECK_MESSAGE(odd_from_even(coeffs_by_recurrence(p - 1)) == ref, "p=" << p);
        CHECK(ref.f.back() == rat(1, p + 1));
        for (const auto& f : ref.f) CHECK_FALSE(f.is_zero());
        if (p <= 16) CHECK(ref == testing::fit_center_coeffs(p));
    }
}
