#pragma once

/**
 * @file ratnum.hpp
 * @brief Exact integers and rationals, plus the combinatorial helpers
 *        (binomials, double factorials, powers of two and four).
 *
 * Both types wrap GMP values. Rationals are kept in canonical form
 * (positive denominator, coprime numerator and denominator) after every
 * operation, so equality is structural.
 *
 * Every Rational arithmetic operation bumps a thread-local counter that
 * the benchmark reads to report machine-independent costs.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace faulhaber {

/// Base class for domain violations (bad degree, bad index range, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ZeroDenominatorError : public std::domain_error {
public:
    ZeroDenominatorError() : std::domain_error("zero denominator") {}
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Integer {
public:
    Integer() = default;
    Integer(std::int64_t v) : v_(static_cast<long>(v)) {}  // NOLINT: implicit by design of numeric types
    explicit Integer(mpz_class v) : v_(std::move(v)) {}

    /// Parses an optionally signed decimal string.
    static Integer parse(std::string_view text);

    [[nodiscard]] std::string to_string() const { return v_.get_str(10); }
    [[nodiscard]] const mpz_class& raw() const { return v_; }
    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool fits_int64() const { return v_.fits_slong_p(); }
    [[nodiscard]] std::int64_t to_int64() const;

    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.v_)); }

    /// Exact division; the caller guarantees that `d` divides `*this`.
    [[nodiscard]] Integer divexact(const Integer& d) const;

    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t v) : v_(static_cast<long>(v)) {}  // NOLINT
    Rational(const Integer& v) : v_(v.raw()) {}             // NOLINT
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "a/b" or an integer literal; either part may carry a sign.
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer numerator() const { return Integer(mpz_class(v_.get_num())); }
    [[nodiscard]] Integer denominator() const { return Integer(mpz_class(v_.get_den())); }
    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] const mpq_class& raw() const { return v_; }

    /// "num/den", or just "num" when the denominator is 1.
    [[nodiscard]] std::string to_string() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// @throws ZeroDenominatorError when dividing by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

/// Canonical num/den. @throws ZeroDenominatorError when den == 0.
Rational rat(const Integer& num, const Integer& den);

/// C(n, r) by the multiplicative running product; 0 when r < 0 or r > n.
/// @throws DomainError when n < 0.
Integer binomial(std::int64_t n, std::int64_t r);

/// n!! with 0!! = (-1)!! = 1. @throws DomainError when n < -1.
Integer double_factorial(std::int64_t n);

Integer factorial(std::int64_t n);

/// 2^e and 4^e for any sign of e.
Rational pow2(std::int64_t e);
Rational pow4(std::int64_t e);

/// Integer power of a rational, e >= 0.
Rational pow(const Rational& base, std::int64_t e);

/// (-1)^e as an integer.
inline std::int64_t sign_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

/// Number of Rational arithmetic operations performed on this thread.
std::uint64_t op_count();
void reset_op_count();

}  // namespace faulhaber
