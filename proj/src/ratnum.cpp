#include "faulhaber/ratnum.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace faulhaber {

namespace {

thread_local std::uint64_t g_ops = 0;

bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_mpz(std::string_view s) {
    if (!is_decimal_integer(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

std::uint64_t op_count() { return g_ops; }
void reset_op_count() { g_ops = 0; }

// ---- Integer ---------------------------------------------------------------

Integer Integer::parse(std::string_view text) { return Integer(parse_mpz(text)); }

std::int64_t Integer::to_int64() const {
    if (!fits_int64()) throw DomainError("integer does not fit in 64 bits: " + to_string());
    return v_.get_si();
}

Integer Integer::divexact(const Integer& d) const {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
    return Integer(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

// ---- Rational --------------------------------------------------------------

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer::parse(text));
    return rat(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str(10);
    return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

Rational& Rational::operator+=(const Rational& o) {
    ++g_ops;
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    ++g_ops;
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    ++g_ops;
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDenominatorError();
    ++g_ops;
    v_ /= o.v_;
    return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

Rational rat(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw ZeroDenominatorError();
    return Rational(mpq_class(num.raw(), den.raw()));
}

// ---- combinatorics ---------------------------------------------------------

Integer binomial(std::int64_t n, std::int64_t r) {
    if (n < 0) throw DomainError("binomial: n must be non-negative, got " + std::to_string(n));
    if (r < 0 || r > n) return Integer(0);
    r = std::min(r, n - r);
    // After step i the accumulator holds C(n - r + i, i), so each division is exact.
    mpz_class acc = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        acc *= static_cast<unsigned long>(n - r + i);
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return Integer(std::move(acc));
}

Integer double_factorial(std::int64_t n) {
    if (n < -1) throw DomainError("double_factorial: n must be >= -1, got " + std::to_string(n));
    mpz_class acc = 1;
    for (std::int64_t i = n; i > 1; i -= 2) acc *= static_cast<unsigned long>(i);
    return Integer(std::move(acc));
}

Integer factorial(std::int64_t n) {
    if (n < 0) throw DomainError("factorial: n must be non-negative");
    mpz_class acc = 1;
    for (std::int64_t i = 2; i <= n; ++i) acc *= static_cast<unsigned long>(i);
    return Integer(std::move(acc));
}

Rational pow2(std::int64_t e) {
    mpz_class p = 1;
    const auto mag = static_cast<mp_bitcnt_t>(e < 0 ? -e : e);
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), mag);
    if (e >= 0) return Rational(mpq_class(p));
    return Rational(mpq_class(mpz_class(1), p));
}

Rational pow4(std::int64_t e) { return pow2(2 * e); }

Rational pow(const Rational& base, std::int64_t e) {
    if (e < 0) throw DomainError("pow: negative exponent");
    Rational result(1);
    Rational b = base;
    while (e > 0) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return result;
}

}  // namespace faulhaber
