#include "faulhaber/linsys.hpp"

#include <string>

namespace faulhaber {

namespace {

// Coefficient of f_m in equation j: 4^{j-m} C(2m+1, 2j) or 4^{j-m} C(2m+2, 2j+1).
Rational system_entry(Parity parity, std::int64_t j, std::int64_t m) {
    const Integer c = parity == Parity::even ? binomial(2 * m + 1, 2 * j)
                                             : binomial(2 * m + 2, 2 * j + 1);
    return pow4(j - m) * Rational(c);
}

}  // namespace

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

TriangularSystem::TriangularSystem(Parity parity, std::int64_t k,
                                   std::vector<std::vector<Rational>> rows,
                                   std::vector<Rational> rhs)
    : parity_(parity), k_(k), rows_(std::move(rows)), rhs_(std::move(rhs)) {
    if (rows_.size() != rhs_.size()) throw DomainError("system: row/rhs length mismatch");
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        if (rows_[j].size() != rows_.size() - j) throw DomainError("system: malformed row");
    }
}

Rational TriangularSystem::entry(std::size_t j, std::size_t m) const {
    if (m < j) return Rational(0);
    return rows_[j][m - j];
}

HessenbergMatrix::HessenbergMatrix(std::size_t order) : order_(order), cells_(order * order) {}

void HessenbergMatrix::set(std::size_t r, std::size_t c, Rational v) {
    if (c > r + 1 && !v.is_zero()) throw DomainError("Hessenberg: nonzero entry above superdiagonal");
    cells_[r * order_ + c] = std::move(v);
}

TriangularSystem build_system(Parity parity, std::int64_t k) {
    if (k < 0) throw DomainError("build_system: k must be non-negative, got " + std::to_string(k));
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(k + 1));
    for (std::int64_t j = 0; j <= k; ++j) {
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(k - j + 1));
        for (std::int64_t m = j; m <= k; ++m) row.push_back(system_entry(parity, j, m));
        rows.push_back(std::move(row));
    }
    std::vector<Rational> rhs(static_cast<std::size_t>(k + 1));
    rhs.back() = Rational(1);
    return TriangularSystem(parity, k, std::move(rows), std::move(rhs));
}

std::vector<Rational> solve_triangular(const TriangularSystem& sys) {
    const std::size_t n = sys.order();
    std::vector<Rational> x(n);
    for (std::size_t jj = n; jj-- > 0;) {
        const Rational& d = sys.diagonal(jj);
        if (d.is_zero()) throw SingularSystemError("zero diagonal at row " + std::to_string(jj));
        Rational acc = sys.rhs()[jj];
        for (std::size_t m = jj + 1; m < n; ++m) acc -= sys.entry(jj, m) * x[m];
        x[jj] = acc / d;
    }
    return x;
}

HessenbergMatrix build_delta(Parity parity, std::int64_t k, std::int64_t j) {
    if (j < 1 || j > k) {
        throw DomainError("build_delta: need 1 <= j <= k, got j=" + std::to_string(j) +
                          ", k=" + std::to_string(k));
    }
    // Row r is equation k-r-1, column c is unknown f_{k-c}.
    HessenbergMatrix h(static_cast<std::size_t>(j));
    for (std::int64_t r = 0; r < j; ++r) {
        for (std::int64_t c = 0; c <= std::min(r + 1, j - 1); ++c) {
            h.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c),
                  system_entry(parity, k - r - 1, k - c));
        }
    }
    return h;
}

Rational determinant(const HessenbergMatrix& h) {
    // d[i] is the leading principal minor of order i. Expanding the order-i
    // minor along its last row:
    //   d[i] = sum_{m=1}^{i} (-1)^{i-m} h(i-1, m-1) * prod_{t=m}^{i-1} h(t-1, t) * d[m-1]
    const std::size_t n = h.order();
    std::vector<Rational> d(n + 1);
    d[0] = Rational(1);
    for (std::size_t i = 1; i <= n; ++i) {
        Rational acc;
        Rational super(1);  // running product of superdiagonal entries h(t-1, t), t = m..i-1
        for (std::size_t m = i; m >= 1; --m) {
            if (m < i) super *= h(m - 1, m);
            if (super.is_zero()) break;
            Rational term = h(i - 1, m - 1) * super * d[m - 1];
            if ((i - m) % 2 == 1) acc -= term;
            else acc += term;
        }
        d[i] = std::move(acc);
    }
    return d[n];
}

Rational system_determinant(Parity parity, std::int64_t k, std::int64_t j) {
    if (j < 0 || j > k) {
        throw DomainError("system_determinant: need 0 <= j <= k, got j=" + std::to_string(j) +
                          ", k=" + std::to_string(k));
    }
    Rational prod(1);
    for (std::int64_t c = 0; c <= j; ++c) prod *= system_entry(parity, k - c, k - c);
    return prod;
}

}  // namespace faulhaber
