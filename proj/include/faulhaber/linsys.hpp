#pragma once

/**
 * @file linsys.hpp
 * @brief The triangular coefficient systems and the structured Hessenberg
 *        determinants that solve them by Cramer's rule.
 *
 * For S_{2k} (even parity) equation j, j = 0..k, reads
 *
 *     sum_{m=j}^{k} 4^{j-m} C(2m+1, 2j) f_m = [j == k]
 *
 * and for S_{2k+1} (odd parity) the binomial is C(2m+2, 2j+1). Unknowns are
 * stored in ascending order f_0..f_k, so row j only has entries m >= j.
 *
 * The determinant matrices are written in the descending ordering
 * f_k, f_{k-1}, .., f_0 (equation k first). Reversing both rows and columns
 * is the same permutation applied twice, so determinants agree between the
 * two orderings and no sign correction is needed.
 */

#include <cstdint>
#include <vector>

#include "faulhaber/ratnum.hpp"

namespace faulhaber {

enum class Parity { even, odd };

const char* to_string(Parity p);

class SingularSystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Upper-triangular (in ascending unknown order) exact system of order k+1.
class TriangularSystem {
public:
    TriangularSystem(Parity parity, std::int64_t k, std::vector<std::vector<Rational>> rows,
                     std::vector<Rational> rhs);

    [[nodiscard]] Parity parity() const { return parity_; }
    [[nodiscard]] std::int64_t k() const { return k_; }
    [[nodiscard]] std::size_t order() const { return rhs_.size(); }

    /// Coefficient of f_m in equation j; zero for m < j.
    [[nodiscard]] Rational entry(std::size_t j, std::size_t m) const;
    [[nodiscard]] const Rational& diagonal(std::size_t j) const { return rows_[j][0]; }
    [[nodiscard]] const std::vector<Rational>& rhs() const { return rhs_; }

private:
    Parity parity_;
    std::int64_t k_;
    // rows_[j][m - j] holds entry(j, m) for m = j..k.
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
};

/// Square matrix with zeros above the first superdiagonal.
class HessenbergMatrix {
public:
    explicit HessenbergMatrix(std::size_t order);

    [[nodiscard]] std::size_t order() const { return order_; }
    [[nodiscard]] const Rational& operator()(std::size_t r, std::size_t c) const {
        return cells_[r * order_ + c];
    }
    /// @throws DomainError when c > r + 1.
    void set(std::size_t r, std::size_t c, Rational v);

private:
    std::size_t order_;
    std::vector<Rational> cells_;
};

/// @throws DomainError when k < 0.
TriangularSystem build_system(Parity parity, std::int64_t k);

/// Back-substitution; result is ordered f_0..f_k.
/// @throws SingularSystemError on a zero diagonal entry.
std::vector<Rational> solve_triangular(const TriangularSystem& sys);

/// The order-j matrix of Delta_j (even) or Delta'_j (odd) for degree k.
/// @throws DomainError unless 1 <= j <= k.
HessenbergMatrix build_delta(Parity parity, std::int64_t k, std::int64_t j);

/// Determinant by the lower-Hessenberg recurrence, O(n^2) operations.
/// The empty (order 0) matrix has determinant 1.
Rational determinant(const HessenbergMatrix& m);

/// |M_j|: product of the first j+1 diagonal entries of the system in the
/// descending ordering, i.e. (2k+1)!!/(2k-2j-1)!! for even parity and
/// (2k+2)!!/(2k-2j)!! for odd parity. @throws DomainError unless 0 <= j <= k.
Rational system_determinant(Parity parity, std::int64_t k, std::int64_t j);

}  // namespace faulhaber
