#pragma once

/**
 * @file bernoulli.hpp
 * @brief Memoized Bernoulli numbers B_r and half-argument values B_r(1/2).
 *
 * Convention: B_1 = -1/2. The alternate B_1 = +1/2 convention is not
 * supported; every formula downstream assumes the negative sign.
 *
 * B_r is generated from sum_{i=0}^{m} C(m+1, i) B_i = 0 solved for B_m, and
 * B_r(1/2) = (2^{1-r} - 1) B_r. The table grows densely from index 0 up to
 * the largest index requested, and existing entries are never rewritten.
 */

#include <cstdint>
#include <mutex>
#include <vector>

#include "faulhaber/ratnum.hpp"

namespace faulhaber {

class BernoulliCache {
public:
    BernoulliCache();

    /// B_r. @throws DomainError when r < 0.
    Rational number(std::int64_t r);
    /// B_r(1/2). @throws DomainError when r < 0.
    Rational half(std::int64_t r);

    /// Number of populated entries.
    std::size_t size() const;

private:
    void grow_to(std::size_t r);  // caller holds mutex_

    mutable std::mutex mutex_;
    std::vector<Rational> table_;
    std::vector<Rational> half_table_;
};

/// Process-wide cache shared by the free functions below.
BernoulliCache& default_bernoulli_cache();

Rational bernoulli_number(std::int64_t r);
Rational bernoulli_half(std::int64_t r);

}  // namespace faulhaber
