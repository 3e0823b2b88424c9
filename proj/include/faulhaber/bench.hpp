#pragma once

// Timing and operation-count comparison of the coefficient methods.
//
// Every measured k computes both S_{2k} and S_{2k+1} from scratch with a
// fresh Bernoulli cache, so no method benefits from work done by another.

#include <cstdint>
#include <string>
#include <vector>

#include "faulhaber/coeffs.hpp"
#include "faulhaber/render.hpp"

namespace faulhaber {

struct BenchRow {
    std::int64_t k = 0;
    Method method = Method::recurrence;
    double wall_ms = 0.0;
    std::uint64_t rational_ops = 0;
    std::uint64_t checksum = 0;
};

struct BenchResult {
    std::int64_t k_max = 0;
    std::vector<BenchRow> rows;  // ordered by k, then method name

    /// True when all rows sharing a k report the same checksum.
    [[nodiscard]] bool consistent() const;
};

/// The default method set: recurrence, determinant, witmer, explicit.
std::vector<Method> default_bench_methods();

/// 1..10, then roughly geometric steps of 3/2, always ending at k_max.
std::vector<std::int64_t> bench_sample_points(std::int64_t k_max);

/// FNV-1a over the canonical strings of f (and the constant, if any).
std::uint64_t coeff_checksum(const FaulhaberCoeffs& c);

/// @throws DomainError when k_max < 1 or `methods` is empty.
BenchResult run_bench(std::int64_t k_max, const std::vector<Method>& methods);

Json to_json(const BenchResult& result);
std::string render_text(const BenchResult& result);

}  // namespace faulhaber
