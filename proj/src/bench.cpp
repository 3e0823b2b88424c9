#include "faulhaber/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <map>
#include <sstream>

#include "faulhaber/bernoulli.hpp"

namespace faulhaber {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

void fnv_mix(std::uint64_t& h, std::string_view s) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= kFnvPrime;
    }
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// Degree-2k and degree-2k+1 coefficients by one method.
std::pair<FaulhaberCoeffs, FaulhaberCoeffs> compute_pair(std::int64_t k, Method m,
                                                         BernoulliCache& cache) {
    if (m == Method::derivative) {
        FaulhaberCoeffs even = compute_coeffs(2 * k, Method::recurrence, cache);
        FaulhaberCoeffs odd = odd_from_even(even);
        return {std::move(even), std::move(odd)};
    }
    return {compute_coeffs(2 * k, m, cache), compute_coeffs(2 * k + 1, m, cache)};
}

}  // namespace

bool BenchResult::consistent() const {
    std::map<std::int64_t, std::uint64_t> seen;
    for (const auto& r : rows) {
        auto [it, inserted] = seen.emplace(r.k, r.checksum);
        if (!inserted && it->second != r.checksum) return false;
    }
    return true;
}

std::vector<Method> default_bench_methods() {
    return {Method::recurrence, Method::determinant, Method::witmer, Method::explicit_bernoulli};
}

std::vector<std::int64_t> bench_sample_points(std::int64_t k_max) {
    std::vector<std::int64_t> ks;
    for (std::int64_t k = 1; k <= std::min<std::int64_t>(k_max, 10); ++k) ks.push_back(k);
    std::int64_t k = 10;
    while (true) {
        k = (k * 3 + 1) / 2;
        if (k >= k_max) break;
        ks.push_back(k);
    }
    if (ks.empty() || ks.back() != k_max) ks.push_back(k_max);
    return ks;
}

std::uint64_t coeff_checksum(const FaulhaberCoeffs& c) {
    std::uint64_t h = kFnvOffset;
    for (const auto& f : c.f) {
        fnv_mix(h, f.to_string());
        fnv_mix(h, ",");
    }
    if (c.constant) {
        fnv_mix(h, ";");
        fnv_mix(h, c.constant->to_string());
    }
    return h;
}

BenchResult run_bench(std::int64_t k_max, const std::vector<Method>& methods) {
    if (k_max < 1) throw DomainError("bench: k_max must be >= 1");
    if (methods.empty()) throw DomainError("bench: no methods requested");
    std::vector<Method> ordered = methods;
    std::sort(ordered.begin(), ordered.end(), [](Method a, Method b) {
        return std::string_view(to_string(a)) < std::string_view(to_string(b));
    });
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

    BenchResult result;
    result.k_max = k_max;
    for (std::int64_t k : bench_sample_points(k_max)) {
        for (Method m : ordered) {
            BernoulliCache cache;
            reset_op_count();
            const auto start = std::chrono::steady_clock::now();
            const auto [even, odd] = compute_pair(k, m, cache);
            const auto stop = std::chrono::steady_clock::now();
            BenchRow row;
            row.k = k;
            row.method = m;
            row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
            row.rational_ops = op_count();
            std::uint64_t h = coeff_checksum(even);
            h ^= coeff_checksum(odd) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            row.checksum = h;
            result.rows.push_back(row);
        }
    }
    return result;
}

Json to_json(const BenchResult& result) {
    Json j;
    j["k_max"] = result.k_max;
    j["consistent"] = result.consistent();
    Json rows = Json::array();
    for (const auto& r : result.rows) {
        Json e;
        e["k"] = r.k;
        e["method"] = to_string(r.method);
        e["wall_ms"] = r.wall_ms;
        e["rational_ops"] = r.rational_ops;
        e["checksum"] = hex64(r.checksum);
        rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string render_text(const BenchResult& result) {
    std::ostringstream os;
    os << std::left << std::setw(6) << "k" << std::setw(13) << "method" << std::right
       << std::setw(12) << "wall_ms" << std::setw(14) << "rational_ops" << "  checksum\n";
    for (const auto& r : result.rows) {
        os << std::left << std::setw(6) << r.k << std::setw(13) << to_string(r.method) << std::right
           << std::setw(12) << std::fixed << std::setprecision(3) << r.wall_ms << std::setw(14)
           << r.rational_ops << "  " << hex64(r.checksum) << "\n";
    }
    os << (result.consistent() ? "checksums consistent" : "CHECKSUM MISMATCH") << "\n";
    return os.str();
}

}  // namespace faulhaber
