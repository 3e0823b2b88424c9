#include "faulhaber/bernoulli.hpp"

#include <string>

namespace faulhaber {

namespace {

void check_index(std::int64_t r) {
    if (r < 0) throw DomainError("Bernoulli index must be non-negative, got " + std::to_string(r));
}

}  // namespace

BernoulliCache::BernoulliCache() {
    table_ = {Rational(1), rat(-1, 2)};
    half_table_ = {Rational(1), Rational(0)};
}

void BernoulliCache::grow_to(std::size_t r) {
    table_.reserve(r + 1);
    half_table_.reserve(r + 1);
    for (std::size_t m = table_.size(); m <= r; ++m) {
        Rational b;
        if (m % 2 == 0) {
            // B_m = -1/(m+1) * sum_{i<m} C(m+1, i) B_i; odd i >= 3 contribute nothing.
            const auto mi = static_cast<std::int64_t>(m);
            Rational sum;
            for (std::int64_t i = 0; i < mi; ++i) {
                if (i >= 3 && i % 2 == 1) continue;
                sum += Rational(binomial(mi + 1, i)) * table_[static_cast<std::size_t>(i)];
            }
            b = -sum / Rational(mi + 1);
        }
        Rational h = (pow2(1 - static_cast<std::int64_t>(m)) - Rational(1)) * b;
        table_.push_back(std::move(b));
        half_table_.push_back(std::move(h));
    }
}

Rational BernoulliCache::number(std::int64_t r) {
    check_index(r);
    std::lock_guard lock(mutex_);
    grow_to(static_cast<std::size_t>(r));
    return table_[static_cast<std::size_t>(r)];
}

Rational BernoulliCache::half(std::int64_t r) {
    check_index(r);
    std::lock_guard lock(mutex_);
    grow_to(static_cast<std::size_t>(r));
    return half_table_[static_cast<std::size_t>(r)];
}

std::size_t BernoulliCache::size() const {
    std::lock_guard lock(mutex_);
    return table_.size();
}

BernoulliCache& default_bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

Rational bernoulli_number(std::int64_t r) { return default_bernoulli_cache().number(r); }
Rational bernoulli_half(std::int64_t r) { return default_bernoulli_cache().half(r); }

}  // namespace faulhaber
