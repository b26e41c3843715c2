#pragma once

#include <hpzeta/combinatorics.hpp>
#include <hpzeta/polynomial.hpp>

#include <algorithm>
#include <mutex>
#include <vector>

namespace hpzeta {

namespace detail {

struct BernoulliCache {
    std::mutex mutex;
    std::vector<QPolynomial> polys;   // B_0(t), B_1(t), ...
    std::vector<Rational> numbers;    // B_n = B_n(1)

    static constexpr unsigned kPrebuild = 64;

    static BernoulliCache& instance() {
        static BernoulliCache cache;
        return cache;
    }

    void extend_locked(unsigned n) {
        const unsigned want = polys.empty() ? std::max(n, kPrebuild) : n;
        while (polys.size() <= want) {
            const unsigned m = static_cast<unsigned>(polys.size());
            // sum_{k=0..m} C(m+1,k) B_k(t) = (m+1) t^m
            QPolynomial acc = QPolynomial::monomial(m);
            for (unsigned k = 0; k < m; ++k)
                acc -= polys[k].scaled(Rational(binomial(m + 1, k), Int(m) + 1));
            polys.push_back(std::move(acc));
            numbers.push_back(polys.back().eval(Rational(1)));
        }
    }
};

}  // namespace detail

/// Bernoulli polynomial B_n(t), exact; memoized up to 64 on first use and
/// extended on demand. Safe for concurrent callers.
inline QPolynomial bernoulli_poly(unsigned n) {
    auto& cache = detail::BernoulliCache::instance();
    std::lock_guard<std::mutex> lock(cache.mutex);
    if (cache.polys.size() <= n) cache.extend_locked(n);
    return cache.polys[n];
}

/// Bernoulli number B_n := B_n(1), so B_1 = +1/2.
inline Rational bernoulli_number(unsigned n) {
    auto& cache = detail::BernoulliCache::instance();
    std::lock_guard<std::mutex> lock(cache.mutex);
    if (cache.numbers.size() <= n) cache.extend_locked(n);
    return cache.numbers[n];
}

}  // namespace hpzeta
