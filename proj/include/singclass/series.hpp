// Truncated power-series coefficients of rational functions of the shape
//
//     prod_i (1 - t^{d_i})  /  prod_j (1 - t^{w_j})
//
// computed by exact in-place convolution: one descending pass per numerator
// factor, one ascending (geometric) pass per denominator factor.
#pragma once

#include "poly.hpp"

#include <type_traits>
#include <vector>

namespace singclass {

// Refuse expansions whose coefficient array would not fit in memory anyway.
inline constexpr long long max_series_truncation = 200'000'000;

struct SeriesSpec {
    std::vector<long long> numerator_exponents;    // d_1..d_s
    std::vector<long long> denominator_exponents;  // w_1..w_{n+s}
    long long truncation = 0;                      // N >= 0

    void validate() const {
        for (long long d : numerator_exponents)
            if (d <= 0) throw std::invalid_argument("SeriesSpec: exponents must be positive");
        for (long long w : denominator_exponents)
            if (w <= 0) throw std::invalid_argument("SeriesSpec: exponents must be positive");
        if (truncation < 0) throw std::invalid_argument("SeriesSpec: negative truncation");
        if (truncation > max_series_truncation)
            throw std::overflow_error("SeriesSpec: truncation order too large");
    }
};

namespace detail {

template <class T>
inline void checked_acc(T& a, const T& b, bool subtract) {
    if constexpr (std::is_integral_v<T>) {
        T r;
        bool bad = subtract ? __builtin_sub_overflow(a, b, &r)
                            : __builtin_add_overflow(a, b, &r);
        if (bad) throw std::overflow_error("series coefficient overflow");
        a = r;
    } else {
        if (subtract)
            a -= b;
        else
            a += b;
    }
}

}  // namespace detail

template <class IntT = Int>
std::vector<IntT> series_coeffs(const SeriesSpec& spec) {
    spec.validate();
    const std::size_t n = static_cast<std::size_t>(spec.truncation);
    std::vector<IntT> c(n + 1, IntT(0));
    c[0] = IntT(1);
    for (long long d : spec.numerator_exponents) {
        if (d > spec.truncation) continue;
        const std::size_t ud = static_cast<std::size_t>(d);
        for (std::size_t k = n; k >= ud; --k) {
            detail::checked_acc(c[k], c[k - ud], true);
            if (k == ud) break;
        }
    }
    for (long long w : spec.denominator_exponents) {
        if (w > spec.truncation) continue;
        const std::size_t uw = static_cast<std::size_t>(w);
        for (std::size_t k = uw; k <= n; ++k)
            detail::checked_acc(c[k], c[k - uw], false);
    }
    return c;
}

}  // namespace singclass
