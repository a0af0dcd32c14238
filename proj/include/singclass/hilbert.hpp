// Plurigenus and log-Kodaira machinery for quasihomogeneous complete
// intersections.  Everything reduces to coefficients of the Hilbert series
//
//     H(t) = prod_i (1 - t^{d_i}) / prod_j (1 - t^{w_j}),  dim A_nu = [t^nu] H,
//
// together with the normal degree N = sum d_i - sum w_j:
//
//     delta_m = sum_{mu=0}^{m N} dim A_mu     (empty when m N < 0)
//     pbar_m  = dim A_{m N}
//     kbar    = -inf / 0 / dim V - 1  according to the sign of N.
#pragma once

#include "series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace singclass::hilbert {

struct WeightedCI {
    std::vector<long long> weights;  // w_1..w_{n+s}, all positive
    std::vector<long long> degrees;  // d_1..d_s, all positive
    // Modeling assumption, recorded but never verified here.
    bool isolated_singularity_assumed = true;

    WeightedCI(std::vector<long long> w, std::vector<long long> d,
               bool isolated_assumed = true)
        : weights(std::move(w)), degrees(std::move(d)),
          isolated_singularity_assumed(isolated_assumed) {
        for (long long x : weights)
            if (x <= 0) throw std::invalid_argument("WeightedCI: weights must be positive");
        for (long long x : degrees)
            if (x <= 0) throw std::invalid_argument("WeightedCI: degrees must be positive");
        if (weights.size() <= degrees.size())
            throw std::invalid_argument("WeightedCI: dim V = #weights - #degrees must be >= 1");
    }

    long long dimension() const {
        return static_cast<long long>(weights.size()) -
               static_cast<long long>(degrees.size());
    }
    long long codimension() const { return static_cast<long long>(degrees.size()); }

    SeriesSpec series(long long truncation) const {
        return SeriesSpec{degrees, weights, truncation};
    }
};

inline long long normal_degree(const WeightedCI& ci) {
    long long n = 0;
    for (long long d : ci.degrees) n = detail::checked_ll_add(n, d, "normal degree overflow");
    for (long long w : ci.weights) n = detail::checked_ll_add(n, -w, "normal degree overflow");
    return n;
}

struct KodairaDim {
    bool is_minus_infinity = true;
    long long value = 0;

    static KodairaDim minus_infinity() { return {}; }
    static KodairaDim of(long long v) { return {false, v}; }

    friend bool operator==(const KodairaDim& a, const KodairaDim& b) {
        return a.is_minus_infinity == b.is_minus_infinity &&
               (a.is_minus_infinity || a.value == b.value);
    }
    friend bool operator!=(const KodairaDim& a, const KodairaDim& b) { return !(a == b); }

    std::string str() const {
        return is_minus_infinity ? "-inf" : std::to_string(value);
    }
};

inline KodairaDim log_kodaira(const WeightedCI& ci) {
    long long n = normal_degree(ci);
    if (n < 0) return KodairaDim::minus_infinity();
    if (n == 0) return KodairaDim::of(0);
    return KodairaDim::of(ci.dimension() - 1);
}

namespace detail_h {

// The table builders run entirely in machine words with overflow checks and
// are retried wholesale with big integers on overflow; both paths are exact.

template <class IntT>
inline std::vector<Int> delta_pass(const WeightedCI& ci, long long n, long long m_max) {
    long long order = singclass::detail::checked_ll_mul(m_max, n, "truncation overflow");
    std::vector<IntT> dims = series_coeffs<IntT>(ci.series(order));
    std::vector<Int> out(static_cast<std::size_t>(m_max));
    IntT acc(0);
    std::size_t mu = 0;
    for (long long m = 1; m <= m_max; ++m) {
        for (; mu <= static_cast<std::size_t>(m * n); ++mu)
            singclass::detail::checked_acc(acc, dims[mu], false);
        out[static_cast<std::size_t>(m - 1)] = Int(acc);
    }
    return out;
}

template <class IntT>
inline std::vector<Int> pbar_pass(const WeightedCI& ci, long long n, long long m_max) {
    long long order = singclass::detail::checked_ll_mul(m_max, n, "truncation overflow");
    std::vector<IntT> dims = series_coeffs<IntT>(ci.series(order));
    std::vector<Int> out(static_cast<std::size_t>(m_max));
    for (long long m = 1; m <= m_max; ++m)
        out[static_cast<std::size_t>(m - 1)] = Int(dims[static_cast<std::size_t>(m * n)]);
    return out;
}

template <class IntT>
inline Int dim_pass(const WeightedCI& ci, long long nu) {
    return Int(series_coeffs<IntT>(ci.series(nu)).back());
}

}  // namespace detail_h

inline Int graded_dim(const WeightedCI& ci, long long nu) {
    if (nu < 0) return 0;
    try {
        return detail_h::dim_pass<long long>(ci, nu);
    } catch (const std::overflow_error&) {
        return detail_h::dim_pass<Int>(ci, nu);
    }
}

inline std::vector<Int> delta_table(const WeightedCI& ci, long long m_max) {
    if (m_max < 1) throw std::invalid_argument("delta_table: m_max must be >= 1");
    long long n = normal_degree(ci);
    if (n < 0) return std::vector<Int>(static_cast<std::size_t>(m_max), Int(0));
    try {
        return detail_h::delta_pass<long long>(ci, n, m_max);
    } catch (const std::overflow_error&) {
        return detail_h::delta_pass<Int>(ci, n, m_max);
    }
}

inline std::vector<Int> pbar_table(const WeightedCI& ci, long long m_max) {
    if (m_max < 1) throw std::invalid_argument("pbar_table: m_max must be >= 1");
    long long n = normal_degree(ci);
    if (n < 0) return std::vector<Int>(static_cast<std::size_t>(m_max), Int(0));
    try {
        return detail_h::pbar_pass<long long>(ci, n, m_max);
    } catch (const std::overflow_error&) {
        return detail_h::pbar_pass<Int>(ci, n, m_max);
    }
}

// Whether delta_m = 0 for every m <= m_max, evaluated left to right and
// stopping at the first nonzero entry.
inline bool deltas_all_zero(const WeightedCI& ci, long long m_max) {
    if (m_max < 1) throw std::invalid_argument("deltas_all_zero: m_max must be >= 1");
    long long n = normal_degree(ci);
    if (n < 0) return true;
    try {  // delta_1 alone needs the series only up to order N.
        auto dims = series_coeffs<long long>(ci.series(n));
        long long d1 = 0;
        for (long long c : dims) d1 = singclass::detail::checked_ll_add(d1, c, "delta overflow");
        if (d1 != 0) return false;
    } catch (const std::overflow_error&) {
        // fall through to the exact big-integer table
    }
    for (const Int& d : delta_table(ci, m_max))
        if (d != 0) return false;
    return true;
}

struct CIReport {
    long long normal_degree = 0;
    bool is_rational = false;
    KodairaDim log_kodaira;
    std::vector<Int> delta;  // delta_1..delta_{m_max}
    std::vector<Int> pbar;   // pbar_1..pbar_{m_max}
    std::optional<bool> is_quotient_surface;      // surfaces only
    std::optional<bool> quasirational_form_test;  // surfaces only: dim A_N == 0
    bool isolated_singularity_assumed = true;
};

inline CIReport classify_ci(const WeightedCI& ci, long long m_max) {
    CIReport r;
    r.normal_degree = normal_degree(ci);
    r.is_rational = r.normal_degree < 0;
    r.log_kodaira = log_kodaira(ci);
    r.delta = delta_table(ci, m_max);
    r.pbar = pbar_table(ci, m_max);
    r.isolated_singularity_assumed = ci.isolated_singularity_assumed;
    if (ci.dimension() == 2) {
        // For a complete intersection, delta_m = 0 for all m is equivalent to
        // N < 0: whenever m N >= 0 the sum contains dim A_0 = 1.
        r.is_quotient_surface = r.normal_degree < 0;
        r.quasirational_form_test = (graded_dim(ci, r.normal_degree) == 0);
    }
    return r;
}

struct VeroneseReport {
    long long veronese_degree = 1;  // the d of the Z_d quotient
    long long normal_degree = 0;    // N of the covering surface
    std::vector<Int> delta;         // delta_m of the quotient W
    std::vector<Int> pbar;          // pbar_m of W (= pbar_m of V)
    bool is_rational = false;
    bool is_quotient = false;
    KodairaDim log_kodaira;
    // Smallest quotient degree making W rational, when one exists.
    std::optional<long long> min_rational_veronese_degree;
};

namespace detail_h {

template <class IntT>
inline void veronese_tables(const WeightedCI& ci, long long n, long long d,
                            long long m_max, VeroneseReport& r) {
    long long order =
        n > 0 ? singclass::detail::checked_ll_mul(m_max, n, "truncation overflow") : 0;
    std::vector<IntT> dims = series_coeffs<IntT>(ci.series(order));
    auto dim_at = [&](long long nu) -> IntT {
        if (nu < 0) return IntT(0);
        return dims[static_cast<std::size_t>(nu)];
    };

    r.delta.assign(static_cast<std::size_t>(m_max), Int(0));
    for (long long m = 1; m <= m_max; ++m) {
        IntT sum(0);
        for (long long idx = m * n; idx >= 0; idx -= d)
            singclass::detail::checked_acc(sum, dim_at(idx), false);
        r.delta[static_cast<std::size_t>(m - 1)] = Int(sum);
    }

    // (omega_B)_{<=0} = 0  <=>  dim A_{N - k d} = 0 for every k >= 0.
    bool rational = true;
    for (long long idx = n; idx >= 0; idx -= d)
        if (dim_at(idx) != 0) { rational = false; break; }
    r.is_rational = rational;

    r.min_rational_veronese_degree.reset();
    if (n < 0) {
        r.min_rational_veronese_degree = 1;
    } else if (dim_at(n) == 0) {
        for (long long cand = 1; cand <= n + 1; ++cand) {
            bool ok = true;
            for (long long idx = n - cand; idx >= 0; idx -= cand)
                if (dim_at(idx) != 0) { ok = false; break; }
            if (ok) { r.min_rational_veronese_degree = cand; break; }
        }
    }
}

}  // namespace detail_h

// Invariants of W = V / Z_d where V is the surface Spec A and Z_d acts
// through the grading: the coordinate ring of W is the Veronese subring
// B = (+)_i A_{i d}, and (omega_B^{[m]})_i = A_{i d + m N}.
inline VeroneseReport veronese_analysis(const WeightedCI& ci, long long d,
                                        long long m_max) {
    if (ci.dimension() != 2)
        throw std::invalid_argument("veronese_analysis: surface (dim 2) input required");
    if (d < 1) throw std::invalid_argument("veronese_analysis: quotient degree must be >= 1");
    if (m_max < 1) throw std::invalid_argument("veronese_analysis: m_max must be >= 1");

    VeroneseReport r;
    r.veronese_degree = d;
    long long n = normal_degree(ci);
    r.normal_degree = n;
    r.pbar = pbar_table(ci, m_max);
    r.is_quotient = n < 0;
    r.log_kodaira = log_kodaira(ci);
    try {
        detail_h::veronese_tables<long long>(ci, n, d, m_max, r);
    } catch (const std::overflow_error&) {
        detail_h::veronese_tables<Int>(ci, n, d, m_max, r);
    }
    return r;
}

}  // namespace singclass::hilbert
