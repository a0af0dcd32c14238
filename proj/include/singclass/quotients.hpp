// Cyclic quotient surface singularities C^2 / <diag(zeta, zeta^e)> with
// zeta a primitive d-th root of unity and gcd(e, d) = 1: Hirzebruch-Jung
// continued fractions, minimal invariant-monomial generators, the
// determinant-one (Gorenstein) test, and descent of the derivation
// d(X) = 0, d(Y) = X^e to the invariant ring.
#pragma once

#include "lnd.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace singclass::quotients {

struct CyclicQuotientData {
    long long order;  // d >= 2
    long long twist;  // e with 1 <= e < d, gcd(e, d) = 1

    CyclicQuotientData(long long d, long long e) : order(d), twist(e) {
        if (d < 2) throw std::invalid_argument("cyclic: order must be >= 2");
        if (e < 1 || e >= d)
            throw std::invalid_argument("cyclic: twist must satisfy 1 <= e < d");
        if (std::gcd(e, d) != 1)
            throw std::invalid_argument("cyclic: twist must be coprime to the order");
    }
};

using HJString = std::vector<long long>;

// The unique expansion d/e = a_1 - 1/(a_2 - 1/(... )) with all a_i >= 2:
// a = ceil(num/den), then (num, den) <- (den, a*den - num).
inline HJString hj_expansion(const CyclicQuotientData& q) {
    HJString out;
    long long num = q.order, den = q.twist;
    while (den != 0) {
        long long a = (num + den - 1) / den;
        out.push_back(a);
        long long next = a * den - num;
        num = den;
        den = next;
    }
    return out;
}

// Value of a_1 - 1/(a_2 - 1/(...)) as an exact fraction, folded from the
// right; the reverse of hj_expansion.
inline Rat hj_evaluate(const HJString& s) {
    if (s.empty()) throw std::invalid_argument("hj: empty string");
    Rat v = s.back();
    for (auto it = s.rbegin() + 1; it != s.rend(); ++it) v = Rat(*it) - 1 / v;
    return v;
}

// Minimal generating set of {(a, b) in N^2 : a + e b = 0 mod d}, by brute
// force over the box [0, d]^2 followed by an irredundancy filter.  The box
// suffices: (d, 0) and (0, d) are invariant, so any element with a > d or
// b > d splits off one of them.
inline std::vector<std::pair<long long, long long>> invariant_generators(
    const CyclicQuotientData& q) {
    const long long d = q.order, e = q.twist;
    std::set<std::pair<long long, long long>> box;
    for (long long a = 0; a <= d; ++a)
        for (long long b = 0; b <= d; ++b)
            if ((a != 0 || b != 0) && (a + e * b) % d == 0) box.insert({a, b});

    std::vector<std::pair<long long, long long>> gens;
    for (const auto& [a, b] : box) {
        bool splits = false;
        for (const auto& [a2, b2] : box) {
            if (a2 > a || b2 > b) continue;
            if (a2 == a && b2 == b) continue;
            if (box.count({a - a2, b - b2})) {
                splits = true;
                break;
            }
        }
        if (!splits) gens.push_back({a, b});
    }
    std::sort(gens.begin(), gens.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    return gens;
}

// diag(zeta, zeta^e) lies in SL(2) exactly when e = d - 1.
inline bool is_gorenstein(const CyclicQuotientData& q) {
    return q.twist == q.order - 1;
}

struct DescendedImage {
    std::pair<long long, long long> generator;  // x^a y^b
    // image: coefficient * x^(a+e) y^(b-1); coefficient b, zero when b = 0
    long long coefficient = 0;
    std::optional<std::pair<long long, long long>> image_monomial;
    bool image_invariant = true;
};

struct DescendedDerivation {
    long long order = 0;
    long long twist = 0;
    std::vector<DescendedImage> images;
    bool all_images_invariant = true;

    // Presentation on generator coordinates, when one is emitted:
    //  - e = d-1: u = x^d, w = x y, v = y^d with d(u) = 0, d(w) = u,
    //    d(v) = d * w^(d-1) and the relation u v - w^d;
    //  - e = 1: the chain g_i = x^(d-i) y^i with d(g_i) = i * g_{i-1}.
    std::optional<lnd::Derivation> presentation;
    std::optional<Poly> presented_relation;
    std::optional<bool> relation_annihilated;
};

// d(X) = 0, d(Y) = X^e sends the invariant monomial x^a y^b to
// b x^(a+e) y^(b-1), which is again invariant:
// (a+e) + e(b-1) = a + e b (mod d).
inline DescendedDerivation descend_lnd(const CyclicQuotientData& q) {
    const long long d = q.order, e = q.twist;
    DescendedDerivation out;
    out.order = d;
    out.twist = e;

    for (const auto& gen : invariant_generators(q)) {
        DescendedImage img;
        img.generator = gen;
        const auto [a, b] = gen;
        if (b == 0) {
            img.coefficient = 0;
            img.image_invariant = true;
        } else {
            img.coefficient = b;
            img.image_monomial = {a + e, b - 1};
            img.image_invariant = ((a + e) + e * (b - 1)) % d == 0;
        }
        out.all_images_invariant = out.all_images_invariant && img.image_invariant;
        out.images.push_back(std::move(img));
    }

    if (e == d - 1) {
        std::vector<std::string> vars{"u", "w", "v"};
        Poly u = Poly::var(vars, "u");
        Poly w = Poly::var(vars, "w");
        Poly v = Poly::var(vars, "v");
        std::vector<Poly> images{Poly(vars), u,
                                 Scalar(d) * w.pow(static_cast<unsigned long long>(d - 1))};
        out.presentation = lnd::Derivation(vars, std::move(images));
        out.presented_relation = u * v - w.pow(static_cast<unsigned long long>(d));
        out.relation_annihilated =
            out.presentation->apply(*out.presented_relation).is_zero();
    } else if (e == 1) {
        std::vector<std::string> vars;
        for (long long i = 0; i <= d; ++i) vars.push_back("g" + std::to_string(i));
        std::vector<Poly> images;
        images.push_back(Poly(vars));
        for (long long i = 1; i <= d; ++i)
            images.push_back(Scalar(i) * Poly::var(vars, "g" + std::to_string(i - 1)));
        out.presentation = lnd::Derivation(vars, std::move(images));
    }
    return out;
}

}  // namespace singclass::quotients
