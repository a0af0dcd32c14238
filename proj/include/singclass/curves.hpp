// The classical polynomial parametrizations of x^p + y^q + z^r = 0 and the
// exact machinery that verifies them: each identity is stored in the normal
// form  sum_i  c_i * f_i(s)^{e_i} = 0  and checked by full expansion.
#pragma once

#include "poly.hpp"

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace singclass::curves {

struct IdentityComponent {
    Scalar constant;
    Poly polynomial;
    long long exponent;
};

enum class IdentityStatus { as_printed, documented_variant };

struct WeightedFermatIdentity {
    std::string name;
    std::array<long long, 3> exponents{};  // the Fermat exponents (p, q, r)
    std::vector<IdentityComponent> components;
    std::string note;
    IdentityStatus status = IdentityStatus::as_printed;
};

struct VerificationReport {
    bool holds = false;
    std::optional<Exponents> first_mismatch_exponent;
    std::optional<Scalar> first_mismatch_coefficient;
    std::array<long long, 3> component_degrees{};  // of the expanded c_i f_i^{e_i}
    std::array<bool, 3> pairwise_coprime{};        // (0,1), (0,2), (1,2)
    bool any_component_constant = false;
};

namespace detail_c {

inline std::vector<std::string> svar() { return {"s"}; }

inline Poly s_power(long long e) {
    return Poly::monomial(svar(), {e}, Scalar(1));
}

inline Poly from_coeffs(const std::vector<std::pair<long long, Scalar>>& terms) {
    Poly p(svar());
    for (const auto& [e, c] : terms) p = p + Poly::monomial(svar(), {e}, c);
    return p;
}

}  // namespace detail_c

// (s^d + 1)^2 - (s^d - 1)^2 - 4 s^d = 0, exponents (2, 2, d).
inline WeightedFermatIdentity dihedral_identity(long long d) {
    if (d < 2) throw std::invalid_argument("dihedral: parameter d must be >= 2");
    using namespace detail_c;
    Poly one = Poly::constant(svar(), Scalar(1));
    WeightedFermatIdentity id;
    id.name = "dihedral:" + std::to_string(d);
    id.exponents = {2, 2, d};
    id.components = {
        {Scalar(1), s_power(d) + one, 2},
        {Scalar(-1), s_power(d) - one, 2},
        {Scalar(-4), s_power(1), d},
    };
    id.note = "dihedral family, parameter d = " + std::to_string(d);
    id.status = IdentityStatus::as_printed;
    return id;
}

// 12*sqrt(3)*(s*(1+s^4))^2 - (1+2*sqrt(3)*s^2-s^4)^3 + (1-2*sqrt(3)*s^2-s^4)^3 = 0
// over Q(sqrt(3)), exponents (2, 3, 3).
inline WeightedFermatIdentity tetrahedral_identity() {
    using namespace detail_c;
    Scalar r3 = Scalar::sqrt_of(3);
    Poly x = from_coeffs({{1, Scalar(1)}, {5, Scalar(1)}});  // s*(1+s^4)
    Poly a = from_coeffs({{0, Scalar(1)}, {2, Scalar(2) * r3}, {4, Scalar(-1)}});
    Poly b = from_coeffs({{0, Scalar(1)}, {2, Scalar(-2) * r3}, {4, Scalar(-1)}});
    WeightedFermatIdentity id;
    id.name = "tetrahedral";
    id.exponents = {2, 3, 3};
    id.components = {
        {Scalar(12) * r3, x, 2},
        {Scalar(-1), a, 3},
        {Scalar(1), b, 3},
    };
    id.note = "tetrahedral triple, coefficients in Q(sqrt(3))";
    id.status = IdentityStatus::as_printed;
    return id;
}

namespace detail_c {

inline Poly octa_phi() {  // 1 - 33 s^4 - 33 s^8 + s^12
    return from_coeffs({{0, Scalar(1)}, {4, Scalar(-33)}, {8, Scalar(-33)}, {12, Scalar(1)}});
}
inline Poly octa_chi() {  // 1 + 14 s^4 + s^8
    return from_coeffs({{0, Scalar(1)}, {4, Scalar(14)}, {8, Scalar(1)}});
}
inline Poly octa_w() {  // s*(1 - s^4)
    return from_coeffs({{1, Scalar(1)}, {5, Scalar(-1)}});
}

}  // namespace detail_c

// Literal transcription: phi^2 - chi^3 + 4 * [s^3 * (s*(1-s^4))^4] = 0.
// The bracketed product is stored expanded with exponent 1.
inline WeightedFermatIdentity octahedral_identity() {
    using namespace detail_c;
    WeightedFermatIdentity id;
    id.name = "octahedral";
    id.exponents = {2, 3, 4};
    id.components = {
        {Scalar(1), octa_phi(), 2},
        {Scalar(-1), octa_chi(), 3},
        {Scalar(4), s_power(3) * octa_w().pow(4), 1},
    };
    id.note = "third term 4*s^3*(s*(1-s^4))^4, kept exactly as transcribed";
    id.status = IdentityStatus::as_printed;
    return id;
}

// Classical form: phi^2 - chi^3 + 108 * (s*(1-s^4))^4 = 0, 108 = 4*3^3.
inline WeightedFermatIdentity octahedral_variant_identity() {
    using namespace detail_c;
    WeightedFermatIdentity id;
    id.name = "octahedral-variant";
    id.exponents = {2, 3, 4};
    id.components = {
        {Scalar(1), octa_phi(), 2},
        {Scalar(-1), octa_chi(), 3},
        {Scalar(108), octa_w(), 4},
    };
    id.note = "classical form, third term 108*(s*(1-s^4))^4";
    id.status = IdentityStatus::documented_variant;
    return id;
}

// -phi30^2 + phi20^3 - 1728 * phi12^5 = 0, exponents (2, 3, 5), 1728 = 4^3*3^3.
inline WeightedFermatIdentity icosahedral_identity() {
    using namespace detail_c;
    Poly phi12 = from_coeffs({{1, Scalar(1)}, {6, Scalar(-11)}, {11, Scalar(-1)}});
    Poly phi20 = from_coeffs({{0, Scalar(1)},
                              {5, Scalar(228)},
                              {10, Scalar(494)},
                              {15, Scalar(-228)},
                              {20, Scalar(1)}});
    Poly phi30 = from_coeffs({{0, Scalar(1)},
                              {5, Scalar(-522)},
                              {10, Scalar(-10005)},
                              {20, Scalar(-10005)},
                              {25, Scalar(522)},
                              {30, Scalar(1)}});
    WeightedFermatIdentity id;
    id.name = "icosahedral";
    id.exponents = {2, 3, 5};
    id.components = {
        {Scalar(-1), phi30, 2},
        {Scalar(1), phi20, 3},
        {Scalar(-1728), phi12, 5},
    };
    id.note = "icosahedral forms phi12, phi20, phi30";
    id.status = IdentityStatus::as_printed;
    return id;
}

inline std::vector<WeightedFermatIdentity> schwartz_catalog(long long dihedral_d = 2) {
    return {dihedral_identity(dihedral_d), tetrahedral_identity(),
            octahedral_identity(), octahedral_variant_identity(),
            icosahedral_identity()};
}

// Names: dihedral:D, tetrahedral, octahedral, octahedral-variant, icosahedral.
inline std::optional<WeightedFermatIdentity> identity_by_name(const std::string& name) {
    if (name.rfind("dihedral:", 0) == 0) {
        long long d = 0;
        try {
            std::size_t pos = 0;
            d = std::stoll(name.substr(9), &pos);
            if (pos != name.size() - 9) return std::nullopt;
        } catch (...) {
            return std::nullopt;
        }
        if (d < 2) return std::nullopt;
        return dihedral_identity(d);
    }
    if (name == "tetrahedral") return tetrahedral_identity();
    if (name == "octahedral") return octahedral_identity();
    if (name == "octahedral-variant") return octahedral_variant_identity();
    if (name == "icosahedral") return icosahedral_identity();
    return std::nullopt;
}

inline VerificationReport check_solution(const std::vector<IdentityComponent>& components) {
    if (components.size() != 3)
        throw std::invalid_argument("check: exactly three components required");
    if (std::all_of(components.begin(), components.end(),
                    [](const IdentityComponent& c) { return c.polynomial.is_zero(); }))
        throw std::invalid_argument("check: all components are zero");

    VerificationReport r;
    const std::vector<std::string>& vars = components[0].polynomial.vars();
    Poly sum(vars);
    for (std::size_t i = 0; i < 3; ++i) {
        const IdentityComponent& c = components[i];
        if (c.exponent < 0) throw std::invalid_argument("check: negative exponent");
        Poly expanded =
            c.constant * c.polynomial.pow(static_cast<unsigned long long>(c.exponent));
        r.component_degrees[i] = expanded.degree();
        r.any_component_constant =
            r.any_component_constant || c.polynomial.is_constant();
        sum = sum + expanded;
    }
    r.holds = sum.is_zero();
    if (!r.holds) {
        const auto& [exps, c] = *sum.terms().begin();
        r.first_mismatch_exponent = exps;
        r.first_mismatch_coefficient = c;
    }
    auto coprime = [](const Poly& a, const Poly& b) {
        Poly g = gcd_univariate(a, b);
        return !g.is_zero() && g.degree() == 0;
    };
    r.pairwise_coprime = {
        coprime(components[0].polynomial, components[1].polynomial),
        coprime(components[0].polynomial, components[2].polynomial),
        coprime(components[1].polynomial, components[2].polynomial)};
    return r;
}

inline VerificationReport verify_identity(const WeightedFermatIdentity& id) {
    return check_solution(id.components);
}

// Trivial solution (alpha f^{M/p}, beta f^{M/q}, gamma f^{M/r}) with
// M = lcm(p, q, r); requires alpha + beta + gamma = 0, which makes the
// three expanded terms sum to (alpha + beta + gamma) f^M = 0.
inline std::vector<IdentityComponent> build_trivial(const std::array<Scalar, 3>& constants,
                                                    const Poly& f,
                                                    const std::array<long long, 3>& exps) {
    if (!(constants[0] + constants[1] + constants[2]).is_zero())
        throw std::invalid_argument("trivial: constants must sum to zero");
    if (f.is_zero()) throw std::invalid_argument("trivial: f must be nonzero");
    for (long long e : exps)
        if (e < 1) throw std::invalid_argument("trivial: exponents must be >= 1");

    long long m = std::lcm(std::lcm(exps[0], exps[1]), exps[2]);
    std::vector<IdentityComponent> out;
    for (std::size_t i = 0; i < 3; ++i)
        out.push_back({constants[i],
                       f.pow(static_cast<unsigned long long>(m / exps[i])), exps[i]});
    return out;
}

}  // namespace singclass::curves
