// Arithmetic classifiers for the standard families of quasihomogeneous
// surface/hypersurface singularities: x^p + y^q + z^r = 0, the n-variable
// Fermat hypersurface, and the cone surfaces F_d(x, y) = z^m.
#pragma once

#include "hilbert.hpp"
#include "poly.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>

namespace singclass::brieskorn {

enum class PlatonicType { none, dihedral, tetrahedral, octahedral, icosahedral };

inline const char* to_string(PlatonicType t) {
    switch (t) {
        case PlatonicType::dihedral: return "dihedral";
        case PlatonicType::tetrahedral: return "tetrahedral";
        case PlatonicType::octahedral: return "octahedral";
        case PlatonicType::icosahedral: return "icosahedral";
        default: return "none";
    }
}

// x^p + y^q + z^r is quasihomogeneous of degree pqr for the weights
// (qr, pr, pq).
inline hilbert::WeightedCI triple_ci(long long p, long long q, long long r) {
    if (p < 2 || q < 2 || r < 2)
        throw std::invalid_argument("triple: exponents must be >= 2");
    long long qr = detail::checked_ll_mul(q, r, "weight overflow");
    long long pr = detail::checked_ll_mul(p, r, "weight overflow");
    long long pq = detail::checked_ll_mul(p, q, "weight overflow");
    long long pqr = detail::checked_ll_mul(pq, r, "degree overflow");
    return hilbert::WeightedCI({qr, pr, pq}, {pqr});
}

// Either one exponent is coprime to the other two, or the gcd of all three
// is 2 and the halves are pairwise coprime.
inline bool quasirational_conditions(long long p, long long q, long long r) {
    if (p < 2 || q < 2 || r < 2)
        throw std::invalid_argument("triple: exponents must be >= 2");
    auto coprime_to_both = [](long long a, long long b, long long c) {
        return std::gcd(a, b) == 1 && std::gcd(a, c) == 1;
    };
    if (coprime_to_both(p, q, r) || coprime_to_both(q, p, r) ||
        coprime_to_both(r, p, q))
        return true;
    if (std::gcd(std::gcd(p, q), r) != 2) return false;
    long long a = p / 2, b = q / 2, c = r / 2;
    return std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1;
}

struct TripleClassification {
    std::array<long long, 3> triple{};  // sorted ascending
    bool platonic = false;
    PlatonicType platonic_type = PlatonicType::none;
    long long normal_degree = 0;
    bool is_rational = false;
    bool is_quotient = false;
    bool quasirational = false;              // by the coprimality conditions
    bool quasirational_cross_check = false;  // dim A_N == 0
    hilbert::KodairaDim log_kodaira;
    bool admits_cplus = false;
    bool is_gorenstein = true;  // hypersurface
    hilbert::CIReport ci_report;
};

inline PlatonicType platonic_pattern(long long p, long long q, long long r) {
    // (p, q, r) sorted ascending
    if (p == 2 && q == 2) return PlatonicType::dihedral;
    if (p == 2 && q == 3 && r == 3) return PlatonicType::tetrahedral;
    if (p == 2 && q == 3 && r == 4) return PlatonicType::octahedral;
    if (p == 2 && q == 3 && r == 5) return PlatonicType::icosahedral;
    return PlatonicType::none;
}

inline TripleClassification classify_triple(long long p, long long q, long long r,
                                            long long m_max = 12) {
    hilbert::WeightedCI ci = triple_ci(p, q, r);

    TripleClassification t;
    t.triple = {p, q, r};
    std::sort(t.triple.begin(), t.triple.end());
    // 1/p + 1/q + 1/r > 1, cross-multiplied.
    long long qr = ci.weights[0], pr = ci.weights[1], pq = ci.weights[2];
    long long pqr = ci.degrees[0];
    t.platonic = detail::checked_ll_add(detail::checked_ll_add(qr, pr, "sum overflow"),
                                        pq, "sum overflow") > pqr;
    t.platonic_type = platonic_pattern(t.triple[0], t.triple[1], t.triple[2]);
    t.ci_report = hilbert::classify_ci(ci, m_max);
    t.normal_degree = t.ci_report.normal_degree;
    t.is_rational = t.ci_report.is_rational;
    t.is_quotient = t.ci_report.is_quotient_surface.value();
    t.quasirational = quasirational_conditions(p, q, r);
    t.quasirational_cross_check = t.ci_report.quasirational_form_test.value();
    t.log_kodaira = t.ci_report.log_kodaira;
    t.admits_cplus = t.platonic_type == PlatonicType::dihedral;
    t.is_gorenstein = true;
    return t;
}

struct FermatReport {
    std::vector<long long> exponents;
    Int normal_degree = 0;  // from the weights lcm(p)/p_i, degree lcm(p)
    bool is_rational = false;
    bool steinbrink_no_coprime_solutions = false;
};

inline FermatReport classify_fermat_hypersurface(std::vector<long long> exponents) {
    if (exponents.size() < 3)
        throw std::invalid_argument("fermat: at least 3 exponents required");
    for (long long p : exponents)
        if (p < 2) throw std::invalid_argument("fermat: exponents must be >= 2");

    Int m = 1;
    for (long long p : exponents) m = boost::multiprecision::lcm(m, Int(p));
    Int weight_sum = 0;  // sum of M / p_i
    for (long long p : exponents) weight_sum += m / p;

    FermatReport r;
    r.exponents = std::move(exponents);
    r.normal_degree = m - weight_sum;
    // sum 1/p_i > 1  <=>  sum M/p_i > M
    r.is_rational = weight_sum > m;
    // sum 1/p_i <= 1/(n-2)  <=>  (n-2) * sum M/p_i <= M
    Int n_minus_2 = Int(static_cast<long long>(r.exponents.size())) - 2;
    r.steinbrink_no_coprime_solutions = n_minus_2 * weight_sum <= m;
    return r;
}

struct ConeSurfaceReport {
    long long form_degree = 0;  // d
    long long z_exponent = 0;   // m
    long long normal_degree = 0;
    bool solutions_exist = false;
    bool quasirational = false;
    bool squarefree_checked = false;
    std::optional<bool> squarefree;
};

// F is square-free iff gcd(F(x,1), d/dx F(x,1)) is constant and y divides F
// at most once; the second condition covers the root at infinity that the
// dehomogenization hides.
inline bool binary_form_squarefree(const Poly& form, long long d) {
    if (form.vars().size() != 2)
        throw std::invalid_argument("cone: F must be a binary form");
    if (form.is_zero())
        throw std::invalid_argument("cone: F must be nonzero");
    long long y_mult = -1;
    for (const auto& [exps, c] : form.terms()) {
        if (exps[0] + exps[1] != d)
            throw std::invalid_argument("cone: F is not homogeneous of degree d");
        y_mult = y_mult < 0 ? exps[1] : std::min(y_mult, exps[1]);
    }
    if (y_mult > 1) return false;

    std::vector<std::string> xvar{form.vars()[0]};
    Poly dehom(xvar);
    for (const auto& [exps, c] : form.terms())
        dehom = dehom + Poly::monomial(xvar, {exps[0]}, c);
    Poly g = gcd_univariate(dehom, dehom.derivative(std::size_t{0}));
    return !g.is_zero() && g.degree() == 0;
}

inline ConeSurfaceReport classify_cone_surface(long long d, long long m,
                                               const std::optional<Poly>& form = {}) {
    if (d < 1) throw std::invalid_argument("cone: d must be >= 1");
    if (m < 2) throw std::invalid_argument("cone: m must be >= 2");

    ConeSurfaceReport r;
    r.form_degree = d;
    r.z_exponent = m;
    // weights (m, m, d), degree m d
    r.normal_degree = detail::checked_ll_add(
        detail::checked_ll_mul(d - 2, m, "cone overflow"), -d, "cone overflow");
    r.solutions_exist = d <= 2 || (d == 3 && m == 2);
    r.quasirational = d == 2 || std::gcd(m, d) == 1;
    if (form) {
        r.squarefree = binary_form_squarefree(*form, d);
        r.squarefree_checked = true;
    }
    return r;
}

}  // namespace singclass::brieskorn
