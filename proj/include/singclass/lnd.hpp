// Derivations of polynomial rings: Leibniz evaluation, local-nilpotency
// checking, weighted-homogeneous decomposition, exponential flows, and the
// suspension derivation of u v = p(x_1, ..., x_k).
#pragma once

#include "poly.hpp"

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace singclass::lnd {

class Derivation {
public:
    Derivation(std::vector<std::string> vars, std::vector<Poly> images)
        : vars_(std::move(vars)), images_(std::move(images)) {
        if (images_.size() != vars_.size())
            throw std::invalid_argument("Derivation: one image per variable required");
        for (const Poly& im : images_)
            if (im.vars() != vars_)
                throw std::invalid_argument(
                    "Derivation: images must live in the same ring");
    }

    static Derivation zero(std::vector<std::string> vars) {
        std::vector<Poly> images(vars.size(), Poly(vars));
        return Derivation(std::move(vars), std::move(images));
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Poly>& images() const { return images_; }
    const Poly& image(std::size_t i) const { return images_.at(i); }
    const Poly& image(const std::string& name) const {
        return images_.at(images_.front().var_index(name));
    }

    // Leibniz-rule extension: f |-> sum_j (df/dx_j) * image_j.
    Poly apply(const Poly& f) const {
        if (f.vars() != vars_)
            throw std::invalid_argument("Derivation: argument uses a different ring");
        Poly out(vars_);
        for (std::size_t j = 0; j < vars_.size(); ++j) {
            if (images_[j].is_zero()) continue;
            out = out + f.derivative(j) * images_[j];
        }
        return out;
    }

    friend bool operator==(const Derivation& a, const Derivation& b) {
        return a.vars_ == b.vars_ && a.images_ == b.images_;
    }

private:
    std::vector<std::string> vars_;
    std::vector<Poly> images_;
};

inline Poly apply(const Derivation& d, const Poly& f) { return d.apply(f); }

enum class NilpotencyStatus { nilpotent, not_nilpotent, inconclusive };

inline const char* to_string(NilpotencyStatus s) {
    switch (s) {
        case NilpotencyStatus::nilpotent: return "nilpotent";
        case NilpotencyStatus::not_nilpotent: return "not-nilpotent";
        default: return "inconclusive";
    }
}

struct NilpotencyVerdict {
    NilpotencyStatus status = NilpotencyStatus::inconclusive;
    // Smallest k with d^k(x_j) = 0, or -1 when not reached within the cap.
    std::vector<long long> vanishing_steps;
    long long cap = 0;
};

inline long long default_cap(const Derivation& d) {
    long long cap = 2 + static_cast<long long>(d.vars().size());
    for (const Poly& im : d.images())
        if (!im.is_zero())
            cap = detail::checked_ll_add(cap, im.degree(), "cap overflow");
    return cap;
}

// Semi-decision: iterate on each generator up to the cap.  A step with
// d(g) = c * g, c != 0, exhibits an eigenvector, which no locally nilpotent
// derivation admits.
inline NilpotencyVerdict is_locally_nilpotent(const Derivation& d, long long cap) {
    if (cap < 1) throw std::invalid_argument("nilpotency: cap must be >= 1");
    NilpotencyVerdict v;
    v.cap = cap;
    v.vanishing_steps.assign(d.vars().size(), -1);
    bool refuted = false, capped = false;

    auto scalar_multiple = [](const Poly& next, const Poly& prev) -> bool {
        if (prev.is_zero() || next.is_zero()) return false;
        if (next.terms().size() != prev.terms().size()) return false;
        std::optional<Scalar> ratio;
        auto it = next.terms().begin();
        for (const auto& [exps, c] : prev.terms()) {
            if (it->first != exps) return false;
            Scalar r = it->second / c;
            if (ratio && *ratio != r) return false;
            ratio = r;
            ++it;
        }
        return true;
    };

    for (std::size_t j = 0; j < d.vars().size(); ++j) {
        Poly g = Poly::var(d.vars(), d.vars()[j]);
        bool settled = false;
        for (long long k = 1; k <= cap; ++k) {
            Poly next = d.apply(g);
            if (next.is_zero()) {
                v.vanishing_steps[j] = k;
                settled = true;
                break;
            }
            if (scalar_multiple(next, g)) {
                refuted = true;
                settled = true;
                break;
            }
            g = std::move(next);
        }
        if (!settled) capped = true;
    }

    if (refuted)
        v.status = NilpotencyStatus::not_nilpotent;
    else if (capped)
        v.status = NilpotencyStatus::inconclusive;
    else
        v.status = NilpotencyStatus::nilpotent;
    return v;
}

inline NilpotencyVerdict is_locally_nilpotent(const Derivation& d) {
    return is_locally_nilpotent(d, default_cap(d));
}

// Split d into weighted-homogeneous parts: the part of degree i maps x_j to
// the weight-(w_j + i) piece of its image.  Parts sum back to d.
inline std::vector<std::pair<long long, Derivation>> homogeneous_parts(
    const Derivation& d, const std::vector<long long>& weights) {
    if (weights.size() != d.vars().size())
        throw std::invalid_argument("homogeneous_parts: one weight per variable");
    for (long long w : weights)
        if (w <= 0) throw std::invalid_argument("homogeneous_parts: weights must be positive");

    std::map<long long, std::vector<Poly>> pieces;  // degree -> images
    auto images_for = [&](long long deg) -> std::vector<Poly>& {
        auto it = pieces.find(deg);
        if (it == pieces.end())
            it = pieces.emplace(deg, std::vector<Poly>(d.vars().size(), Poly(d.vars()))).first;
        return it->second;
    };

    for (std::size_t j = 0; j < d.vars().size(); ++j) {
        for (const auto& [exps, c] : d.image(j).terms()) {
            Int w = Poly::term_weight(exps, weights);
            Int deg = w - weights[j];
            if (deg < std::numeric_limits<long long>::min() ||
                deg > std::numeric_limits<long long>::max())
                throw std::overflow_error("homogeneous_parts: degree overflow");
            auto& imgs = images_for(deg.convert_to<long long>());
            imgs[j] = imgs[j] + Poly::monomial(d.vars(), exps, c);
        }
    }

    std::vector<std::pair<long long, Derivation>> out;
    for (auto& [deg, imgs] : pieces)
        out.emplace_back(deg, Derivation(d.vars(), std::move(imgs)));
    return out;
}

// Two positive weight vectors give truly different gradings iff they are not
// proportional over Q.
inline bool truly_different(const std::vector<long long>& w1,
                            const std::vector<long long>& w2) {
    if (w1.size() != w2.size())
        throw std::invalid_argument("truly_different: length mismatch");
    for (std::size_t i = 0; i < w1.size(); ++i)
        if (w1[i] <= 0 || w2[i] <= 0)
            throw std::invalid_argument("truly_different: weights must be positive");
    for (std::size_t i = 0; i < w1.size(); ++i)
        for (std::size_t j = i + 1; j < w1.size(); ++j)
            if (Int(w1[i]) * w2[j] != Int(w1[j]) * w2[i]) return true;
    return false;
}

struct FlowMap {
    std::vector<std::string> vars;  // original ring variables
    std::string parameter;          // formal flow parameter
    std::vector<Poly> images;       // over vars + parameter

    std::vector<std::string> extended_vars() const {
        std::vector<std::string> v = vars;
        v.push_back(parameter);
        return v;
    }
};

// exp(t d): x |-> sum_k t^k d^k(x) / k!, a finite sum by nilpotency.  Refuses
// derivations that are not verified nilpotent within the cap.
inline FlowMap exp_flow(const Derivation& d, long long cap,
                        const std::string& parameter = "t") {
    NilpotencyVerdict v = is_locally_nilpotent(d, cap);
    if (v.status != NilpotencyStatus::nilpotent)
        throw std::domain_error(
            "exp_flow: derivation not verified locally nilpotent within cap");
    std::string param = parameter;
    for (const std::string& name : d.vars())
        if (name == param) param += "_flow";

    FlowMap flow;
    flow.vars = d.vars();
    flow.parameter = param;
    std::vector<std::string> evars = flow.extended_vars();

    for (std::size_t j = 0; j < d.vars().size(); ++j) {
        Poly acc(evars);
        Poly g = Poly::var(d.vars(), d.vars()[j]);
        Rat factorial = 1;
        for (long long k = 0; !g.is_zero(); ++k) {
            if (k > 0) factorial *= k;
            Scalar coeff(Rat(1) / factorial);
            for (const auto& [exps, c] : g.terms()) {
                Exponents e = exps;
                e.push_back(k);
                acc = acc + Poly::monomial(evars, std::move(e), c * coeff);
            }
            g = d.apply(g);
        }
        flow.images.push_back(std::move(acc));
    }
    return flow;
}

inline FlowMap exp_flow(const Derivation& d) { return exp_flow(d, default_cap(d)); }

// The suspension of p: on C[u, v, x_1, ..., x_k] with u v = p,
//   d(u) = 0,  d(v) = dp/dx_1,  d(x_1) = u,  d(x_i) = 0  (i >= 2),
// which annihilates u v - p.  Returns the derivation and that relation.
inline std::pair<Derivation, Poly> build_suspension(const Poly& p) {
    if (p.is_constant())
        throw std::invalid_argument("suspension: p must be non-constant");
    for (const std::string& name : p.vars())
        if (name == "u" || name == "v")
            throw std::invalid_argument("suspension: p may not use variables named u or v");

    std::vector<std::string> vars{"u", "v"};
    vars.insert(vars.end(), p.vars().begin(), p.vars().end());

    Poly u = Poly::var(vars, "u");
    std::vector<Poly> images;
    images.push_back(Poly(vars));                             // d(u) = 0
    images.push_back(p.derivative(std::size_t{0}).embedded(vars));  // d(v) = dp/dx_1
    images.push_back(u);                                      // d(x_1) = u
    for (std::size_t i = 1; i < p.vars().size(); ++i) images.push_back(Poly(vars));

    Poly relation = u * Poly::var(vars, "v") - p.embedded(vars);
    return {Derivation(vars, std::move(images)), std::move(relation)};
}

struct OrbitReport {
    bool on_variety = false;
    bool avoids = false;
    // Monic gcd of the coordinate differences gamma_i(t) - avoid_i; constant
    // nonzero gcd means no parameter value (in any field extension) hits the
    // avoided point.
    Poly difference_gcd{std::vector<std::string>{"t"}};
};

inline OrbitReport orbit_avoids(const FlowMap& flow,
                                const std::vector<Poly>& relations,
                                const std::vector<Scalar>& avoid,
                                const std::vector<Scalar>& start) {
    const std::size_t n = flow.vars.size();
    if (avoid.size() != n || start.size() != n)
        throw std::invalid_argument("orbit: point dimension mismatch");
    for (const Poly& rel : relations) {
        if (rel.vars() != flow.vars)
            throw std::invalid_argument("orbit: relation uses a different ring");
        if (!rel.evaluate(start).is_zero())
            throw std::invalid_argument("orbit: start point is not on the variety");
    }

    // Specialize the flow at the start point: gamma_i(t).
    std::vector<std::string> tvar{flow.parameter};
    std::vector<Poly> spec;
    for (std::size_t i = 0; i < n; ++i) spec.push_back(Poly::constant(tvar, start[i]));
    spec.push_back(Poly::var(tvar, flow.parameter));
    std::vector<Poly> gamma;
    for (const Poly& im : flow.images) gamma.push_back(im.compose(spec));

    OrbitReport r;
    r.on_variety = true;
    for (const Poly& rel : relations) {
        if (!rel.compose(gamma).is_zero()) {
            r.on_variety = false;
            break;
        }
    }

    Poly g(tvar);
    for (std::size_t i = 0; i < n; ++i)
        g = gcd_univariate(g, gamma[i] - Poly::constant(tvar, avoid[i]));
    r.difference_gcd = g;
    r.avoids = !g.is_zero() && g.degree() == 0;
    return r;
}

}  // namespace singclass::lnd
