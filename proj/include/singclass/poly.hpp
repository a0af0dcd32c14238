// Sparse multivariate polynomials over exact scalars.  Terms are kept in a
// map ordered by graded lex, with no zero coefficients stored, so equality of
// polynomials is equality of the term maps.
#pragma once

#include "exact.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace singclass {

using Exponents = std::vector<long long>;

namespace detail {

inline long long checked_ll_add(long long a, long long b, const char* what) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error(what);
    return r;
}

inline long long checked_ll_mul(long long a, long long b, const char* what) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error(what);
    return r;
}

}  // namespace detail

struct graded_lex_less {
    bool operator()(const Exponents& x, const Exponents& y) const {
        long long dx = 0, dy = 0;
        for (long long e : x) dx = detail::checked_ll_add(dx, e, "degree overflow");
        for (long long e : y) dy = detail::checked_ll_add(dy, e, "degree overflow");
        if (dx != dy) return dx < dy;
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }
};

class Poly {
public:
    using TermMap = std::map<Exponents, Scalar, graded_lex_less>;

    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly zero(std::vector<std::string> vars) { return Poly(std::move(vars)); }

    static Poly constant(std::vector<std::string> vars, Scalar c) {
        Poly p(std::move(vars));
        p.add_term(Exponents(p.vars_.size(), 0), std::move(c));
        return p;
    }

    static Poly var(std::vector<std::string> vars, const std::string& name) {
        Poly p(std::move(vars));
        Exponents e(p.vars_.size(), 0);
        e.at(p.var_index(name)) = 1;
        p.add_term(std::move(e), Scalar(1));
        return p;
    }

    static Poly monomial(std::vector<std::string> vars, Exponents exps, Scalar c) {
        Poly p(std::move(vars));
        if (exps.size() != p.vars_.size())
            throw std::invalid_argument("Poly: exponent vector length mismatch");
        for (long long e : exps)
            if (e < 0) throw std::invalid_argument("Poly: negative exponent");
        p.add_term(std::move(exps), std::move(c));
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    std::size_t var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        throw std::invalid_argument("Poly: unknown variable " + name);
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const Exponents& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](long long v) { return v == 0; });
    }

    Scalar constant_value() const {
        if (is_zero()) return Scalar(0);
        if (!is_constant()) throw std::invalid_argument("Poly: not a constant");
        return terms_.begin()->second;
    }

    // Total degree; -1 for the zero polynomial.
    long long degree() const {
        if (terms_.empty()) return -1;
        long long d = 0;
        for (long long e : terms_.rbegin()->first)
            d = detail::checked_ll_add(d, e, "degree overflow");
        return d;
    }

    Int weighted_degree(const std::vector<long long>& weights) const {
        if (weights.size() != vars_.size())
            throw std::invalid_argument("Poly: weight vector length mismatch");
        if (terms_.empty())
            throw std::invalid_argument("Poly: weighted degree of zero polynomial");
        bool first = true;
        Int best = 0;
        for (const auto& [exps, c] : terms_) {
            Int w = term_weight(exps, weights);
            if (first || w > best) best = w;
            first = false;
        }
        return best;
    }

    static Int term_weight(const Exponents& exps,
                           const std::vector<long long>& weights) {
        Int w = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) w += Int(exps[i]) * weights[i];
        return w;
    }

    // Indices of variables that actually occur.
    std::set<std::size_t> used_vars() const {
        std::set<std::size_t> used;
        for (const auto& [exps, c] : terms_)
            for (std::size_t i = 0; i < exps.size(); ++i)
                if (exps[i] > 0) used.insert(i);
        return used;
    }

    friend bool operator==(const Poly& x, const Poly& y) {
        return x.vars_ == y.vars_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    friend Poly operator+(const Poly& x, const Poly& y) {
        x.require_same_vars(y);
        Poly r = x;
        for (const auto& [exps, c] : y.terms_) r.add_term(exps, c);
        return r;
    }

    friend Poly operator-(const Poly& x, const Poly& y) {
        x.require_same_vars(y);
        Poly r = x;
        for (const auto& [exps, c] : y.terms_) r.add_term(exps, -c);
        return r;
    }

    Poly operator-() const {
        Poly r(vars_);
        for (const auto& [exps, c] : terms_) r.terms_.emplace(exps, -c);
        return r;
    }

    friend Poly operator*(const Poly& x, const Poly& y) {
        x.require_same_vars(y);
        Poly r(x.vars_);
        for (const auto& [ex, cx] : x.terms_) {
            for (const auto& [ey, cy] : y.terms_) {
                Exponents e(ex.size());
                for (std::size_t i = 0; i < ex.size(); ++i)
                    e[i] = detail::checked_ll_add(ex[i], ey[i], "exponent overflow");
                r.add_term(std::move(e), cx * cy);
            }
        }
        return r;
    }

    friend Poly operator*(const Scalar& c, const Poly& x) {
        Poly r(x.vars_);
        if (c.is_zero()) return r;
        for (const auto& [exps, coeff] : x.terms_) r.add_term(exps, c * coeff);
        return r;
    }
    friend Poly operator*(const Poly& x, const Scalar& c) { return c * x; }

    Poly pow(unsigned long long e) const {
        Poly result = Poly::constant(vars_, Scalar(1));
        Poly base = *this;
        while (e) {
            if (e & 1ull) result = result * base;
            if (e >>= 1) base = base * base;
        }
        return result;
    }

    // Exact quotient; throws inexact_division when *this is not a multiple
    // of d.  Coefficients live in a field, so only monomial divisibility of
    // leading terms can fail.
    Poly exact_div(const Poly& d) const {
        require_same_vars(d);
        if (d.is_zero()) throw inexact_division("exact_div: division by zero");
        Poly q(vars_);
        Poly r = *this;
        const auto& [dexp, dc] = *d.terms_.rbegin();
        while (!r.is_zero()) {
            const auto& [rexp, rc] = *r.terms_.rbegin();
            Exponents e(rexp.size());
            for (std::size_t i = 0; i < rexp.size(); ++i) {
                e[i] = rexp[i] - dexp[i];
                if (e[i] < 0) throw inexact_division("exact_div: not divisible");
            }
            Poly t = Poly::monomial(vars_, std::move(e), rc / dc);
            q = q + t;
            r = r - t * d;
        }
        return q;
    }

    Poly derivative(std::size_t var) const {
        if (var >= vars_.size()) throw std::invalid_argument("Poly: bad variable index");
        Poly r(vars_);
        for (const auto& [exps, c] : terms_) {
            if (exps[var] == 0) continue;
            Exponents e = exps;
            e[var] -= 1;
            r.add_term(std::move(e), c * Scalar(exps[var]));
        }
        return r;
    }

    Poly derivative(const std::string& name) const { return derivative(var_index(name)); }

    // Substitute images[i] for vars()[i]; all images must share one variable
    // list, which becomes the variable list of the result.
    Poly compose(const std::vector<Poly>& images) const {
        if (images.size() != vars_.size())
            throw std::invalid_argument("Poly: one image per variable required");
        std::vector<std::string> tvars =
            images.empty() ? vars_ : images.front().vars();
        for (const Poly& im : images)
            if (im.vars() != tvars)
                throw std::invalid_argument("Poly: images must share a variable list");

        // Power tables keyed by the exponents that actually occur.
        std::vector<std::vector<Poly>> powers(vars_.size());
        std::vector<long long> maxe(vars_.size(), 0);
        for (const auto& [exps, c] : terms_)
            for (std::size_t i = 0; i < exps.size(); ++i)
                maxe[i] = std::max(maxe[i], exps[i]);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            powers[i].push_back(Poly::constant(tvars, Scalar(1)));
            for (long long k = 1; k <= maxe[i]; ++k)
                powers[i].push_back(powers[i].back() * images[i]);
        }

        Poly r(tvars);
        for (const auto& [exps, c] : terms_) {
            Poly t = Poly::constant(tvars, c);
            for (std::size_t i = 0; i < exps.size(); ++i)
                if (exps[i] > 0) t = t * powers[i][static_cast<std::size_t>(exps[i])];
            r = r + t;
        }
        return r;
    }

    Scalar evaluate(const std::vector<Scalar>& point) const {
        if (point.size() != vars_.size())
            throw std::invalid_argument("Poly: one value per variable required");
        Scalar acc(0);
        for (const auto& [exps, c] : terms_) {
            Scalar t = c;
            for (std::size_t i = 0; i < exps.size(); ++i)
                if (exps[i] > 0)
                    t *= point[i].pow(static_cast<unsigned long long>(exps[i]));
            acc += t;
        }
        return acc;
    }

    // Re-interpret over a larger (or reordered) variable list; every old
    // variable must be present in new_vars.
    Poly embedded(std::vector<std::string> new_vars) const {
        Poly r(std::move(new_vars));
        std::vector<std::size_t> pos(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) pos[i] = r.var_index(vars_[i]);
        for (const auto& [exps, c] : terms_) {
            Exponents e(r.vars_.size(), 0);
            for (std::size_t i = 0; i < exps.size(); ++i) e[pos[i]] = exps[i];
            r.add_term(std::move(e), c);
        }
        return r;
    }

    std::pair<Exponents, Scalar> leading_term() const {
        if (terms_.empty()) throw std::invalid_argument("Poly: zero polynomial");
        return *terms_.rbegin();
    }

    // Terms in graded-lex order, leading term first.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string t = term_str(it->first, it->second);
            if (first) {
                out = t;
                first = false;
            } else if (t[0] == '-') {
                out += " - " + t.substr(1);
            } else {
                out += " + " + t;
            }
        }
        return out;
    }

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void require_same_vars(const Poly& other) const {
        if (vars_ != other.vars_)
            throw std::invalid_argument("Poly: operands use different variable lists");
    }

    void add_term(Exponents exps, Scalar c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(std::move(exps), std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::string monomial_str(const Exponents& exps) const {
        std::string m;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!m.empty()) m += "*";
            m += vars_[i];
            if (exps[i] > 1) m += "^" + std::to_string(exps[i]);
        }
        return m;
    }

    std::string term_str(const Exponents& exps, const Scalar& c) const {
        std::string m = monomial_str(exps);
        if (m.empty()) return c.str();
        if (c.is_one()) return m;
        if (c == Scalar(-1)) return "-" + m;
        std::string cs = c.str();
        // A mixed a+b*sqrt(n) coefficient needs parentheses next to '*'.
        if (cs.find('+') != std::string::npos ||
            cs.find('-', 1) != std::string::npos)
            cs = "(" + cs + ")";
        return cs + "*" + m;
    }
};

// Monic gcd of univariate polynomials over their (field) coefficient ring.
// gcd(0, 0) = 0.  Throws on genuinely multivariate input.
inline Poly gcd_univariate(const Poly& a, const Poly& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("gcd: operands use different variable lists");
    std::set<std::size_t> used = a.used_vars();
    for (std::size_t i : b.used_vars()) used.insert(i);
    if (used.size() > 1)
        throw std::invalid_argument("gcd: inputs are not univariate");

    Poly x = a, y = b;
    while (!y.is_zero()) {
        // x mod y
        long long dy = y.degree();
        const auto& [yexp, yc] = *y.terms().rbegin();
        while (!x.is_zero() && x.degree() >= dy) {
            const auto& [xexp, xc] = *x.terms().rbegin();
            Exponents e(xexp.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = xexp[i] - yexp[i];
            x = x - Poly::monomial(x.vars(), std::move(e), xc / yc) * y;
        }
        std::swap(x, y);
    }
    if (x.is_zero()) return x;
    return x * x.leading_term().second.inverse();
}

}  // namespace singclass
