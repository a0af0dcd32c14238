// Exact scalar arithmetic: arbitrary-precision rationals and real quadratic
// extensions Q(sqrt(n)).  All values are immutable after construction and
// stored in canonical form, so equality is structural.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace singclass {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct ring_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct inexact_division : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t off)
        : std::runtime_error(msg), offset(off) {}
};

// cpp_rational's (num, den) constructor rejects negative denominators, so
// canonicalize through an explicit division.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    return Rat(std::move(num)) / Rat(std::move(den));
}

inline bool is_square_free(long long n) {
    if (n < 1) return false;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

// A value a + b*sqrt(n).  radicand() == 0 tags a plain rational (b is then
// zero); otherwise n is a fixed square-free integer > 1.  A scalar whose
// radical part cancels to zero is re-tagged as rational, so the tag is a
// function of the value.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long v) : a_(v) {}
    Scalar(Int v) : a_(std::move(v)) {}
    Scalar(Rat v) : a_(std::move(v)) {}

    Scalar(Rat a, Rat b, long long radicand)
        : a_(std::move(a)), b_(std::move(b)), radicand_(radicand) {
        if (b_ == 0) {
            radicand_ = 0;
        } else if (radicand_ < 2 || !is_square_free(radicand_)) {
            throw std::invalid_argument(
                "Scalar: radicand must be square-free and > 1");
        }
    }

    static Scalar sqrt_of(long long n) { return Scalar(Rat(0), Rat(1), n); }

    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    long long radicand() const { return radicand_; }

    bool is_rational() const { return radicand_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return b_ == 0 && a_ == 1; }
    bool is_integer() const { return b_ == 0 && denominator(a_) == 1; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.radicand_ == y.radicand_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        long long n = unify(x, y);
        return Scalar(x.a_ + y.a_, x.b_ + y.b_, n);
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        long long n = unify(x, y);
        return Scalar(x.a_ - y.a_, x.b_ - y.b_, n);
    }
    Scalar operator-() const { return Scalar(-a_, -b_, radicand_); }

    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        long long n = unify(x, y);
        if (n == 0) return Scalar(x.a_ * y.a_);
        return Scalar(x.a_ * y.a_ + Rat(n) * x.b_ * y.b_,
                      x.a_ * y.b_ + x.b_ * y.a_, n);
    }

    Scalar conjugate() const { return Scalar(a_, -b_, radicand_); }

    // a^2 - n*b^2; zero only for the zero scalar since sqrt(n) is irrational.
    Rat norm() const { return a_ * a_ - Rat(radicand_) * b_ * b_; }

    Scalar inverse() const {
        if (is_zero()) throw std::invalid_argument("Scalar: division by zero");
        if (radicand_ == 0) return Scalar(Rat(1) / a_);
        Rat nrm = norm();
        return Scalar(a_ / nrm, -b_ / nrm, radicand_);
    }

    friend Scalar operator/(const Scalar& x, const Scalar& y) {
        return x * y.inverse();
    }

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    Scalar pow(unsigned long long e) const {
        Scalar result(1);
        Scalar base = *this;
        while (e) {
            if (e & 1ull) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    // Canonical rendering: "2", "-2/3", "sqrt(3)", "2*sqrt(3)", "1-2*sqrt(3)".
    std::string str() const {
        if (radicand_ == 0) return rat_to_string(a_);
        std::string rad;
        if (b_ == 1) {
            rad = "sqrt(" + std::to_string(radicand_) + ")";
        } else if (b_ == -1) {
            rad = "-sqrt(" + std::to_string(radicand_) + ")";
        } else {
            rad = rat_to_string(b_) + "*sqrt(" + std::to_string(radicand_) + ")";
        }
        if (a_ == 0) return rad;
        if (rad[0] == '-') return rat_to_string(a_) + rad;
        return rat_to_string(a_) + "+" + rad;
    }

private:
    Rat a_{};
    Rat b_{};
    long long radicand_ = 0;

    // Rationals embed into every Q(sqrt(n)); two distinct extensions do not mix.
    static long long unify(const Scalar& x, const Scalar& y) {
        if (x.radicand_ == y.radicand_) return x.radicand_;
        if (x.radicand_ == 0) return y.radicand_;
        if (y.radicand_ == 0) return x.radicand_;
        throw ring_mismatch("Scalar: mixed radicands " +
                            std::to_string(x.radicand_) + " and " +
                            std::to_string(y.radicand_));
    }
};

}  // namespace singclass
