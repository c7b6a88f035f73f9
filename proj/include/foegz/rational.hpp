#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace foegz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

// Exact integer k-th root, if it exists.
inline std::optional<BigInt> exact_iroot(const BigInt& a, unsigned k) {
    if (a < 0) {
        if (k % 2 == 0) return std::nullopt;
        auto r = exact_iroot(-a, k);
        if (!r) return std::nullopt;
        return -*r;
    }
    if (a == 0 || a == 1) return a;
    BigInt lo = 1, hi = a;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        BigInt p = 1;
        bool over = false;
        for (unsigned i = 0; i < k; ++i) {
            p *= mid;
            if (p > a) { over = true; break; }
        }
        if (over) hi = mid - 1; else lo = mid;
    }
    BigInt p = 1;
    for (unsigned i = 0; i < k; ++i) p *= lo;
    if (p == a) return lo;
    return std::nullopt;
}

// Exact k-th root of a rational, if it exists in Q.
inline std::optional<Rational> exact_root(const Rational& q, unsigned k) {
    auto rn = exact_iroot(num(q), k);
    if (!rn) return std::nullopt;
    auto rd = exact_iroot(den(q), k);
    if (!rd) return std::nullopt;
    return Rational(*rn, *rd);
}

inline std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    return exact_root(q, 2);
}

/// Gaussian rational a + b*i with exact components. The coefficient field
/// for every symbolic object in the library.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(long long r) : re(r) {}
    GaussRational(long long r, long long i) : re(r), im(i) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    GaussRational operator-() const { return {-re, -im}; }
    GaussRational& operator+=(const GaussRational& o) { re += o.re; im += o.im; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r); im = std::move(i);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) {
        if (o.is_zero()) throw std::domain_error("GaussRational: division by zero");
        Rational n = o.norm();
        Rational r = (re * o.re + im * o.im) / n;
        Rational i = (im * o.re - re * o.im) / n;
        re = std::move(r); im = std::move(i);
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { a += b; return a; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { a -= b; return a; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { a *= b; return a; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { a /= b; return a; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

// sqrt over Q(i), when it exists there. sqrt(a+bi) = x+yi with
// x^2 = (a+r)/2, y^2 = (r-a)/2, r = |a+bi|; all three must be rational squares.
inline std::optional<GaussRational> exact_sqrt(const GaussRational& c) {
    if (c.is_zero()) return GaussRational(0);
    if (c.im == 0) {
        if (c.re > 0) {
            auto r = exact_sqrt(c.re);
            if (!r) return std::nullopt;
            return GaussRational(*r);
        }
        auto r = exact_sqrt(-c.re);
        if (!r) return std::nullopt;
        return GaussRational(Rational(0), *r);
    }
    auto rr = exact_sqrt(c.norm());
    if (!rr) return std::nullopt;
    auto x2 = (c.re + *rr) / 2;
    auto x = exact_sqrt(x2);
    if (!x || *x == 0) return std::nullopt;
    Rational y = c.im / (2 * *x);
    GaussRational s(*x, y);
    if (s * s == c) return s;
    return std::nullopt;
}

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline std::string to_string(const GaussRational& c) {
    if (c.im == 0) return to_string(c.re);
    std::ostringstream os;
    if (c.re != 0) os << c.re << (c.im > 0 ? "+" : "");
    if (c.im == 1) os << "i";
    else if (c.im == -1) os << "-i";
    else os << c.im << "*i";
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const GaussRational& c) {
    return os << to_string(c);
}

inline double to_double(const Rational& q) {
    return boost::multiprecision::cpp_rational(q).convert_to<double>();
}

} // namespace foegz
