#pragma once

#include <initializer_list>
#include <optional>
#include <string>

#include "foegz/densepoly.hpp"

namespace foegz {

/// Univariate polynomial over the Gaussian rationals. Ascending coefficients.
using Poly = DensePoly<GaussRational>;
/// Bivariate: polynomial in a main variable whose coefficients are Poly in z.
using Poly2 = DensePoly<Poly>;

inline Poly poly_from(std::initializer_list<long long> cs) {
    std::vector<GaussRational> v;
    for (auto x : cs) v.emplace_back(x);
    return Poly(std::move(v));
}

inline Poly poly_from_rationals(std::vector<Rational> cs) {
    std::vector<GaussRational> v;
    for (auto& x : cs) v.emplace_back(std::move(x));
    return Poly(std::move(v));
}

inline Poly poly_x() { return Poly::monomial(1); }

inline Poly monic(const Poly& p) {
    if (p.is_zero_poly()) return p;
    Poly r = p;
    GaussRational l = p.lc();
    for (auto& x : r.c) x = x / l;
    return r;
}

// rational content of a list of Gauss rationals: the positive rational c such
// that dividing by c gives coprime Gaussian-integer components
inline Rational rational_content(const std::vector<GaussRational>& cs) {
    BigInt g = 0, l = 1;
    auto absorb = [&](const Rational& q) {
        if (q == 0) return;
        g = boost::multiprecision::gcd(g, num(q) < 0 ? BigInt(-num(q)) : num(q));
        l = boost::multiprecision::lcm(l, den(q));
    };
    for (const auto& x : cs) { absorb(x.re); absorb(x.im); }
    if (g == 0) return Rational(1);
    return Rational(g, l);
}

inline Rational rational_content(const Poly& p) { return rational_content(p.c); }

// exact square root of a polynomial, if one exists
inline std::optional<Poly> poly_sqrt(const Poly& p) {
    if (p.is_zero_poly()) return Poly();
    if (p.degree() % 2 != 0) return std::nullopt;
    auto ls = exact_sqrt(p.lc());
    if (!ls) return std::nullopt;
    int h = p.degree() / 2;
    std::vector<GaussRational> s(h + 1, GaussRational(0));
    s[h] = *ls;
    // match coefficients from the top: coeff of x^(2h-k) determines s[h-k]
    for (int k = 1; k <= h; ++k) {
        GaussRational acc(0);
        for (int i = 1; i < k; ++i) acc += s[h - i] * s[h - k + i];
        s[h - k] = (p.coeff(2 * h - k) - acc) / (GaussRational(2) * s[h]);
    }
    Poly cand{std::vector<GaussRational>(s)};
    if (cand * cand == p) return cand;
    return std::nullopt;
}

inline std::string to_string(const Poly& p, const std::string& var = "z") {
    if (p.is_zero_poly()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        GaussRational ck = p.coeff(k);
        if (ck.is_zero()) continue;
        std::string cs = to_string(ck);
        bool neg = cs.size() && cs[0] == '-';
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (neg) cs = cs.substr(1);
        bool composite = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos
                         || cs.find('i') != std::string::npos;
        if (k == 0) {
            out += composite ? "(" + cs + ")" : cs;
        } else {
            if (cs != "1") out += composite ? "(" + cs + ")*" : cs + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace foegz
