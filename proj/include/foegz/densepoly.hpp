#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "foegz/rational.hpp"

namespace foegz {

// ---- ring hooks on the base coefficient field -----------------------------

inline bool is_zero(const GaussRational& c) { return c.is_zero(); }
inline GaussRational div_exact(const GaussRational& a, const GaussRational& b) { return a / b; }
// gcd in a field: any nonzero element is a unit.
inline GaussRational ring_gcd(const GaussRational& a, const GaussRational& b) {
    if (is_zero(a) && is_zero(b)) return GaussRational(0);
    return GaussRational(1);
}
// the unit carried by a field element is the element itself
inline GaussRational unit_part(const GaussRational& c) { return c; }

/// Dense univariate polynomial over a commutative ring C, coefficients stored
/// by ascending degree. Nesting DensePoly<DensePoly<...>> gives multivariate
/// polynomial rings; every algorithm below only needs +,-,*, exact division,
/// zero test and gcd on C.
template <class C>
class DensePoly {
public:
    std::vector<C> c;

    DensePoly() = default;
    DensePoly(long long v) : DensePoly(C(v)) {}
    explicit DensePoly(C c0) { c.push_back(std::move(c0)); trim(); }
    explicit DensePoly(std::vector<C> cs) : c(std::move(cs)) { trim(); }

    static DensePoly zero() { return DensePoly(); }
    static DensePoly one() { return DensePoly(C(1)); }
    // the monomial x^k
    static DensePoly monomial(int k, C coeff = C(1)) {
        DensePoly p;
        p.c.assign(k + 1, C(0));
        p.c[k] = std::move(coeff);
        p.trim();
        return p;
    }

    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }

    bool is_zero_poly() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for 0
    const C& lc() const {
        if (c.empty()) throw std::domain_error("DensePoly: lc of zero");
        return c.back();
    }
    C coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c.size())) return C(0);
        return c[k];
    }

    DensePoly operator-() const {
        DensePoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        DensePoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), C(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
        DensePoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), C(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return DensePoly();
        DensePoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, C(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    friend DensePoly operator*(const DensePoly& a, const C& s) {
        DensePoly r = a;
        for (auto& x : r.c) x = x * s;
        r.trim();
        return r;
    }
    DensePoly& operator+=(const DensePoly& o) { *this = *this + o; return *this; }
    DensePoly& operator-=(const DensePoly& o) { *this = *this - o; return *this; }
    DensePoly& operator*=(const DensePoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const DensePoly& a, const DensePoly& b) {
        return (a - b).is_zero_poly();
    }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

    // formal derivative in the polynomial variable
    DensePoly derivative() const {
        DensePoly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * C(static_cast<long long>(i));
        r.trim();
        return r;
    }

    // Horner evaluation at a ring element
    C eval(const C& x) const {
        C r(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }

    // substitute another polynomial for the variable
    DensePoly compose(const DensePoly& g) const {
        DensePoly r;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            r = r * g;
            r += DensePoly(*it);
        }
        return r;
    }
};

template <class C>
inline bool is_zero(const DensePoly<C>& p) { return p.is_zero_poly(); }

template <class C>
inline GaussRational unit_part(const DensePoly<C>& p) {
    return p.is_zero_poly() ? GaussRational(1) : unit_part(p.lc());
}

// Exact polynomial division; throws if b does not divide a.
template <class C>
DensePoly<C> div_exact(const DensePoly<C>& a, const DensePoly<C>& b) {
    if (b.is_zero_poly()) throw std::domain_error("DensePoly: division by zero poly");
    DensePoly<C> rem = a, q;
    if (a.is_zero_poly()) return q;
    int db = b.degree();
    if (rem.degree() < db) throw std::domain_error("DensePoly: inexact division");
    q.c.assign(rem.degree() - db + 1, C(0));
    while (!rem.is_zero_poly() && rem.degree() >= db) {
        int k = rem.degree() - db;
        C t = div_exact(rem.lc(), b.lc());
        q.c[k] = t;
        rem = rem - DensePoly<C>::monomial(k, t) * b;
    }
    if (!rem.is_zero_poly()) throw std::domain_error("DensePoly: inexact division");
    q.trim();
    return q;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r, deg r < deg b.
template <class C>
DensePoly<C> prem(DensePoly<C> a, const DensePoly<C>& b) {
    if (b.is_zero_poly()) throw std::domain_error("prem: zero divisor");
    int db = b.degree();
    int e = a.degree() - db + 1;
    if (e <= 0) return a;
    const C& lb = b.lc();
    while (!a.is_zero_poly() && a.degree() >= db) {
        int k = a.degree() - db;
        C la = a.lc();
        a = a * lb - DensePoly<C>::monomial(k, la) * b;
        --e;
    }
    // pad remaining lc(b) powers so the identity holds with the full exponent
    for (; e > 0; --e) a = a * lb;
    return a;
}

// content = gcd of coefficients (an element of C)
template <class C>
C poly_content(const DensePoly<C>& p) {
    C g(0);
    for (const auto& x : p.c) {
        if (is_zero(x)) continue;
        g = is_zero(g) ? x : ring_gcd(g, x);
    }
    return g;
}

// divide the whole polynomial by the unit of its leading chain, making the
// deepest leading base coefficient equal to 1 (a canonical representative)
template <class C>
DensePoly<C> unit_normalize(const DensePoly<C>& p) {
    if (p.is_zero_poly()) return p;
    GaussRational u = unit_part(p);
    if (u.is_one()) return p;
    DensePoly<C> r = p;
    for (auto& x : r.c) x = scale_by_unit(x, u);
    return r;
}

inline GaussRational scale_by_unit(const GaussRational& x, const GaussRational& u) {
    return x / u;
}
template <class C>
DensePoly<C> scale_by_unit(const DensePoly<C>& p, const GaussRational& u) {
    DensePoly<C> r = p;
    for (auto& x : r.c) x = scale_by_unit(x, u);
    return r;
}

template <class C>
DensePoly<C> primitive_part(const DensePoly<C>& p) {
    if (p.is_zero_poly()) return p;
    C ct = poly_content(p);
    DensePoly<C> r = p;
    for (auto& x : r.c) x = div_exact(x, ct);
    return unit_normalize(r);
}

// gcd by primitive PRS; result unit-normalized.
template <class C>
DensePoly<C> poly_gcd(DensePoly<C> a, DensePoly<C> b) {
    if (a.is_zero_poly()) return unit_normalize(b);
    if (b.is_zero_poly()) return unit_normalize(a);
    C ca = poly_content(a), cb = poly_content(b);
    C cg = ring_gcd(ca, cb);
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero_poly()) {
        DensePoly<C> r = prem(a, b);
        a = std::move(b);
        b = r.is_zero_poly() ? r : primitive_part(r);
    }
    DensePoly<C> g = a;
    for (auto& x : g.c) x = x * cg;
    return unit_normalize(g);
}

template <class C>
DensePoly<C> ring_gcd(const DensePoly<C>& a, const DensePoly<C>& b) {
    return poly_gcd(a, b);
}

namespace detail {
template <class C>
C ring_pow(const C& x, int e) {
    C r(1);
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}
} // namespace detail

/// Resultant of a and b via the subresultant PRS (Collins/Brown scheme):
/// pseudo-remainders divided by g*h^d keep intermediate growth polynomial
/// while staying inside the coefficient ring.
template <class C>
C resultant(DensePoly<C> a, DensePoly<C> b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return C(0);
    int sign = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        std::swap(a, b);
    }
    if (b.degree() == 0) {
        C r = detail::ring_pow(b.lc(), a.degree());
        return sign == 1 ? r : -r;
    }
    // pull out contents: res(ca*A, cb*B) = ca^degB cb^degA res(A,B)
    C ca = poly_content(a), cb = poly_content(b);
    DensePoly<C> A = a, B = b;
    for (auto& x : A.c) x = div_exact(x, ca);
    for (auto& x : B.c) x = div_exact(x, cb);
    C extra = detail::ring_pow(ca, b.degree()) * detail::ring_pow(cb, a.degree());

    C g(1), h(1);
    while (true) {
        int da = A.degree(), db = B.degree();
        int d = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        DensePoly<C> R = prem(A, B);
        A = B;
        C divisor = g * detail::ring_pow(h, d);
        if (!R.is_zero_poly()) {
            for (auto& x : R.c) x = div_exact(x, divisor);
        }
        B = R;
        g = A.lc();
        if (d > 0) h = div_exact(detail::ring_pow(g, d), detail::ring_pow(h, d - 1));
        if (B.is_zero_poly()) return C(0); // common factor of positive degree
        if (B.degree() == 0) {
            // res = s * lc(B)^degA / h^(degA-1)
            C numr = detail::ring_pow(B.lc(), A.degree());
            C res = div_exact(numr, detail::ring_pow(h, A.degree() - 1));
            res = res * extra;
            return sign == 1 ? res : -res;
        }
    }
}

/// Fraction-free (Bareiss) determinant over an integral domain. Used as the
/// independent route for resultant cross-checks.
template <class C>
C bareiss_det(std::vector<std::vector<C>> m) {
    const size_t n = m.size();
    if (n == 0) return C(1);
    int sign = 1;
    C prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            size_t piv = k + 1;
            while (piv < n && is_zero(m[piv][k])) ++piv;
            if (piv == n) return C(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                C t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = div_exact(t, prev);
            }
            m[i][k] = C(0);
        }
        prev = m[k][k];
    }
    C d = m[n - 1][n - 1];
    return sign == 1 ? d : -d;
}

/// Resultant as the determinant of the Sylvester matrix (oracle route).
template <class C>
C sylvester_resultant(const DensePoly<C>& a, const DensePoly<C>& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return C(0);
    int m = a.degree(), n = b.degree();
    if (m == 0 && n == 0) return C(1);
    size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<C>> s(dim, std::vector<C>(dim, C(0)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s[r][r + j] = a.c[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) s[n + r][r + j] = b.c[n - j];
    return bareiss_det(std::move(s));
}

} // namespace foegz
