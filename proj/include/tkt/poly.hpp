#ifndef TKT_POLY_HPP
#define TKT_POLY_HPP

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tkt/scalar.hpp"

namespace tkt {

// Degree of the zero polynomial. A distinguished sentinel, not -1, so that
// degree arithmetic on nonzero polynomials can never collide with it.
inline constexpr int kDegZero = std::numeric_limits<int>::min();

// Univariate polynomial over a field K, coefficient index = degree in z.
// Invariant: the stored leading coefficient is nonzero unless the polynomial
// is zero (empty coefficient vector).
template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(K v) { return Poly(std::vector<K>{std::move(v)}); }
    static Poly one() { return constant(K(1)); }
    // z^d with the given coefficient.
    static Poly monomial(int d, K coef = K(1)) {
        if (field_traits<K>::is_zero(coef)) return Poly();
        std::vector<K> c(static_cast<size_t>(d) + 1, K(0));
        c.back() = std::move(coef);
        return Poly(std::move(c));
    }
    static Poly variable() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kDegZero : static_cast<int>(c_.size()) - 1; }
    const std::vector<K> &coeffs() const { return c_; }
    K coeff(int d) const {
        return (d < 0 || d >= static_cast<int>(c_.size())) ? K(0) : c_[static_cast<size_t>(d)];
    }
    const K &leading() const {
        if (c_.empty()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
        return c_.back();
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto &x : r.c_) x = -x;
        return r;
    }

    friend Poly operator+(const Poly &a, const Poly &b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly &a, const Poly &b) { return a + (-b); }
    friend Poly operator*(const Poly &a, const Poly &b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly &a, const K &s) {
        Poly r(a);
        for (auto &x : r.c_) x = x * s;
        r.trim();
        return r;
    }
    friend Poly operator*(const K &s, const Poly &a) { return a * s; }

    friend bool operator==(const Poly &a, const Poly &b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

    // Horner evaluation at a point of (possibly) another field E, converting
    // coefficients with the supplied cast.
    template <class E, class Cast>
    E eval_as(const E &x, Cast cast) const {
        E acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + cast(c_[i]);
        return acc;
    }
    K eval(const K &x) const {
        return eval_as<K>(x, [](const K &v) { return v; });
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K(static_cast<int>(i));
        return Poly(std::move(c));
    }

    Poly pow(int e) const {
        if (e < 0) throw std::domain_error("Poly::pow: negative exponent");
        Poly r = one();
        Poly base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            base = base * base;
        }
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        K inv = K(1) / leading();
        return *this * inv;
    }

    double max_coeff_mag() const {
        double m = 0.0;
        for (const auto &x : c_) m = std::max(m, mag(x));
        return m;
    }

  private:
    void trim() {
        while (!c_.empty() && field_traits<K>::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

// Euclidean division: a = q*b + r with deg r < deg b.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K> &a, const Poly<K> &b) {
    if (b.is_zero()) throw std::domain_error("Poly divmod: division by zero polynomial");
    Poly<K> r = a;
    std::vector<K> q;
    int db = b.degree();
    if (r.degree() >= db) q.assign(static_cast<size_t>(r.degree() - db) + 1, K(0));
    K lead_inv = K(1) / b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        int d = r.degree() - db;
        K f = r.leading() * lead_inv;
        q[static_cast<size_t>(d)] = f;
        r = r - Poly<K>::monomial(d, f) * b;
    }
    return {Poly<K>(std::move(q)), r};
}

// Exact quotient; throws if the division leaves a remainder.
template <class K>
Poly<K> divexact(const Poly<K> &a, const Poly<K> &b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("Poly divexact: inexact division");
    return q;
}

// Monic greatest common divisor over an exact field. gcd(0,0) = 0.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    static_assert(field_traits<K>::exact, "poly_gcd is exact-mode only");
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        Poly<K> r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a;
}

template <class To, class From, class Cast>
Poly<To> poly_cast(const Poly<From> &p, Cast cast) {
    std::vector<To> c;
    c.reserve(p.coeffs().size());
    for (const auto &x : p.coeffs()) c.push_back(cast(x));
    return Poly<To>(std::move(c));
}

inline Poly<CD> to_cd_poly(const Poly<Rat> &p) {
    return poly_cast<CD>(p, [](const Rat &x) { return to_cd(x); });
}
inline Poly<CD> to_cd_poly(const Poly<GaussRat> &p) {
    return poly_cast<CD>(p, [](const GaussRat &x) { return to_cd(x); });
}
inline Poly<GaussRat> to_gauss_poly(const Poly<Rat> &p) {
    return poly_cast<GaussRat>(p, [](const Rat &x) { return to_gauss(x); });
}

}  // namespace tkt

#endif
