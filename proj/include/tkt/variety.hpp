#ifndef TKT_VARIETY_HPP
#define TKT_VARIETY_HPP

#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "tkt/bivlaurent.hpp"
#include "tkt/chebyshev.hpp"
#include "tkt/mat2.hpp"
#include "tkt/poly.hpp"
#include "tkt/ratfunc.hpp"

namespace tkt {

// The twist knot K_{2n}, n != 0. Hyperbolic exactly when n is not 0 or 1.
struct TwistKnot {
    int n;
    explicit TwistKnot(int n_) : n(n_) {
        if (n == 0) throw std::invalid_argument("TwistKnot: n must be nonzero");
    }
    bool hyperbolic() const { return n != 0 && n != 1; }
};

// Boundary slope p/q, normalized so that gcd(|p|,|q|) = 1, q >= 0, and the
// meridian is canonically 1/0.
struct Slope {
    int p = 1;
    int q = 0;

    Slope(int p_, int q_);
    static Slope parse(const std::string &s);  // "p/q"
    bool even_p() const { return p % 2 == 0; }
    std::string str() const;
};

struct FParts {
    Poly<Rat> f1;       // S_n (S_n - S_{n-1})
    Poly<Rat> f2;       // -(z-1) S_n^2 + S_{n-1}^2
    RatFunc<Rat> f3;    // f2 / f1
};
FParts f_parts(const TwistKnot &knot);

struct GParts {
    RatFunc<Rat> g1;    // -(z-2)(S_{n+1}-S_{n-1})S_n^2 / (S_n - S_{n-1})
    Poly<Rat> g2;       // (z-2)(S_n + S_{n-1})S_n + 1
};
GParts g_parts(const TwistKnot &knot);

// z = tr rho(w) = 2 + (2 - m^2 - m^-2) u + u^2.
template <class K>
K trace_w(const K &m, const K &u) {
    K m2 = m * m;
    K m2inv = K(1) / m2;
    return K(2) + (K(2) - m2 - m2inv) * u + u * u;
}

// Riley polynomial S_{n+1}(z) - (u^2 - (u+1)(m^2 + m^-2 - 3)) S_n(z),
// z taken from trace_w.
template <class K>
K riley_eval(const TwistKnot &knot, const K &m, const K &u) {
    K z = trace_w(m, u);
    K m2 = m * m;
    K m2inv = K(1) / m2;
    K factor = u * u - (u + K(1)) * (m2 + m2inv - K(3));
    return cheb_eval(knot.n + 1, z) - factor * cheb_eval(knot.n, z);
}

// u = (z-2) S_n / (S_n - S_{n-1}); throws when the denominator vanishes.
template <class K>
K u_from_z(const TwistKnot &knot, const K &z) {
    K sn = cheb_eval(knot.n, z);
    K snm = cheb_eval(knot.n - 1, z);
    K den = sn - snm;
    if constexpr (field_traits<K>::exact) {
        if (field_traits<K>::is_zero(den))
            throw std::domain_error("u_from_z: S_n - S_{n-1} vanishes");
    } else {
        if (mag(den) < 1e-12) throw std::domain_error("u_from_z: S_n - S_{n-1} near zero");
    }
    return (z - K(2)) * sn / den;
}

// The representation matrices rho(a), rho(b).
template <class K>
std::pair<Mat2<K>, Mat2<K>> rep_matrices(const K &m, const K &u) {
    K minv = K(1) / m;
    Mat2<K> a{m, K(1), K(0), minv};
    Mat2<K> b{m, K(0), -u, minv};
    return {a, b};
}

// rho(w^n) and rho(w_*^n) by the Chebyshev closed forms, valid for any (m,u)
// with z = trace_w(m,u).
template <class K>
std::pair<Mat2<K>, Mat2<K>> word_matrices(const TwistKnot &knot, const K &m, const K &u) {
    K z = trace_w(m, u);
    K sn = cheb_eval(knot.n, z);
    K snp = cheb_eval(knot.n + 1, z);
    K minv = K(1) / m;
    K m2 = m * m, m2inv = minv * minv;
    Mat2<K> wn{snp - (K(1) + (K(2) - m2inv) * u + u * u) * sn, (minv - m - m * u) * sn,
               ((m - minv) * u + m * u * u) * sn, snp - (K(1) - m2 * u) * sn};
    Mat2<K> wsn{snp - (K(1) - m2inv * u) * sn, (m - minv - minv * u) * sn,
                ((minv - m) * u + minv * u * u) * sn, snp - (K(1) + (K(2) - m2) * u + u * u) * sn};
    return {wn, wsn};
}

// F(m,z) = f1(z)(m^2 + m^-2) + f2(z).
template <class K>
K eval_F(const TwistKnot &knot, const K &m, const K &z) {
    K sn = cheb_eval(knot.n, z);
    K snm = cheb_eval(knot.n - 1, z);
    K m2 = m * m;
    K x = m2 + K(1) / m2;
    return sn * (sn - snm) * x - (z - K(1)) * sn * sn + snm * snm;
}

// F as a Laurent polynomial in m: f1 m^2 + f2 + f1 m^-2.
BivLaurent<Rat> F_laurent(const TwistKnot &knot);

// l^{+1} (sign=+1) or l^{-1} (sign=-1) as Laurent polynomials in m:
//   l^{±1} = -(z-2) S_n^2 m^{±4} - (z-2) S_n (S_n - S_{n-1}) m^{±2} + (S_n-S_{n-1})^2,
// obtained from the fraction form g1 m^2 + g2 via m^4 = -f3 m^2 - 1.
BivLaurent<Rat> longitude_laurent(const TwistKnot &knot, int sign);

// E_gamma = m^p l^q as a Laurent polynomial (q >= 0 by slope normalization).
BivLaurent<Rat> eigen_laurent(const TwistKnot &knot, const Slope &slope);

// Fraction form of l: g1(z) m^2 + g2(z).
template <class K>
K longitude_fraction(const TwistKnot &knot, const K &m, const K &z) {
    K sn = cheb_eval(knot.n, z);
    K snm = cheb_eval(knot.n - 1, z);
    K snp = cheb_eval(knot.n + 1, z);
    K den = sn - snm;
    if constexpr (field_traits<K>::exact) {
        if (field_traits<K>::is_zero(den))
            throw std::domain_error("longitude_fraction: S_n - S_{n-1} vanishes");
    } else {
        if (mag(den) < 1e-12)
            throw std::domain_error("longitude_fraction: S_n - S_{n-1} near zero");
    }
    return -(z - K(2)) * (snp - snm) * sn * sn / den * m * m +
           (z - K(2)) * (sn + snm) * sn + K(1);
}

// Scale used by the on-variety residual test: 1e-9 * (1+|m|^4) * max coeff.
double F_scale(const TwistKnot &knot, CD m);
bool on_variety(const TwistKnot &knot, CD m, CD z, double tol = 1e-9);

// The longitude eigenvalue l at an on-variety point; evaluates both the
// fraction form and the Laurent form and requires them to agree.
CD longitude_eigen(const TwistKnot &knot, CD m, CD z, double tol = 1e-8);

// E_gamma = m^p l^q at an on-variety point.
CD eigen_gamma(const TwistKnot &knot, const Slope &slope, CD m, CD z);

// A random numeric point on {F = 0} away from the standard degeneracies
// (S_n = S_{n-1}, z = +-2, m near 0). Retries internally.
struct VarietySample {
    CD m;
    CD z;
    CD u;
};
VarietySample sample_on_variety(const TwistKnot &knot, std::mt19937_64 &rng);

}  // namespace tkt

#endif
