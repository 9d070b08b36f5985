#ifndef TKT_SCALAR_HPP
#define TKT_SCALAR_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tkt {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator).
using Rat = mpq_class;

// Complex double scalar.
using CD = std::complex<double>;

// Gaussian rational a + b*i with exact rational a, b.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(int v) : re(v), im(0) {}  // NOLINT: implicit by design, mirrors Rat(int)
    GaussRat(Rat r) : re(std::move(r)), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussRat conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat &operator+=(const GaussRat &o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat &operator-=(const GaussRat &o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat &operator*=(const GaussRat &o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRat inverse() const {
        Rat n = norm();
        if (n == 0) throw std::domain_error("GaussRat: division by zero");
        return {re / n, -im / n};
    }
    GaussRat &operator/=(const GaussRat &o) { return *this *= o.inverse(); }
};

inline GaussRat operator+(GaussRat a, const GaussRat &b) { return a += b; }
inline GaussRat operator-(GaussRat a, const GaussRat &b) { return a -= b; }
inline GaussRat operator*(GaussRat a, const GaussRat &b) { return a *= b; }
inline GaussRat operator/(GaussRat a, const GaussRat &b) { return a /= b; }
inline bool operator==(const GaussRat &a, const GaussRat &b) {
    return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const GaussRat &a, const GaussRat &b) { return !(a == b); }

// Field traits used by the generic polynomial code.
template <class K>
struct field_traits;

template <>
struct field_traits<Rat> {
    static constexpr bool exact = true;
    static bool is_zero(const Rat &x) { return x == 0; }
};

template <>
struct field_traits<GaussRat> {
    static constexpr bool exact = true;
    static bool is_zero(const GaussRat &x) { return x.is_zero(); }
};

template <>
struct field_traits<CD> {
    static constexpr bool exact = false;
    static bool is_zero(const CD &x) { return x == CD(0.0, 0.0); }
};

// A rational function field over Rat is itself a field; the trait is
// specialized in ratfunc.hpp.

inline double to_double(const Rat &x) { return x.get_d(); }
inline CD to_cd(const Rat &x) { return CD(x.get_d(), 0.0); }
inline CD to_cd(const GaussRat &x) { return CD(x.re.get_d(), x.im.get_d()); }
inline CD to_cd(const CD &x) { return x; }
inline GaussRat to_gauss(const Rat &x) { return GaussRat(x); }
inline GaussRat to_gauss(const GaussRat &x) { return x; }
// Exact: every finite double is a dyadic rational.
inline GaussRat gauss_from_cd(CD x) { return GaussRat(Rat(x.real()), Rat(x.imag())); }

// Coefficient-size proxy, used for scale-aware conversion to doubles.
inline double mag(const Rat &x) { return std::abs(x.get_d()); }
inline double mag(const GaussRat &x) { return std::abs(x.re.get_d()) + std::abs(x.im.get_d()); }
inline double mag(const CD &x) { return std::abs(x); }

// Integer power with exact handling of negative exponents (no branch cuts).
inline CD ipow(CD base, int e) {
    if (e < 0) return CD(1.0) / ipow(base, -e);
    CD r = 1.0;
    for (; e > 0; --e) r *= base;
    return r;
}

// Parse a (possibly signed) decimal string like "-1.25" into an exact Rat.
Rat rat_from_decimal(const std::string &s);

std::string rat_to_string(const Rat &x);
std::string gauss_to_string(const GaussRat &x);

}  // namespace tkt

#endif
