#ifndef TKT_RATFUNC_HPP
#define TKT_RATFUNC_HPP

#include <stdexcept>
#include <utility>

#include "tkt/poly.hpp"

namespace tkt {

// Quotient of two polynomials. In exact modes the representation is kept
// normalized: gcd(num, den) = 1 and den monic. In float mode no
// normalization is attempted and evaluation rejects near-zeros of den.
template <class K>
class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly<K>::one()) {}
    RatFunc(int v) : num_(Poly<K>::constant(K(v))), den_(Poly<K>::one()) {}  // NOLINT
    explicit RatFunc(Poly<K> p) : num_(std::move(p)), den_(Poly<K>::one()) {}
    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        normalize();
    }

    static RatFunc constant(K v) { return RatFunc(Poly<K>::constant(std::move(v))); }
    static RatFunc variable() { return RatFunc(Poly<K>::variable()); }

    const Poly<K> &num() const { return num_; }
    const Poly<K> &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // Degree as numerator-minus-denominator difference (kDegZero if zero).
    int degree() const {
        return num_.is_zero() ? kDegZero : num_.degree() - den_.degree();
    }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFunc operator+(const RatFunc &a, const RatFunc &b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc &a, const RatFunc &b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc &a, const RatFunc &b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc &a, const RatFunc &b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
    RatFunc &operator-=(const RatFunc &o) { return *this = *this - o; }
    RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }
    RatFunc &operator/=(const RatFunc &o) { return *this = *this / o; }

    friend bool operator==(const RatFunc &a, const RatFunc &b) {
        if constexpr (field_traits<K>::exact) {
            return a.num_ * b.den_ == b.num_ * a.den_;
        } else {
            return a.num_ == b.num_ && a.den_ == b.den_;
        }
    }
    friend bool operator!=(const RatFunc &a, const RatFunc &b) { return !(a == b); }

    // Quotient-rule derivative.
    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    RatFunc pow(int e) const {
        if (e < 0) return RatFunc(1) / pow(-e);
        RatFunc r(1);
        RatFunc base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            base = base * base;
        }
        return r;
    }

    template <class E, class Cast>
    E eval_as(const E &x, Cast cast, double den_tol = 1e-12) const {
        E d = den_.template eval_as<E>(x, cast);
        if constexpr (!field_traits<K>::exact) {
            double scale = den_.max_coeff_mag();
            if (mag(d) < den_tol * (1.0 + scale))
                throw std::domain_error("RatFunc: evaluation at (near-)pole");
        } else {
            (void)den_tol;
            if (field_traits<E>::is_zero(d))
                throw std::domain_error("RatFunc: evaluation at pole");
        }
        return num_.template eval_as<E>(x, cast) / d;
    }
    K eval(const K &x) const {
        return eval_as<K>(x, [](const K &v) { return v; });
    }

  private:
    void normalize() {
        if constexpr (field_traits<K>::exact) {
            if (num_.is_zero()) {
                den_ = Poly<K>::one();
                return;
            }
            Poly<K> g = poly_gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = divexact(num_, g);
                den_ = divexact(den_, g);
            }
            K inv = K(1) / den_.leading();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly<K> num_;
    Poly<K> den_;
};

// RatFunc over an exact field is itself a field; this lets Poly<RatFunc<K>>
// carry polynomial identities with rational-function coefficients.
template <class K>
struct field_traits<RatFunc<K>> {
    static constexpr bool exact = field_traits<K>::exact;
    static bool is_zero(const RatFunc<K> &x) { return x.is_zero(); }
};

template <class K>
double mag(const RatFunc<K> &x) {
    return x.num().max_coeff_mag();
}

template <class To, class From, class Cast>
RatFunc<To> ratfunc_cast(const RatFunc<From> &f, Cast cast) {
    return RatFunc<To>(poly_cast<To>(f.num(), cast), poly_cast<To>(f.den(), cast));
}

inline RatFunc<GaussRat> to_gauss_ratfunc(const RatFunc<Rat> &f) {
    return ratfunc_cast<GaussRat>(f, [](const Rat &x) { return to_gauss(x); });
}

// Evaluate an exact RatFunc at a complex-double point.
inline CD eval_cd(const RatFunc<Rat> &f, CD x) {
    return f.eval_as<CD>(x, [](const Rat &v) { return to_cd(v); });
}
inline CD eval_cd(const RatFunc<GaussRat> &f, CD x) {
    return f.eval_as<CD>(x, [](const GaussRat &v) { return to_cd(v); });
}
inline CD eval_cd(const Poly<Rat> &p, CD x) {
    return p.eval_as<CD>(x, [](const Rat &v) { return to_cd(v); });
}
inline CD eval_cd(const Poly<GaussRat> &p, CD x) {
    return p.eval_as<CD>(x, [](const GaussRat &v) { return to_cd(v); });
}

// Cancellation-free evaluation at a complex-double point: the point is lifted
// exactly to Q(i) (doubles are dyadic), the Horner recursion runs over Q(i),
// and only the final value is rounded. Needed for high-degree polynomials
// whose plain double evaluation loses everything to cancellation.
inline CD eval_exact(const Poly<GaussRat> &p, CD x) {
    return to_cd(p.eval(gauss_from_cd(x)));
}
inline CD eval_exact(const Poly<Rat> &p, CD x) {
    GaussRat acc = p.eval_as<GaussRat>(gauss_from_cd(x), [](const Rat &v) { return to_gauss(v); });
    return to_cd(acc);
}
inline CD eval_exact(const RatFunc<GaussRat> &f, CD x) {
    GaussRat z = gauss_from_cd(x);
    GaussRat d = f.den().eval(z);
    if (d.is_zero()) throw std::domain_error("eval_exact: evaluation at pole");
    return to_cd(f.num().eval(z) / d);
}
inline CD eval_exact(const RatFunc<Rat> &f, CD x) {
    auto cast = [](const Rat &v) { return to_gauss(v); };
    GaussRat z = gauss_from_cd(x);
    GaussRat d = f.den().eval_as<GaussRat>(z, cast);
    if (d.is_zero()) throw std::domain_error("eval_exact: evaluation at pole");
    return to_cd(f.num().eval_as<GaussRat>(z, cast) / d);
}

}  // namespace tkt

#endif
