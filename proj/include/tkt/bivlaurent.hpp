#ifndef TKT_BIVLAURENT_HPP
#define TKT_BIVLAURENT_HPP

#include <map>
#include <stdexcept>

#include "tkt/poly.hpp"
#include "tkt/ratfunc.hpp"

namespace tkt {

// Finite Laurent polynomial in m with Poly-in-z coefficients:
//   sum_e  terms[e](z) * m^e.
// Zero coefficient polynomials are never stored.
template <class K>
class BivLaurent {
  public:
    BivLaurent() = default;

    static BivLaurent term(int m_exp, Poly<K> coef) {
        BivLaurent r;
        r.add_term(m_exp, std::move(coef));
        return r;
    }

    const std::map<int, Poly<K>> &terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(int m_exp, Poly<K> coef) {
        if (coef.is_zero()) return;
        auto it = t_.find(m_exp);
        if (it == t_.end()) {
            t_.emplace(m_exp, std::move(coef));
        } else {
            it->second = it->second + coef;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    friend BivLaurent operator+(const BivLaurent &a, const BivLaurent &b) {
        BivLaurent r = a;
        for (const auto &[e, c] : b.t_) r.add_term(e, c);
        return r;
    }
    friend BivLaurent operator-(const BivLaurent &a, const BivLaurent &b) {
        BivLaurent r = a;
        for (const auto &[e, c] : b.t_) r.add_term(e, -c);
        return r;
    }
    friend BivLaurent operator*(const BivLaurent &a, const BivLaurent &b) {
        BivLaurent r;
        for (const auto &[ea, ca] : a.t_)
            for (const auto &[eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    BivLaurent pow(int e) const {
        if (e < 0) throw std::domain_error("BivLaurent::pow: negative exponent");
        BivLaurent r = term(0, Poly<K>::one());
        BivLaurent base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            base = base * base;
        }
        return r;
    }

    // Shift every m-exponent by s (multiplication by m^s).
    BivLaurent shifted(int s) const {
        BivLaurent r;
        for (const auto &[e, c] : t_) r.t_.emplace(e + s, c);
        return r;
    }

    // Partial derivative in m.
    BivLaurent dm() const {
        BivLaurent r;
        for (const auto &[e, c] : t_) {
            if (e == 0) continue;
            r.add_term(e - 1, c * K(e));
        }
        return r;
    }

    // Partial derivative in z.
    BivLaurent dz() const {
        BivLaurent r;
        for (const auto &[e, c] : t_) r.add_term(e, c.derivative());
        return r;
    }

    template <class E, class Cast>
    E eval_as(const E &m, const E &z, Cast cast) const {
        bool has_neg = !t_.empty() && t_.begin()->first < 0;
        if (has_neg && field_traits<E>::is_zero(m))
            throw std::domain_error("BivLaurent: evaluation at m = 0");
        E minv = has_neg ? E(1) / m : E(0);
        E acc(0);
        for (const auto &[e, c] : t_) {
            E mp(1);
            int a = e >= 0 ? e : -e;
            const E &base = e >= 0 ? m : minv;
            for (int i = 0; i < a; ++i) mp = mp * base;
            acc = acc + mp * c.template eval_as<E>(z, cast);
        }
        return acc;
    }

  private:
    std::map<int, Poly<K>> t_;
};

inline CD eval_cd(const BivLaurent<Rat> &f, CD m, CD z) {
    return f.eval_as<CD>(m, z, [](const Rat &v) { return to_cd(v); });
}

// Cancellation-free evaluation: (m, z) lifted exactly to Q(i).
inline CD eval_exact(const BivLaurent<Rat> &f, CD m, CD z) {
    GaussRat gm(Rat(m.real()), Rat(m.imag()));
    GaussRat gz(Rat(z.real()), Rat(z.imag()));
    return to_cd(f.eval_as<GaussRat>(gm, gz, [](const Rat &v) { return to_gauss(v); }));
}

template <class To, class From, class Cast>
BivLaurent<To> bivlaurent_cast(const BivLaurent<From> &f, Cast cast) {
    BivLaurent<To> r;
    for (const auto &[e, c] : f.terms()) r.add_term(e, poly_cast<To>(c, cast));
    return r;
}

}  // namespace tkt

#endif
