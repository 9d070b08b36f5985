#ifndef TKT_MAT2_HPP
#define TKT_MAT2_HPP

#include <stdexcept>

#include "tkt/chebyshev.hpp"
#include "tkt/scalar.hpp"

namespace tkt {

// 2x2 matrix over a field; representation images carry determinant 1.
template <class K>
struct Mat2 {
    K a11, a12, a21, a22;

    static Mat2 identity() { return {K(1), K(0), K(0), K(1)}; }

    K trace() const { return a11 + a22; }
    K det() const { return a11 * a22 - a12 * a21; }

    friend Mat2 operator*(const Mat2 &x, const Mat2 &y) {
        return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
                x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
    }

    // Inverse of a determinant-1 matrix: the adjugate.
    Mat2 inv_unimodular() const { return {a22, -a12, -a21, a11}; }
};

// A^k for det A = 1 via Cayley-Hamilton: A^k = S_k(tr A) A - S_{k-1}(tr A) Id.
template <class K>
Mat2<K> mat_power(const Mat2<K> &A, int k, double det_tol = 1e-9) {
    if constexpr (field_traits<K>::exact) {
        if (!(A.det() == K(1))) throw std::domain_error("mat_power: determinant != 1");
    } else {
        if (mag(A.det() - K(1)) > det_tol) throw std::domain_error("mat_power: determinant != 1");
    }
    K t = A.trace();
    K sk = cheb_eval(k, t);
    K skm = cheb_eval(k - 1, t);
    Mat2<K> r{A.a11 * sk - skm, A.a12 * sk, A.a21 * sk, A.a22 * sk - skm};
    return r;
}

}  // namespace tkt

#endif
