#ifndef TKT_CHEBYSHEV_HPP
#define TKT_CHEBYSHEV_HPP

#include <string>

#include "tkt/poly.hpp"

namespace tkt {

// S_k(z): S_0 = 0, S_1 = 1, S_{k+1} = z*S_k - S_{k-1}, extended to all
// integer k (backward recursion for k < 0). Values are cached.
const Poly<Rat> &cheb(int k);

// Formal derivative S'_k.
Poly<Rat> cheb_derivative(int k);

// Scalar recurrence evaluation of S_k at a point, any field.
template <class K>
K cheb_eval(int k, const K &t) {
    bool neg = k < 0;
    if (neg) k = -k;  // S_{-k} = -S_k
    K prev(0), cur(1);  // S_0, S_1
    if (k == 0) return K(0);
    for (int i = 1; i < k; ++i) {
        K next = t * cur - prev;
        prev = cur;
        cur = next;
    }
    return neg ? -cur : cur;
}

struct ChebIdentityReport {
    bool ok = true;
    int checked = 0;
    std::string failure;  // empty when ok
};

// Certifies, as exact polynomial identities for every |k| <= k_max:
//   (i)   S_k^2 - z S_k S_{k-1} + S_{k-1}^2 = 1
//   (ii)  k S_{k-1} + (k-1) S_k = (z+2)(S'_k - S'_{k-1})
//   (iii) (z^2-4) S'_k = (k-1) z S_k - 2k S_{k-1}
//   (iv)  (z^2-4) S'_{k-1} = 2(k-1) S_k - z k S_{k-1}
//   (v)   2 S_k S'_k - S_k S_{k-1} - z S'_k S_{k-1} - z S_k S'_{k-1}
//           + 2 S_{k-1} S'_{k-1} = 0
ChebIdentityReport cheb_identity_suite(int k_max);

}  // namespace tkt

#endif
