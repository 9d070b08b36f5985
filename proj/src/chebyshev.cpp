#include "tkt/chebyshev.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace tkt {

const Poly<Rat> &cheb(int k) {
    static std::map<int, Poly<Rat>> cache = {{0, Poly<Rat>::zero()}, {1, Poly<Rat>::one()}};
    static int hi = 1;  // largest cached index
    static int lo = 0;  // smallest cached index
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    const Poly<Rat> z = Poly<Rat>::variable();
    while (hi < k) {
        cache[hi + 1] = z * cache[hi] - cache[hi - 1];
        ++hi;
    }
    while (lo > k) {
        // S_{k-1} = z*S_k - S_{k+1}
        cache[lo - 1] = z * cache[lo] - cache[lo + 1];
        --lo;
    }
    return cache[k];
}

Poly<Rat> cheb_derivative(int k) { return cheb(k).derivative(); }

ChebIdentityReport cheb_identity_suite(int k_max) {
    ChebIdentityReport rep;
    const Poly<Rat> z = Poly<Rat>::variable();
    const Poly<Rat> one = Poly<Rat>::one();
    const Poly<Rat> z2m4 = z * z - Rat(4) * one;
    auto fail = [&rep](int k, const char *which) {
        rep.ok = false;
        std::ostringstream os;
        os << "identity " << which << " failed at k=" << k;
        rep.failure = os.str();
    };
    for (int k = -k_max; k <= k_max && rep.ok; ++k) {
        const Poly<Rat> &sk = cheb(k);
        const Poly<Rat> &skm = cheb(k - 1);
        Poly<Rat> dsk = sk.derivative();
        Poly<Rat> dskm = skm.derivative();
        if (sk * sk - z * sk * skm + skm * skm != one) fail(k, "(i)");
        if (Rat(k) * skm + Rat(k - 1) * sk != (z + Rat(2) * one) * (dsk - dskm)) fail(k, "(ii)");
        if (z2m4 * dsk != Rat(k - 1) * (z * sk) - Rat(2 * k) * skm) fail(k, "(iii)");
        if (z2m4 * dskm != Rat(2 * (k - 1)) * sk - Rat(k) * (z * skm)) fail(k, "(iv)");
        Poly<Rat> lhs = Rat(2) * (sk * dsk) - sk * skm - z * dsk * skm - z * sk * dskm +
                        Rat(2) * (skm * dskm);
        if (!lhs.is_zero()) fail(k, "(v)");
        ++rep.checked;
    }
    return rep;
}

}  // namespace tkt
