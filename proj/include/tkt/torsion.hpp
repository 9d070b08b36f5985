#ifndef TKT_TORSION_HPP
#define TKT_TORSION_HPP

#include <string>

#include "tkt/variety.hpp"

namespace tkt {

struct CertifyReport {
    bool ok = true;
    std::string detail;
};

// The closed longitude torsion as a rational function of z:
//   -(2n+1) S_n^2 + 2n S_n S_{n-1} - 2 (S'_n - S'_{n-1}) / (S_n - S_{n-1}).
RatFunc<Rat> torsion_lambda_ratfunc(const TwistKnot &knot);

CD torsion_lambda(const TwistKnot &knot, CD z);

// Meridian shortcut: (1/2) dF/dz = (1/2)(f1'(z)(m^2+m^-2) + f2'(z)).
CD torsion_mu(const TwistKnot &knot, CD m, CD z);

// -(m / 2E_gamma) det d(F,E_gamma)/d(m,z), with partial derivatives taken
// from the Laurent expansions of F and E_gamma.
CD torsion_jacobian(const TwistKnot &knot, const Slope &slope, CD m, CD z);

// Porti change-of-curve route: T_lambda * (p (l/m)(dm/dl) + q), with dl/dm
// from the chain rule along the variety.
CD change_of_curve(const TwistKnot &knot, const Slope &slope, CD m, CD z);

// Three-variable cross-check: -(m/2E) det d(F, m^p l^q, H)/d(m,z,l) with
// H(m,z,l) = l - (g1(z) m^2 + g2(z)); requires F = H = 0 at the input.
CD torsion_three_variable(const TwistKnot &knot, const Slope &slope, CD m, CD z, CD l);

// Exact certification of the two z-only identities
//   -g1' f3 + 2 g2' - g1 f3' + g1 T_lambda / f1 = 0
//   -2 g1' + g2' f3 + g2 T_lambda / f1 = 0.
CertifyReport zeqn_certify(const TwistKnot &knot);

// Exact certification of the Laurent reduction
//   (m - m^-3)(g1' m^2 + g2') - m g1 f3'
//     = (-g1' f3 + 2 g2' - g1 f3') m + (-2 g1' + g2' f3) m^-1
// modulo m^4 + f3 m^2 + 1.
CertifyReport simp_certify(const TwistKnot &knot);

}  // namespace tkt

#endif
