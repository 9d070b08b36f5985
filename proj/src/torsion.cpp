#include "tkt/torsion.hpp"

#include <cmath>

namespace tkt {

RatFunc<Rat> torsion_lambda_ratfunc(const TwistKnot &knot) {
    int n = knot.n;
    const Poly<Rat> &sn = cheb(n);
    const Poly<Rat> &snm = cheb(n - 1);
    Poly<Rat> head = Rat(-(2 * n + 1)) * (sn * sn) + Rat(2 * n) * (sn * snm);
    RatFunc<Rat> tail(Rat(-2) * (sn.derivative() - snm.derivative()), sn - snm);
    return RatFunc<Rat>(head) + tail;
}

CD torsion_lambda(const TwistKnot &knot, CD z) {
    return eval_cd(torsion_lambda_ratfunc(knot), z);
}

CD torsion_mu(const TwistKnot &knot, CD m, CD z) {
    FParts fp = f_parts(knot);
    CD x = m * m + CD(1.0) / (m * m);
    return 0.5 * (eval_cd(fp.f1.derivative(), z) * x + eval_cd(fp.f2.derivative(), z));
}

CD torsion_jacobian(const TwistKnot &knot, const Slope &slope, CD m, CD z) {
    BivLaurent<Rat> F = F_laurent(knot);
    BivLaurent<Rat> E = eigen_laurent(knot, slope);
    // The Laurent expansion of l^q carries huge coefficients while l itself
    // can be tiny; exact Q(i) Horner avoids the resulting cancellation.
    CD Fm = eval_exact(F.dm(), m, z);
    CD Fz = eval_exact(F.dz(), m, z);
    CD Em = eval_exact(E.dm(), m, z);
    CD Ez = eval_exact(E.dz(), m, z);
    CD Ev = eval_exact(E, m, z);
    if (std::abs(Ev) == 0.0) throw std::domain_error("torsion_jacobian: E_gamma = 0");
    CD det = Fm * Ez - Fz * Em;
    return -m / (2.0 * Ev) * det;
}

CD change_of_curve(const TwistKnot &knot, const Slope &slope, CD m, CD z) {
    FParts fp = f_parts(knot);
    GParts gp = g_parts(knot);
    CD g1 = eval_cd(gp.g1, z);
    CD dg1 = eval_cd(gp.g1.derivative(), z);
    CD dg2 = eval_cd(gp.g2.derivative(), z);
    CD df3 = eval_cd(fp.f3.derivative(), z);
    CD dldm = 2.0 * m * g1 - 2.0 * (m - ipow(m, -3)) * (dg1 * m * m + dg2) / df3;
    if (std::abs(dldm) < 1e-14) throw std::domain_error("change_of_curve: dl/dm vanishes");
    CD l = longitude_eigen(knot, m, z);
    CD factor = CD(slope.p) * (l / m) / dldm + CD(slope.q);
    return torsion_lambda(knot, z) * factor;
}

CD torsion_three_variable(const TwistKnot &knot, const Slope &slope, CD m, CD z, CD l) {
    GParts gp = g_parts(knot);
    CD g1 = eval_cd(gp.g1, z);
    CD g2 = eval_cd(gp.g2, z);
    double lscale = 1.0 + std::abs(l);
    if (std::abs(l - (g1 * m * m + g2)) > 1e-7 * lscale)
        throw std::domain_error("torsion_three_variable: H(m,z,l) != 0");
    BivLaurent<Rat> F = F_laurent(knot);
    CD Fm = eval_cd(F.dm(), m, z);
    CD Fz = eval_cd(F.dz(), m, z);
    CD E = ipow(m, slope.p) * ipow(l, slope.q);
    CD Em = CD(slope.p) * ipow(m, slope.p - 1) * ipow(l, slope.q);
    CD El = CD(slope.q) * ipow(m, slope.p) * ipow(l, slope.q - 1);
    CD Hm = -2.0 * m * g1;
    CD Hz = -(eval_cd(gp.g1.derivative(), z) * m * m + eval_cd(gp.g2.derivative(), z));
    // det of rows (Fm, Fz, 0), (Em, 0, El), (Hm, Hz, 1)
    CD det = Fm * (0.0 - El * Hz) - Fz * (Em - El * Hm);
    return -m / (2.0 * E) * det;
}

CertifyReport zeqn_certify(const TwistKnot &knot) {
    FParts fp = f_parts(knot);
    GParts gp = g_parts(knot);
    RatFunc<Rat> g2(gp.g2);
    RatFunc<Rat> T = torsion_lambda_ratfunc(knot);
    RatFunc<Rat> Tf1 = T / RatFunc<Rat>(fp.f1);
    RatFunc<Rat> dg1 = gp.g1.derivative();
    RatFunc<Rat> dg2 = g2.derivative();
    RatFunc<Rat> df3 = fp.f3.derivative();
    RatFunc<Rat> id1 = -dg1 * fp.f3 + RatFunc<Rat>(2) * dg2 - gp.g1 * df3 + gp.g1 * Tf1;
    RatFunc<Rat> id2 = RatFunc<Rat>(-2) * dg1 + dg2 * fp.f3 + g2 * Tf1;
    CertifyReport rep;
    if (!id1.is_zero()) {
        rep.ok = false;
        rep.detail = "first z-identity nonzero for n=" + std::to_string(knot.n);
    } else if (!id2.is_zero()) {
        rep.ok = false;
        rep.detail = "second z-identity nonzero for n=" + std::to_string(knot.n);
    }
    return rep;
}

CertifyReport simp_certify(const TwistKnot &knot) {
    using RF = RatFunc<Rat>;
    FParts fp = f_parts(knot);
    GParts gp = g_parts(knot);
    RF g1 = gp.g1;
    RF g2(gp.g2);
    RF dg1 = g1.derivative();
    RF dg2 = g2.derivative();
    RF f3 = fp.f3;
    RF df3 = f3.derivative();
    RF zero(0), one(1);

    // (m^4 - 1)(g1' m^2 + g2') - g1 f3' m^4
    //   - (-g1' f3 + 2 g2' - g1 f3') m^4 - (-2 g1' + g2' f3) m^2,
    // i.e. the m^3-cleared difference of eqn. LHS and RHS.
    Poly<RF> lhs = Poly<RF>({dg2, zero, dg1}) *
                       Poly<RF>({RF(-1), zero, zero, zero, one}) -
                   Poly<RF>::monomial(4, g1 * df3) -
                   Poly<RF>::monomial(4, RF(-1) * dg1 * f3 + RF(2) * dg2 - g1 * df3) -
                   Poly<RF>::monomial(2, RF(-2) * dg1 + dg2 * f3);
    Poly<RF> mod({one, zero, f3, zero, one});  // m^4 + f3 m^2 + 1
    Poly<RF> rem = divmod(lhs, mod).second;
    CertifyReport rep;
    if (!rem.is_zero()) {
        rep.ok = false;
        rep.detail = "Laurent reduction remainder nonzero for n=" + std::to_string(knot.n);
    }
    return rep;
}

}  // namespace tkt
