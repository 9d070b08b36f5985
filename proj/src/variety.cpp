#include "tkt/variety.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace tkt {

Slope::Slope(int p_, int q_) : p(p_), q(q_) {
    if (p == 0 && q == 0) throw std::invalid_argument("Slope: 0/0");
    int g = std::gcd(std::abs(p), std::abs(q));
    if (g != 1) throw std::invalid_argument("Slope: p and q must be coprime");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (q == 0) p = 1;  // meridian, canonically 1/0
}

Slope Slope::parse(const std::string &s) {
    auto pos = s.find('/');
    if (pos == std::string::npos || pos == 0 || pos + 1 == s.size())
        throw std::invalid_argument("Slope: expected \"p/q\"");
    int p = std::stoi(s.substr(0, pos));
    int q = std::stoi(s.substr(pos + 1));
    if (q == 0 && p != 1) throw std::invalid_argument("Slope: q=0 allowed only as 1/0");
    return Slope(p, q);
}

std::string Slope::str() const {
    std::ostringstream os;
    os << p << "/" << q;
    return os.str();
}

FParts f_parts(const TwistKnot &knot) {
    const Poly<Rat> &sn = cheb(knot.n);
    const Poly<Rat> &snm = cheb(knot.n - 1);
    const Poly<Rat> z = Poly<Rat>::variable();
    const Poly<Rat> one = Poly<Rat>::one();
    FParts fp;
    fp.f1 = sn * (sn - snm);
    fp.f2 = -(z - one) * sn * sn + snm * snm;
    fp.f3 = RatFunc<Rat>(fp.f2, fp.f1);
    return fp;
}

GParts g_parts(const TwistKnot &knot) {
    const Poly<Rat> &sn = cheb(knot.n);
    const Poly<Rat> &snm = cheb(knot.n - 1);
    const Poly<Rat> &snp = cheb(knot.n + 1);
    const Poly<Rat> z = Poly<Rat>::variable();
    const Poly<Rat> one = Poly<Rat>::one();
    const Poly<Rat> zm2 = z - Rat(2) * one;
    GParts gp;
    gp.g1 = RatFunc<Rat>(-(zm2 * (snp - snm) * sn * sn), sn - snm);
    gp.g2 = zm2 * (sn + snm) * sn + one;
    return gp;
}

BivLaurent<Rat> F_laurent(const TwistKnot &knot) {
    FParts fp = f_parts(knot);
    BivLaurent<Rat> F;
    F.add_term(2, fp.f1);
    F.add_term(0, fp.f2);
    F.add_term(-2, fp.f1);
    return F;
}

BivLaurent<Rat> longitude_laurent(const TwistKnot &knot, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("longitude_laurent: sign");
    const Poly<Rat> &sn = cheb(knot.n);
    const Poly<Rat> &snm = cheb(knot.n - 1);
    const Poly<Rat> z = Poly<Rat>::variable();
    const Poly<Rat> one = Poly<Rat>::one();
    const Poly<Rat> zm2 = z - Rat(2) * one;
    const Poly<Rat> diff = sn - snm;
    BivLaurent<Rat> l;
    l.add_term(4 * sign, -(zm2 * sn * sn));
    l.add_term(2 * sign, -(zm2 * sn * diff));
    l.add_term(0, diff * diff);
    return l;
}

BivLaurent<Rat> eigen_laurent(const TwistKnot &knot, const Slope &slope) {
    return longitude_laurent(knot, 1).pow(slope.q).shifted(slope.p);
}

double F_scale(const TwistKnot &knot, CD m) {
    FParts fp = f_parts(knot);
    double cmax = std::max(fp.f1.max_coeff_mag(), fp.f2.max_coeff_mag());
    double am = std::abs(m);
    return (1.0 + am * am * am * am) * cmax;
}

bool on_variety(const TwistKnot &knot, CD m, CD z, double tol) {
    return std::abs(eval_F(knot, m, z)) <= tol * F_scale(knot, m);
}

CD longitude_eigen(const TwistKnot &knot, CD m, CD z, double tol) {
    if (!on_variety(knot, m, z, 1e-7))
        throw std::domain_error("longitude_eigen: point is off the variety");
    CD frac = longitude_fraction(knot, m, z);
    CD laur = eval_cd(longitude_laurent(knot, 1), m, z);
    if (std::abs(frac - laur) > tol * (1.0 + std::abs(frac)))
        throw std::runtime_error("longitude_eigen: fraction and Laurent forms disagree");
    return laur;
}

CD eigen_gamma(const TwistKnot &knot, const Slope &slope, CD m, CD z) {
    if (slope.q == 0) return ipow(m, slope.p);
    CD l = longitude_eigen(knot, m, z);
    return ipow(m, slope.p) * ipow(l, slope.q);
}

VarietySample sample_on_variety(const TwistKnot &knot, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> re(-2.5, 3.5), im(-2.0, 2.0), coin(0.0, 1.0);
    FParts fp = f_parts(knot);
    for (int attempt = 0; attempt < 256; ++attempt) {
        CD z(re(rng), im(rng));
        if (std::abs(z * z - 4.0) < 0.05) continue;
        CD sn = cheb_eval(knot.n, z), snm = cheb_eval(knot.n - 1, z);
        if (std::abs(sn - snm) < 0.05 || std::abs(sn) < 0.05) continue;
        CD f3 = eval_cd(fp.f3, z);
        // m^2 is a root of t^2 + f3 t + 1 = 0
        CD disc = std::sqrt(f3 * f3 - 4.0);
        CD t = coin(rng) < 0.5 ? (-f3 + disc) / 2.0 : (-f3 - disc) / 2.0;
        if (std::abs(t) < 1e-6) continue;
        CD m = std::sqrt(t);
        if (coin(rng) < 0.5) m = -m;
        if (std::abs(m) < 0.05 || std::abs(m) > 50.0) continue;
        // Exact-evaluation Newton polish in m: pushes the residual from the
        // ~1e-13 of the double solve down to roundoff of the point itself,
        // which route cross-checks (e.g. m <-> 1/m) rely on.
        BivLaurent<Rat> F = F_laurent(knot);
        BivLaurent<Rat> Fm = F.dm();
        for (int it = 0; it < 4; ++it) {
            CD dv = eval_exact(Fm, m, z);
            if (std::abs(dv) == 0.0) break;
            m -= eval_exact(F, m, z) / dv;
        }
        if (!on_variety(knot, m, z)) continue;
        // Reject near-ideal points: when the longitude eigenvalue is extreme
        // the torsion's condition number outruns double precision and point
        // evaluations stop being meaningful.
        try {
            CD lf = longitude_fraction(knot, m, z);
            if (std::abs(lf) < 1e-2 || std::abs(lf) > 1e2) continue;
        } catch (const std::domain_error &) {
            continue;
        }
        CD u = u_from_z(knot, z);
        if (std::abs(u) < 1e-6) continue;
        return {m, z, u};
    }
    throw std::runtime_error("sample_on_variety: no admissible point found");
}

}  // namespace tkt
