#include "tkt/residue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tkt {

HSeq::HSeq(RatFunc<Rat> f3) : f3_(std::move(f3)) {
    cache_[0] = RatFunc<Rat>(0);
    cache_[1] = RatFunc<Rat>(1);
}

const RatFunc<Rat> &HSeq::get(int k) {
    while (hi_ < k) {
        cache_[hi_ + 1] = -f3_ * cache_[hi_] - cache_[hi_ - 1];
        ++hi_;
    }
    while (lo_ > k) {
        // h_{k-1} = -f3 h_k - h_{k+1}
        cache_[lo_ - 1] = -f3_ * cache_[lo_] - cache_[lo_ + 1];
        --lo_;
    }
    return cache_[k];
}

namespace {

RatFunc<Rat> binom_sum(const GParts &gp, HSeq &hs, int q, int shift) {
    RatFunc<Rat> g2(gp.g2);
    RatFunc<Rat> sum(0);
    Rat bin(1);
    for (int k = 0; k <= q; ++k) {
        if (k > 0) bin = bin * Rat(q - k + 1) / Rat(k);
        sum += RatFunc<Rat>::constant(bin) * gp.g1.pow(k) * g2.pow(q - k) * hs.get(k + shift);
    }
    return sum;
}

Reduction make_reduction(const TwistKnot &knot, const Slope &slope, Parity parity) {
    FParts fp = f_parts(knot);
    GParts gp = g_parts(knot);
    HSeq hs(fp.f3);
    Reduction red;
    red.parity = parity;
    if (parity == Parity::even_p) {
        red.alpha = binom_sum(gp, hs, slope.q, slope.p / 2);
        red.beta0 = binom_sum(gp, hs, slope.q, slope.p / 2 - 1);
    } else {
        red.alpha = binom_sum(gp, hs, slope.q, (slope.p + 1) / 2);
        red.beta0 = binom_sum(gp, hs, slope.q, (slope.p - 1) / 2);
    }
    red.f1 = fp.f1;
    if (red.f1.degree() >= 1) red.f1_roots = find_roots(to_cd_poly_scaled(red.f1)).roots;
    return red;
}

GaussRat cm1c_sq(const GaussRat &c) {  // (c - 1/c)^2
    GaussRat t = c - c.inverse();
    return t * t;
}

CD solve2x2(CD a11, CD a12, CD a21, CD a22, CD b1, CD b2, CD *x2) {
    CD det = a11 * a22 - a12 * a21;
    if (std::abs(det) == 0.0) throw GenericityError("singular Newton system");
    *x2 = (a11 * b2 - a21 * b1) / det;
    return (a22 * b1 - a12 * b2) / det;
}

struct SolveContext {
    Reduction red;
    HParts hp;
    // One entry per root of H1, refined through the bivariate Newton polish
    // (the raw Aberth roots of the high-degree H1 can be too ill-conditioned
    // for the univariate residue sum).
    std::vector<CD> h1_roots;
    std::vector<FiberPoint> fiber;
};

// H'(z) evaluated through the gcd-cancelled pair H1/H2, with exact Horner
// (the H polynomials are large enough that double evaluation cancels badly).
CD eval_H_prime(const HParts &hp, CD z) {
    CD h1 = eval_exact(hp.H1, z), dh1 = eval_exact(hp.H1.derivative(), z);
    CD h2 = eval_exact(hp.H2, z), dh2 = eval_exact(hp.H2.derivative(), z);
    if (std::abs(h2) == 0.0) throw GenericityError("H2 vanishes at an H1 root");
    return (dh1 * h2 - h1 * dh2) / (h2 * h2);
}

SolveContext solve_fiber(const TwistKnot &knot, const Slope &slope, const GaussRat &c) {
    if (c.is_zero() || c == GaussRat(1) || c == GaussRat(-1))
        throw GenericityError("c must avoid {0, 1, -1}");
    SolveContext ctx;
    ctx.red = reduce(knot, slope);
    ctx.hp = assemble_H(knot, slope, ctx.red, c);
    const HParts &hp = ctx.hp;
    if (hp.H1_fiber.degree() < 1) throw GenericityError("H1 degenerate");

    RootSet rs = find_roots(to_cd_poly_scaled(hp.H1_fiber));
    try {
        polish_roots_exact(hp.H1_fiber, rs.roots);
    } catch (const RootFindError &e) {
        throw GenericityError(e.what());
    }
    double minsep = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < rs.roots.size(); ++i)
        for (size_t j = i + 1; j < rs.roots.size(); ++j)
            minsep = std::min(minsep, std::abs(rs.roots[i] - rs.roots[j]));
    if (minsep < kRootSeparationTol) throw GenericityError("clustered roots of H1");

    const CD c_cd = to_cd(c);
    BivLaurent<Rat> F = F_laurent(knot);
    BivLaurent<Rat> E = eigen_laurent(knot, slope);
    BivLaurent<Rat> Fm = F.dm(), Fz = F.dz(), Em = E.dm(), Ez = E.dz();

    auto polish_and_attach = [&](CD m, CD z) -> CD {
        double fscale = F_scale(knot, m);
        for (int it = 0; it < 24; ++it) {
            CD r1 = eval_exact(F, m, z);
            CD r2 = eval_exact(E, m, z) - c_cd;
            if (std::abs(r1) < 1e-14 * fscale && std::abs(r2) < 1e-14 * (1.0 + std::abs(c_cd)))
                break;
            CD dz;
            CD dm = solve2x2(eval_exact(Fm, m, z), eval_exact(Fz, m, z), eval_exact(Em, m, z),
                             eval_exact(Ez, m, z), r1, r2, &dz);
            m -= dm;
            z -= dz;
            fscale = F_scale(knot, m);
        }
        double rF = std::abs(eval_exact(F, m, z));
        double rE = std::abs(eval_exact(E, m, z) - c_cd);
        if (rF > 1e-9 * fscale || rE > 1e-9 * (1.0 + std::abs(c_cd)))
            throw GenericityError("fiber point failed to polish");
        CD fm = eval_exact(Fm, m, z), fz = eval_exact(Fz, m, z);
        CD em = eval_exact(Em, m, z), ez = eval_exact(Ez, m, z);
        CD Ev = eval_exact(E, m, z);
        CD torsion = -m / (2.0 * Ev) * (fm * ez - fz * em);
        double tscale = std::abs(m / (2.0 * Ev)) * (std::abs(fm * ez) + std::abs(fz * em));
        if (std::abs(torsion) < 1e-10 * (tscale + 1e-300))
            throw GenericityError("torsion below regularity threshold");
        FiberPoint pt;
        pt.point = {m, z, u_from_z(knot, z), rF};
        pt.E_value = Ev;
        pt.torsion = torsion;
        ctx.fiber.push_back(pt);
        return z;
    };

    for (CD z0 : rs.roots) {
        // m-recovery entirely over Q(i): the alpha/beta values can be huge
        // with massive cancellation between them.
        GaussRat gz = gauss_from_cd(z0);
        GaussRat av, bv;
        try {
            av = hp.alpha.eval(gz);
            bv = hp.beta.eval(gz);
        } catch (const std::domain_error &) {
            throw GenericityError("alpha/beta pole at an H1 root");
        }
        if (ctx.red.parity == Parity::even_p) {
            if (av.is_zero() || bv.is_zero())
                throw GenericityError("alpha or beta vanishes on the fiber");
            CD t = to_cd(bv / av);
            if (std::abs(t) < 1e-20) throw GenericityError("fiber point with m near 0");
            CD m = std::sqrt(t);
            ctx.h1_roots.push_back(polish_and_attach(m, z0));
            polish_and_attach(-m, z0);
        } else {
            GaussRat den = c * (av * av - bv * bv);
            if (den.is_zero())
                throw GenericityError("alpha^2 - beta^2 vanishes on the fiber");
            CD m = to_cd((c * c * av + bv) / den);
            if (std::abs(m) < 1e-10 || !std::isfinite(std::abs(m)))
                throw GenericityError("fiber point with degenerate m");
            ctx.h1_roots.push_back(polish_and_attach(m, z0));
        }
    }

    std::sort(ctx.fiber.begin(), ctx.fiber.end(), [](const FiberPoint &x, const FiberPoint &y) {
        auto key = [](const FiberPoint &f) {
            return std::make_tuple(f.point.z.real(), f.point.z.imag(), f.point.m.real(),
                                   f.point.m.imag());
        };
        return key(x) < key(y);
    });
    return ctx;
}

}  // namespace

Reduction reduce_even(const TwistKnot &knot, const Slope &slope) {
    if (slope.even_p()) return make_reduction(knot, slope, Parity::even_p);
    throw std::invalid_argument("reduce_even: slope has odd p");
}

Reduction reduce_odd(const TwistKnot &knot, const Slope &slope) {
    if (!slope.even_p()) return make_reduction(knot, slope, Parity::odd_p);
    throw std::invalid_argument("reduce_odd: slope has even p");
}

Reduction reduce(const TwistKnot &knot, const Slope &slope) {
    return slope.even_p() ? reduce_even(knot, slope) : reduce_odd(knot, slope);
}

HParts assemble_H(const TwistKnot &knot, const Slope &slope, const Reduction &red,
                  const GaussRat &c) {
    (void)slope;
    FParts fp = f_parts(knot);
    auto cast = [](const Rat &x) { return to_gauss(x); };
    Poly<GaussRat> f1 = poly_cast<GaussRat>(fp.f1, cast);
    Poly<GaussRat> f2 = poly_cast<GaussRat>(fp.f2, cast);

    HParts hp;
    hp.c = c;
    hp.alpha = to_gauss_ratfunc(red.alpha);
    if (red.parity == Parity::even_p) {
        hp.beta = to_gauss_ratfunc(red.beta0) + RatFunc<GaussRat>::constant(c);
    } else {
        hp.beta = to_gauss_ratfunc(red.beta0);
    }
    if (hp.alpha.is_zero() || (red.parity == Parity::even_p && hp.beta.is_zero()))
        throw GenericityError("alpha or beta identically zero");

    const Poly<GaussRat> &a1 = hp.alpha.num();
    const Poly<GaussRat> &a2 = hp.alpha.den();
    const Poly<GaussRat> &b1 = hp.beta.num();
    const Poly<GaussRat> &b2 = hp.beta.den();
    if (red.parity == Parity::even_p) {
        // H = f1 (alpha/beta + beta/alpha) + f2
        hp.H_num = f1 * (a1 * a1 * b2 * b2 + a2 * a2 * b1 * b1) + f2 * (a1 * a2 * b1 * b2);
        hp.H_den = a1 * a2 * b1 * b2;
    } else {
        // H = (f3 + 2)(alpha + beta)^2 + (c - 1/c)^2
        Poly<GaussRat> cross = a1 * b2 + a2 * b1;
        Poly<GaussRat> den_sq = a2 * a2 * b2 * b2;
        hp.H_num = (f2 + GaussRat(2) * f1) * cross * cross + cm1c_sq(c) * (f1 * den_sq);
        hp.H_den = f1 * den_sq;
    }
    if (hp.H_num.is_zero()) throw GenericityError("H numerator identically zero");
    hp.d = poly_gcd(hp.H_num, hp.H_den);
    hp.H1 = hp.d.degree() > 0 ? divexact(hp.H_num, hp.d) : hp.H_num;
    hp.H2 = hp.d.degree() > 0 ? divexact(hp.H_den, hp.d) : hp.H_den;
    hp.H1_fiber = hp.H1;
    hp.spurious = Poly<GaussRat>::one();
    for (;;) {
        Poly<GaussRat> g = poly_gcd(hp.H1_fiber, f1);
        if (g.degree() < 1) break;
        hp.H1_fiber = divexact(hp.H1_fiber, g);
        hp.spurious = hp.spurious * g;
    }
    return hp;
}

std::vector<FiberPoint> fiber_solve(const TwistKnot &knot, const Slope &slope,
                                    const GaussRat &c) {
    return solve_fiber(knot, slope, c).fiber;
}

const char *verdict_name(VanishingReport::Verdict v) {
    switch (v) {
        case VanishingReport::Verdict::vanishes: return "vanishes";
        case VanishingReport::Verdict::nonvanishing: return "nonvanishing";
        default: return "inconclusive";
    }
}

VanishingReport vanishing_sum(const TwistKnot &knot, const Slope &slope, const GaussRat &c) {
    SolveContext ctx = solve_fiber(knot, slope, c);
    const HParts &hp = ctx.hp;
    VanishingReport rep;
    rep.n = knot.n;
    rep.slope = slope;
    rep.c = c;
    rep.c_value = to_cd(c);
    rep.C_value = rep.c_value + 1.0 / rep.c_value;
    rep.fiber = ctx.fiber;

    CD biv = 0.0;
    double biv_max = 0.0;
    for (const auto &pt : rep.fiber) {
        CD t = 1.0 / pt.torsion;
        biv += t;
        biv_max = std::max(biv_max, std::abs(t));
    }

    FParts fparts = f_parts(knot);
    CD uni = 0.0;
    double uni_max = 0.0;
    const CD c_cd = to_cd(c);
    for (CD z0 : ctx.h1_roots) {
        CD hprime = eval_H_prime(hp, z0);
        CD term;
        if (ctx.red.parity == Parity::even_p) {
            CD b = eval_exact(hp.beta, z0);
            term = 2.0 * c_cd / (b * hprime);
        } else {
            CD a = eval_exact(hp.alpha, z0);
            CD b = eval_exact(hp.beta, z0);
            CD f1v = eval_exact(fparts.f1, z0);
            term = 2.0 * (a * a - b * b) / (f1v * hprime);
        }
        uni += term;
        uni_max = std::max(uni_max, std::abs(term));
    }

    rep.sum_bivariate = biv;
    rep.sum_univariate = uni;
    double scale = std::max({1.0, biv_max, uni_max});
    if (std::abs(biv - uni) > 1e-7 * scale)
        throw std::runtime_error("vanishing_sum: bivariate and univariate routes disagree");
    rep.rel_bivariate = biv_max > 0 ? std::abs(biv) / biv_max : 0.0;
    rep.rel_univariate = uni_max > 0 ? std::abs(uni) / uni_max : 0.0;
    rep.relative_magnitude = std::max(rep.rel_bivariate, rep.rel_univariate);
    if (rep.rel_bivariate < 1e-8 && rep.rel_univariate < 1e-8) {
        rep.verdict = VanishingReport::Verdict::vanishes;
    } else if (rep.rel_bivariate > 1e-4 && rep.rel_univariate > 1e-4) {
        rep.verdict = VanishingReport::Verdict::nonvanishing;
    } else {
        rep.verdict = VanishingReport::Verdict::inconclusive;
    }
    return rep;
}

GaussRat sample_generic_c(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> box(-2.5, 2.5);
    const long denom = 4096;
    for (int i = 0; i < 10000; ++i) {
        double re = box(rng), im = box(rng);
        Rat cre(std::lround(re * denom), denom), cim(std::lround(im * denom), denom);
        cre.canonicalize();
        cim.canonicalize();
        GaussRat c(cre, cim);
        double ar = c.re.get_d(), ai = c.im.get_d();
        double r = std::hypot(ar, ai);
        if (r < 0.4 || r > 2.5) continue;
        if (std::hypot(ar - 1.0, ai) < 0.1 || std::hypot(ar + 1.0, ai) < 0.1) continue;
        return c;
    }
    throw std::runtime_error("sample_generic_c: sampler failed");
}

VanishingReport run_vanishing(const TwistKnot &knot, const Slope &slope, std::mt19937_64 &rng,
                              int resample_budget) {
    VanishingReport last;
    for (int attempt = 0; attempt <= resample_budget; ++attempt) {
        GaussRat c = sample_generic_c(rng);
        try {
            VanishingReport rep = vanishing_sum(knot, slope, c);
            rep.genericity_retries = attempt;
            if (rep.verdict != VanishingReport::Verdict::inconclusive) return rep;
            last = rep;
        } catch (const GenericityError &) {
        } catch (const RootFindError &) {
        }
        last.genericity_retries = attempt + 1;
    }
    last.n = knot.n;
    last.slope = slope;
    last.verdict = VanishingReport::Verdict::inconclusive;
    return last;
}

CertifyReport det_certify_even(const TwistKnot &knot, const Slope &slope, const GaussRat &c,
                               int samples, std::mt19937_64 &rng) {
    CertifyReport rep;
    if (!slope.even_p()) {
        rep.ok = false;
        rep.detail = "slope has odd p";
        return rep;
    }
    SolveContext ctx = solve_fiber(knot, slope, c);
    const HParts &hp = ctx.hp;
    BivLaurent<Rat> F = F_laurent(knot);
    BivLaurent<Rat> E = eigen_laurent(knot, slope);
    BivLaurent<Rat> FmL = F.dm(), FzL = F.dz(), EmL = E.dm(), EzL = E.dz();
    // Lemma: det d(F,G)/d(m,z) = -2 m alpha H' at fiber points.
    for (const auto &pt : ctx.fiber) {
        CD m = pt.point.m, z = pt.point.z;
        CD lhs = eval_exact(FmL, m, z) * eval_exact(EzL, m, z) -
                 eval_exact(FzL, m, z) * eval_exact(EmL, m, z);
        CD hprime = eval_H_prime(hp, z);
        CD rhs = -2.0 * m * eval_exact(hp.alpha, z) * hprime;
        if (std::abs(lhs - rhs) > 1e-8 * (std::abs(lhs) + std::abs(rhs))) {
            rep.ok = false;
            rep.detail = "determinant identity mismatch at a fiber point";
            return rep;
        }
    }
    // det d(F, m^{2k} - h_k m^2 + h_{k-1})/d(m,z) = 0 on the variety.
    FParts fp = f_parts(knot);
    HSeq hs(fp.f3);
    int kmax = slope.q + std::abs(slope.p) / 2 + 1;
    for (int s = 0; s < samples; ++s) {
        VarietySample vs = sample_on_variety(knot, rng);
        CD Fm = eval_exact(FmL, vs.m, vs.z), Fz = eval_exact(FzL, vs.m, vs.z);
        for (int k = -kmax; k <= kmax; ++k) {
            CD hk = eval_exact(hs.get(k), vs.z);
            CD dhk = eval_exact(hs.get(k).derivative(), vs.z);
            CD dhkm = eval_exact(hs.get(k - 1).derivative(), vs.z);
            CD phim = CD(2 * k) * ipow(vs.m, 2 * k - 1) - 2.0 * hk * vs.m;
            CD phiz = -dhk * vs.m * vs.m + dhkm;
            CD det = Fm * phiz - Fz * phim;
            double scale = std::abs(Fm * phiz) + std::abs(Fz * phim) + 1e-30;
            if (std::abs(det) > 1e-9 * scale) {
                rep.ok = false;
                rep.detail = "detzero identity failed at k=" + std::to_string(k);
                return rep;
            }
        }
    }
    return rep;
}

CertifyReport det_certify_odd(const TwistKnot &knot, const Slope &slope, const GaussRat &c,
                              int samples, std::mt19937_64 &rng) {
    (void)samples;
    (void)rng;
    CertifyReport rep;
    if (slope.even_p()) {
        rep.ok = false;
        rep.detail = "slope has even p";
        return rep;
    }
    SolveContext ctx = solve_fiber(knot, slope, c);
    const HParts &hp = ctx.hp;
    FParts fp = f_parts(knot);
    BivLaurent<Rat> F = F_laurent(knot);
    BivLaurent<Rat> FmL = F.dm(), FzL = F.dz();
    RatFunc<GaussRat> dalpha = hp.alpha.derivative(), dbeta = hp.beta.derivative();
    const CD c_cd = to_cd(c);
    for (const auto &pt : ctx.fiber) {
        CD m = pt.point.m, z = pt.point.z;
        CD a = eval_exact(hp.alpha, z), b = eval_exact(hp.beta, z);
        CD da = eval_exact(dalpha, z), db = eval_exact(dbeta, z);
        // G = alpha m - beta m^-1 - c
        CD Gm = a + b / (m * m);
        CD Gz = da * m - db / m;
        CD lhs = eval_exact(FmL, m, z) * Gz - eval_exact(FzL, m, z) * Gm;
        CD hprime = eval_H_prime(hp, z);
        CD rhs = c_cd * eval_exact(fp.f1, z) * hprime / (m * (b * b - a * a));
        if (std::abs(lhs - rhs) > 1e-8 * (std::abs(lhs) + std::abs(rhs))) {
            rep.ok = false;
            rep.detail = "determinant identity mismatch at a fiber point";
            return rep;
        }
        CD D = c_cd * (b * b - a * a) * m + c_cd * c_cd * a + b;
        double dscale = std::abs(c_cd * (b * b - a * a) * m) + std::abs(c_cd * c_cd * a) +
                        std::abs(b) + 1.0;
        if (std::abs(D) > 1e-9 * dscale) {
            rep.ok = false;
            rep.detail = "D does not vanish at a fiber point";
            return rep;
        }
    }
    return rep;
}

DegreeReport degree_report(const TwistKnot &knot, const Slope &slope, const GaussRat &c) {
    Reduction red = reduce(knot, slope);
    HParts hp = assemble_H(knot, slope, red, c);
    DegreeReport rep;
    rep.deg_alpha = hp.alpha.degree();
    rep.deg_beta = hp.beta.degree();
    rep.deg_H = hp.H_num.degree() - hp.H_den.degree();
    if (red.parity == Parity::even_p) {
        rep.inequality_holds = rep.deg_beta != kDegZero && rep.deg_H != kDegZero &&
                               rep.deg_beta + rep.deg_H >= 2;
        rep.detail = "even p: deg beta + deg H >= 2";
    } else {
        RatFunc<GaussRat> diff = hp.alpha * hp.alpha - hp.beta * hp.beta;
        int deg_diff = diff.degree();
        int deg_f1 = red.f1.degree();
        rep.inequality_holds = deg_diff == kDegZero ||
                               (rep.deg_H != kDegZero && deg_diff <= rep.deg_H + deg_f1 - 2);
        rep.detail = "odd p: deg(alpha^2-beta^2) <= deg H + deg f1 - 2";
    }
    if (knot.n > 1 && red.parity == Parity::odd_p && slope.p >= 1) {
        rep.closed_form_applicable = true;
        int n = knot.n, q = slope.q, p = slope.p;
        rep.closed_form_holds = rep.deg_alpha == (2 * n + 1) * q + (p - 1) / 2 &&
                                rep.deg_beta == (2 * n + 1) * q + (p - 3) / 2;
    }
    return rep;
}

CertifyReport unit_identity_certify(const TwistKnot &knot, const Slope &slope) {
    CertifyReport rep;
    if (slope.even_p()) {
        rep.ok = false;
        rep.detail = "slope has even p";
        return rep;
    }
    Reduction red = reduce_odd(knot, slope);
    FParts fp = f_parts(knot);
    RatFunc<Rat> lhs =
        red.alpha * red.alpha + red.beta0 * red.beta0 + fp.f3 * red.alpha * red.beta0;
    if (!(lhs == RatFunc<Rat>(1))) {
        rep.ok = false;
        rep.detail = "alpha^2 + beta^2 + f3 alpha beta != 1 for n=" + std::to_string(knot.n) +
                     " slope " + slope.str();
    }
    return rep;
}

CertifyReport h_alternate_form_certify(const TwistKnot &knot, const Slope &slope,
                                       const GaussRat &c) {
    CertifyReport rep;
    if (slope.even_p()) {
        rep.ok = false;
        rep.detail = "slope has even p";
        return rep;
    }
    Reduction red = reduce_odd(knot, slope);
    FParts fp = f_parts(knot);
    auto cast = [](const Rat &x) { return to_gauss(x); };
    Poly<GaussRat> f1 = poly_cast<GaussRat>(fp.f1, cast);
    Poly<GaussRat> f2 = poly_cast<GaussRat>(fp.f2, cast);
    RatFunc<GaussRat> alpha = to_gauss_ratfunc(red.alpha);
    RatFunc<GaussRat> beta = to_gauss_ratfunc(red.beta0);
    const Poly<GaussRat> &a1 = alpha.num(), &a2 = alpha.den();
    const Poly<GaussRat> &b1 = beta.num(), &b2 = beta.den();
    Poly<GaussRat> plus = a1 * b2 + a2 * b1;
    Poly<GaussRat> minus = a1 * b2 - a2 * b1;
    Poly<GaussRat> den_sq = f1 * (a2 * a2 * b2 * b2);
    GaussRat cp = c + c.inverse();
    Poly<GaussRat> first = (f2 + GaussRat(2) * f1) * plus * plus + cm1c_sq(c) * den_sq;
    Poly<GaussRat> second = (f2 - GaussRat(2) * f1) * minus * minus + (cp * cp) * den_sq;
    if (first != second) {
        rep.ok = false;
        rep.detail = "alternate H forms disagree for n=" + std::to_string(knot.n) + " slope " +
                     slope.str();
    }
    return rep;
}

CD jacobi_route_sum(const TwistKnot &knot, const Slope &slope, const HParts &hp) {
    (void)knot;
    Poly<GaussRat> g;
    if (slope.even_p()) {
        // beta1 divides H2 for generic c; g = 2c beta2 (H2/beta1)
        Poly<GaussRat> quot = divexact(hp.H2, hp.beta.num());
        g = (GaussRat(2) * hp.c) * (hp.beta.den() * quot);
    } else {
        const Poly<GaussRat> &a1 = hp.alpha.num(), &a2 = hp.alpha.den();
        const Poly<GaussRat> &b1 = hp.beta.num(), &b2 = hp.beta.den();
        Poly<GaussRat> num = a1 * a1 * b2 * b2 - a2 * a2 * b1 * b1;
        g = GaussRat(2) * (hp.d.degree() > 0 ? divexact(num, hp.d) : num);
    }
    const Poly<GaussRat> &f = hp.H1;
    if (f.degree() < 1) throw std::domain_error("jacobi_route_sum: H1 must be non-constant");
    if (f.coeff(0).is_zero()) throw std::domain_error("jacobi_route_sum: H1(0) = 0");
    if (!g.is_zero() && g.degree() > f.degree() - 2)
        throw std::domain_error("jacobi_route_sum: degree bound violated");
    RootSet rs = find_roots(to_cd_poly_scaled(f));
    if (rs.min_separation < kRootSeparationTol)
        throw std::domain_error("jacobi_route_sum: clustered roots");
    polish_roots_exact(f, rs.roots);
    Poly<GaussRat> df = f.derivative();
    CD sum = 0.0;
    for (CD r : rs.roots) sum += eval_exact(g, r) / eval_exact(df, r);
    return sum;
}

}  // namespace tkt
