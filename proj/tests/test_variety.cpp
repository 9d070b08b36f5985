#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tkt/variety.hpp"

using namespace tkt;

TEST_CASE("slope normalization") {
    Slope s(1, -2);
    CHECK((s.p == -1 && s.q == 2));  // q normalized non-negative
    CHECK(Slope::parse("1/0").q == 0);
    CHECK(Slope::parse("-5/3").str() == "-5/3");
    CHECK_THROWS_AS(Slope::parse("2/0"), std::invalid_argument);
    CHECK_THROWS_AS(Slope(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(Slope(0, 0), std::invalid_argument);
}

TEST_CASE("f-parts closed forms for small n") {
    // n = 1: f1 = 1, f2 = 1 - z, so F = m^2 + m^-2 - z + 1.
    FParts f1p = f_parts(TwistKnot(1));
    CHECK(f1p.f1 == Poly<Rat>::one());
    CHECK(f1p.f2 == Poly<Rat>({Rat(1), Rat(-1)}));
    // n = -1: f1 = 1 - z, f2 = z^2 - z + 1.
    FParts fm1 = f_parts(TwistKnot(-1));
    CHECK(fm1.f1 == Poly<Rat>({Rat(1), Rat(-1)}));
    CHECK(fm1.f2 == Poly<Rat>({Rat(1), Rat(-1), Rat(1)}));
    // Degree law from the paper's proof: deg f2 = 2n - 1 for n >= 1.
    CHECK(f_parts(TwistKnot(2)).f2.degree() == 3);
    CHECK(f_parts(TwistKnot(3)).f2.degree() == 5);
}

TEST_CASE("f1 and f2 are coprime for |n| <= 4") {
    for (int n = -4; n <= 4; ++n) {
        if (n == 0) continue;
        FParts fp = f_parts(TwistKnot(n));
        if (fp.f1.degree() < 1) continue;
        CHECK(poly_gcd(fp.f1, fp.f2).degree() == 0);
    }
}

TEST_CASE("sampled points satisfy every variety equation") {
    std::mt19937_64 rng(101);
    for (int n : {-3, -2, -1, 2, 3, 4}) {
        TwistKnot knot(n);
        for (int t = 0; t < 20; ++t) {
            VarietySample s = sample_on_variety(knot, rng);
            CHECK(on_variety(knot, s.m, s.z));
            CHECK(std::abs(riley_eval(knot, s.m, s.u)) < 1e-8 * (1.0 + std::abs(s.u)));
            CHECK(std::abs(trace_w(s.m, s.u) - s.z) < 1e-9 * (1.0 + std::abs(s.z)));
            CHECK(std::abs(u_from_z(knot, s.z) - s.u) < 1e-8 * (1.0 + std::abs(s.u)));
        }
    }
}

TEST_CASE("word matrices match repeated multiplication") {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (int n : {-3, -2, -1, 1, 2, 3}) {
        TwistKnot knot(n);
        for (int t = 0; t < 25; ++t) {
            CD m(u(rng) + 1.2, u(rng));  // keep |m| away from 0
            CD uu(u(rng), u(rng));
            auto [A, B] = rep_matrices(m, uu);
            Mat2<CD> w = B * A.inv_unimodular() * B.inv_unimodular() * A;
            Mat2<CD> ws = A * B.inv_unimodular() * A.inv_unimodular() * B;
            Mat2<CD> wn = Mat2<CD>::identity(), wsn = Mat2<CD>::identity();
            int k = n >= 0 ? n : -n;
            for (int i = 0; i < k; ++i) {
                wn = wn * w;
                wsn = wsn * ws;
            }
            if (n < 0) {
                wn = wn.inv_unimodular();
                wsn = wsn.inv_unimodular();
            }
            auto [cw, cws] = word_matrices(knot, m, uu);
            double scale = 1.0 + std::abs(wn.a11) + std::abs(wn.a12) + std::abs(wn.a21) +
                           std::abs(wn.a22);
            CHECK(std::abs(cw.a11 - wn.a11) < 1e-10 * scale);
            CHECK(std::abs(cw.a12 - wn.a12) < 1e-10 * scale);
            CHECK(std::abs(cw.a21 - wn.a21) < 1e-10 * scale);
            CHECK(std::abs(cw.a22 - wn.a22) < 1e-10 * scale);
            CHECK(std::abs(cws.a11 - wsn.a11) < 1e-10 * scale);
            CHECK(std::abs(cws.a22 - wsn.a22) < 1e-10 * scale);
        }
    }
}

TEST_CASE("F Laurent expansion equals the scalar form") {
    std::mt19937_64 rng(77);
    for (int n : {-2, -1, 2, 3}) {
        TwistKnot knot(n);
        BivLaurent<Rat> F = F_laurent(knot);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int t = 0; t < 10; ++t) {
            CD m(u(rng) + 1.3, u(rng)), z(u(rng), u(rng));
            CD direct = eval_F(knot, m, z);
            CHECK(std::abs(eval_cd(F, m, z) - direct) < 1e-9 * (1.0 + std::abs(direct)));
        }
    }
}

TEST_CASE("longitude: fraction form, Laurent form, and inverses agree on the variety") {
    std::mt19937_64 rng(303);
    for (int n : {-3, -2, -1, 2, 3}) {
        TwistKnot knot(n);
        BivLaurent<Rat> lp = longitude_laurent(knot, +1);
        BivLaurent<Rat> lm = longitude_laurent(knot, -1);
        for (int t = 0; t < 15; ++t) {
            VarietySample s = sample_on_variety(knot, rng);
            CD l = longitude_eigen(knot, s.m, s.z);
            CD frac = longitude_fraction(knot, s.m, s.z);
            CHECK(std::abs(l - frac) < 1e-8 * (1.0 + std::abs(l)));
            CD lpv = eval_cd(lp, s.m, s.z), lmv = eval_cd(lm, s.m, s.z);
            CHECK(std::abs(lpv * lmv - CD(1)) < 1e-8 * (1.0 + std::abs(lpv * lmv)));
        }
    }
}

TEST_CASE("eigenvalues of the explicit boundary word match E and 1/E") {
    std::mt19937_64 rng(404);
    for (int n : {-2, -1, 2, 3}) {
        TwistKnot knot(n);
        for (Slope slope : {Slope(1, 0), Slope(0, 1), Slope(2, 1), Slope(3, 2)}) {
            for (int t = 0; t < 10; ++t) {
                VarietySample s = sample_on_variety(knot, rng);
                auto [wn, wsn] = word_matrices(knot, s.m, s.u);
                Mat2<CD> mu{s.m, CD(1), CD(0), CD(1) / s.m};
                Mat2<CD> lam = wsn * wn;  // lambda = w_*^n w^n
                Mat2<CD> g = mat_power(mu, slope.p, 1e-6) * mat_power(lam, slope.q, 1e-6);
                CD E = eigen_gamma(knot, slope, s.m, s.z);
                // Characteristic polynomial x^2 - tr x + 1 must kill E.
                CD chi = E * E - g.trace() * E + CD(1);
                double scale = 1.0 + std::norm(E) + std::abs(g.trace()) * std::abs(E);
                CHECK(std::abs(chi) < 1e-9 * scale);
            }
        }
    }
}
