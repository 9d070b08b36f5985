#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tkt/chebyshev.hpp"
#include "tkt/ratfunc.hpp"

using namespace tkt;

TEST_CASE("recurrence values and antisymmetry") {
    CHECK(cheb(0).is_zero());
    CHECK(cheb(1) == Poly<Rat>::one());
    Poly<Rat> z = Poly<Rat>::variable();
    for (int k = -12; k <= 12; ++k) {
        CHECK(cheb(k + 1) == z * cheb(k) - cheb(k - 1));
        CHECK(cheb(-k) == -cheb(k));
    }
    // S_2 = z, S_3 = z^2 - 1.
    CHECK(cheb(2) == z);
    CHECK(cheb(3) == z * z - Poly<Rat>::one());
}

TEST_CASE("degrees and leading coefficients") {
    for (int k = 2; k <= 20; ++k) {
        CHECK(cheb(k).degree() == k - 1);
        CHECK(cheb(k).leading() == 1);
    }
}

TEST_CASE("scalar evaluation matches the cached polynomials") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int t = 0; t < 40; ++t) {
        CD zv(u(rng), u(rng));
        int k = static_cast<int>(rng() % 41) - 20;
        CD via_poly = eval_cd(cheb(k), zv);
        CHECK(std::abs(cheb_eval(k, zv) - via_poly) < 1e-9 * (1.0 + std::abs(via_poly)));
    }
    // Exact field evaluation too.
    Rat zr(7, 3);
    CHECK(cheb_eval(5, zr) == cheb(5).eval(zr));
    CHECK(cheb_eval(-5, zr) == -cheb(5).eval(zr));
}

TEST_CASE("derivative is the formal polynomial derivative") {
    for (int k = -10; k <= 10; ++k) CHECK(cheb_derivative(k) == cheb(k).derivative());
}

TEST_CASE("identity suite certifies exactly") {
    ChebIdentityReport rep = cheb_identity_suite(25);
    CHECK(rep.ok);
    CHECK(rep.failure.empty());
    CHECK(rep.checked > 0);
}

TEST_CASE("unit identity at sampled exact points") {
    // S_k^2 - z S_k S_{k-1} + S_{k-1}^2 = 1 drives the coprimality of f1, f2.
    for (int k = -8; k <= 8; ++k) {
        Rat z(9, 7);
        Rat sk = cheb_eval(k, z), skm = cheb_eval(k - 1, z);
        CHECK(sk * sk - z * sk * skm + skm * skm == 1);
    }
}
