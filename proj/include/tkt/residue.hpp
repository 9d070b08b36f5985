#ifndef TKT_RESIDUE_HPP
#define TKT_RESIDUE_HPP

#include <random>
#include <vector>

#include "tkt/roots.hpp"
#include "tkt/torsion.hpp"
#include "tkt/variety.hpp"

namespace tkt {

// Raised when a sampled trace parameter c turns out non-generic (clustered
// roots, vanishing alpha/beta, degenerate torsion). The caller resamples c.
struct GenericityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// h_k: h_0 = 0, h_1 = 1, h_{k+1} = -f3 h_k - h_{k-1}, all integer k.
// Gives m^{2k} = h_k m^2 - h_{k-1} on the variety. Cached.
class HSeq {
  public:
    explicit HSeq(RatFunc<Rat> f3);
    const RatFunc<Rat> &get(int k);

  private:
    RatFunc<Rat> f3_;
    std::map<int, RatFunc<Rat>> cache_;
    int lo_ = 0, hi_ = 1;
};

enum class Parity { even_p, odd_p };

// The c-free univariate reduction of G = E_gamma - c on the variety.
//   even p: G = alpha m^2 - (beta0 + c)
//   odd p:  G = alpha m - beta0 m^-1 - c
struct Reduction {
    Parity parity;
    RatFunc<Rat> alpha;
    RatFunc<Rat> beta0;
    Poly<Rat> f1;                 // spurious-root support: zeros of d lie here
    std::vector<CD> f1_roots;
};

Reduction reduce_even(const TwistKnot &knot, const Slope &slope);
Reduction reduce_odd(const TwistKnot &knot, const Slope &slope);
Reduction reduce(const TwistKnot &knot, const Slope &slope);

// H with the trace parameter folded in, as an exact fraction over Q(i):
//   H = H_num / H_den = (H1 d) / (H2 d),  gcd(H1, H2) = 1.
struct HParts {
    RatFunc<GaussRat> alpha;
    RatFunc<GaussRat> beta;       // includes c for even p
    Poly<GaussRat> H_num, H_den;
    Poly<GaussRat> d, H1, H2;
    // H1 with every factor shared with f1 removed (exact gcds). Roots of f1
    // are never on the variety (f1, f2 are coprime), so such roots of H1 are
    // poles of alpha/beta, not fiber points; root finding uses H1_fiber.
    Poly<GaussRat> H1_fiber, spurious;
    GaussRat c;
};
HParts assemble_H(const TwistKnot &knot, const Slope &slope, const Reduction &red,
                  const GaussRat &c);

struct VarietyPoint {
    CD m, z, u;
    double residual;  // |F(m,z)|
};

struct FiberPoint {
    VarietyPoint point;
    CD E_value;
    CD torsion;  // via the Jacobian route
};

// Solves the fiber {F = 0, E_gamma = c}: roots of H1, parity-specific m
// recovery (both signs for even p), Newton polish on (F, E_gamma - c).
// Throws GenericityError when c fails a genericity check.
std::vector<FiberPoint> fiber_solve(const TwistKnot &knot, const Slope &slope,
                                    const GaussRat &c);

struct VanishingReport {
    int n = 0;
    Slope slope{1, 0};
    GaussRat c;
    CD c_value, C_value;
    std::vector<FiberPoint> fiber;
    CD sum_bivariate, sum_univariate;
    double rel_bivariate = 0.0, rel_univariate = 0.0;
    double relative_magnitude = 0.0;  // max of the two routes
    int genericity_retries = 0;
    enum class Verdict { vanishes, nonvanishing, inconclusive } verdict = Verdict::inconclusive;
};
const char *verdict_name(VanishingReport::Verdict v);

// Single-shot evaluation at a fixed c (throws GenericityError when c is bad).
VanishingReport vanishing_sum(const TwistKnot &knot, const Slope &slope, const GaussRat &c);

// Generic trace parameter: uniform on 0.4 <= |c| <= 2.5 minus disks of
// radius 0.1 around 0, 1, -1, snapped to a dyadic Gaussian rational.
GaussRat sample_generic_c(std::mt19937_64 &rng);

// Retry driver around vanishing_sum with the seeded sampler.
VanishingReport run_vanishing(const TwistKnot &knot, const Slope &slope,
                              std::mt19937_64 &rng, int resample_budget = 8);

// Lemma-level certifications at solved fiber points.
CertifyReport det_certify_even(const TwistKnot &knot, const Slope &slope, const GaussRat &c,
                               int samples, std::mt19937_64 &rng);
CertifyReport det_certify_odd(const TwistKnot &knot, const Slope &slope, const GaussRat &c,
                              int samples, std::mt19937_64 &rng);

struct DegreeReport {
    int deg_alpha = kDegZero, deg_beta = kDegZero, deg_H = kDegZero;
    bool inequality_holds = false;   // parity-specific degree inequality
    bool closed_form_holds = false;  // deg alpha/beta closed forms (n>1, odd p>=1)
    bool closed_form_applicable = false;
    std::string detail;
};
DegreeReport degree_report(const TwistKnot &knot, const Slope &slope, const GaussRat &c);

// alpha^2 + beta^2 + f3 alpha beta = 1, exactly (odd p).
CertifyReport unit_identity_certify(const TwistKnot &knot, const Slope &slope);

// The two printed odd-p H numerators agree exactly for exact Gaussian c.
CertifyReport h_alternate_form_certify(const TwistKnot &knot, const Slope &slope,
                                       const GaussRat &c);

// The univariate route recomputed literally as a Jacobi residue sum
// (test oracle): even p uses g = 2c beta2 (H2/beta1), odd p uses
// g = 2 (alpha1^2 beta2^2 - alpha2^2 beta1^2)/d.
CD jacobi_route_sum(const TwistKnot &knot, const Slope &slope, const HParts &hp);

}  // namespace tkt

#endif
