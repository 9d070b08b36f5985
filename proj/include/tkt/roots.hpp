#ifndef TKT_ROOTS_HPP
#define TKT_ROOTS_HPP

#include <stdexcept>
#include <vector>

#include "tkt/poly.hpp"
#include "tkt/ratfunc.hpp"

namespace tkt {

struct RootSet {
    std::vector<CD> roots;
    std::vector<double> residuals;  // |p(root)| after polishing
    double min_separation = 0.0;    // smallest pairwise distance (inf for degree 1)
};

struct RootFindError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All complex roots of p by Aberth-Ehrlich simultaneous iteration on the
// monic normalization, followed by Newton polishing. Throws RootFindError if
// the iteration cap is hit before per-root updates drop below tol (relative).
RootSet find_roots(const Poly<CD> &p, double tol = 1e-13);

// Scale-aware conversion of an exact polynomial for root finding: divides by
// the largest coefficient first so huge exact coefficients cannot overflow.
Poly<CD> to_cd_poly_scaled(const Poly<GaussRat> &p);
Poly<CD> to_cd_poly_scaled(const Poly<Rat> &p);

// Refines the approximate root set by Aberth sweeps with cancellation-free
// exact evaluation of p and p' (see eval_exact); rescues clustered roots of
// high-degree polynomials whose double-precision evaluation is dominated by
// cancellation. Throws RootFindError when a root fails to refine.
void polish_roots_exact(const Poly<GaussRat> &p, std::vector<CD> &roots, int steps = 64);

struct JacobiInfo {
    bool degree_bound_ok = false;  // deg g <= deg f - 2, so the sum must vanish
    double term_scale = 0.0;       // sum of |g(r)/f'(r)|
    double min_separation = 0.0;
};

// Sum of g(r)/f'(r) over the roots r of f (Jacobi residue sum). Requires f
// non-constant with f(0) != 0 and well-separated roots.
CD jacobi_sum(const Poly<CD> &f, const Poly<CD> &g, JacobiInfo *info = nullptr);

// Smallest pairwise-distance tolerance below which a root set is treated as
// containing a multiple root.
inline constexpr double kRootSeparationTol = 1e-7;

}  // namespace tkt

#endif
