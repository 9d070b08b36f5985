#include "tkt/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace tkt {

namespace {

CD horner(const std::vector<CD> &c, CD x) {
    CD acc = 0.0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

// Scale of a Horner evaluation: sum |c_i| |x|^i. |p(x)| below machine
// epsilon times this is numerically indistinguishable from a root.
double horner_scale(const std::vector<CD> &c, CD x) {
    double ax = std::abs(x);
    double acc = 0.0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * ax + std::abs(c[i]);
    return acc;
}

double pairwise_min_separation(const std::vector<CD> &r) {
    if (r.size() < 2) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = i + 1; j < r.size(); ++j)
            best = std::min(best, std::abs(r[i] - r[j]));
    return best;
}

}  // namespace

RootSet find_roots(const Poly<CD> &p, double tol) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("find_roots: polynomial must have degree >= 1");
    const int n = p.degree();

    // Monic normalization.
    std::vector<CD> c(p.coeffs());
    CD lead = c.back();
    for (auto &x : c) x /= lead;
    std::vector<CD> dc(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) dc[static_cast<size_t>(i - 1)] = c[static_cast<size_t>(i)] * CD(i);

    // Initial guesses on a circle with radius estimated from the coefficients.
    double maxc = 0.0;
    for (int i = 0; i < n; ++i) maxc = std::max(maxc, std::abs(c[static_cast<size_t>(i)]));
    double cauchy = 1.0 + maxc;
    double r0 = std::abs(c[0]) > 0 ? std::pow(std::abs(c[0]), 1.0 / n) : 0.5;
    r0 = std::clamp(r0, 0.2, cauchy);
    std::vector<CD> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double th = 2.0 * std::numbers::pi * i / n + 0.4;
        z[static_cast<size_t>(i)] = r0 * CD(std::cos(th), std::sin(th));
    }

    const int kMaxIter = 500;
    const double eps = std::numeric_limits<double>::epsilon();
    std::vector<bool> frozen(static_cast<size_t>(n), false);
    bool converged = false;
    for (int it = 0; it < kMaxIter && !converged; ++it) {
        double worst = 0.0;
        int active = 0;
        for (int i = 0; i < n; ++i) {
            if (frozen[static_cast<size_t>(i)]) continue;
            CD zi = z[static_cast<size_t>(i)];
            CD pv = horner(c, zi);
            // Backward-error stop: |p| below roundoff of the evaluation itself.
            if (std::abs(pv) <= 8.0 * eps * horner_scale(c, zi)) {
                frozen[static_cast<size_t>(i)] = true;
                continue;
            }
            ++active;
            CD dv = horner(dc, zi);
            if (std::abs(dv) == 0.0) {
                // stationary start point; nudge off it
                z[static_cast<size_t>(i)] += CD(1e-6, 1e-6);
                worst = 1.0;
                continue;
            }
            CD newton = pv / dv;
            CD s = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                s += CD(1.0) / (zi - z[static_cast<size_t>(j)]);
            }
            CD denom = CD(1.0) - newton * s;
            CD step = (std::abs(denom) > 0) ? newton / denom : newton;
            z[static_cast<size_t>(i)] = zi - step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(zi)));
        }
        converged = active == 0 || worst < tol;
    }
    if (!converged) throw RootFindError("find_roots: Aberth iteration did not converge");

    // Newton polish.
    for (auto &zi : z) {
        for (int it = 0; it < 4; ++it) {
            CD dv = horner(dc, zi);
            if (std::abs(dv) == 0.0) break;
            zi -= horner(c, zi) / dv;
        }
    }

    RootSet rs;
    rs.roots = z;
    rs.residuals.reserve(z.size());
    for (const auto &zi : z) rs.residuals.push_back(std::abs(horner(c, zi)));
    rs.min_separation = pairwise_min_separation(z);
    std::sort(rs.roots.begin(), rs.roots.end(), [](CD a, CD b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return rs;
}

namespace {

template <class K>
Poly<CD> scaled_impl(const Poly<K> &p) {
    if (p.is_zero()) return Poly<CD>();
    // Pick the largest coefficient by an exact size proxy and divide it out
    // exactly before any double conversion.
    Rat best(0);
    size_t best_i = 0;
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        Rat m;
        if constexpr (std::is_same_v<K, Rat>) {
            m = abs(p.coeffs()[i]);
        } else {
            m = abs(p.coeffs()[i].re) + abs(p.coeffs()[i].im);
        }
        if (m > best) {
            best = m;
            best_i = i;
        }
    }
    (void)best_i;
    K scale;
    if constexpr (std::is_same_v<K, Rat>) {
        scale = Rat(1) / best;
    } else {
        scale = K(Rat(1) / best, Rat(0));
    }
    std::vector<CD> c;
    c.reserve(p.coeffs().size());
    for (const auto &x : p.coeffs()) c.push_back(to_cd(x * scale));
    return Poly<CD>(std::move(c));
}

}  // namespace

Poly<CD> to_cd_poly_scaled(const Poly<GaussRat> &p) { return scaled_impl(p); }
Poly<CD> to_cd_poly_scaled(const Poly<Rat> &p) { return scaled_impl(p); }

void polish_roots_exact(const Poly<GaussRat> &p, std::vector<CD> &roots, int steps) {
    // Aberth sweeps with exact evaluation of p and p'. The double-precision
    // pass can leave clustered ill-conditioned roots far from their true
    // positions (its evaluation noise floor exceeds |p| there); the exact
    // evaluation restores forward accuracy, and the Aberth deflation term
    // keeps the sweep stable inside clusters.
    Poly<GaussRat> dp = p.derivative();
    const size_t n = roots.size();
    std::vector<bool> frozen(n, false);
    for (int sweep = 0; sweep < steps; ++sweep) {
        bool any_active = false;
        for (size_t i = 0; i < n; ++i) {
            if (frozen[i]) continue;
            CD zi = roots[i];
            CD dv = eval_exact(dp, zi);
            if (std::abs(dv) == 0.0) {
                roots[i] += CD(1e-12, 1e-12);
                any_active = true;
                continue;
            }
            CD newton = eval_exact(p, zi) / dv;
            if (std::abs(newton) < 1e-15 * (1.0 + std::abs(zi))) {
                frozen[i] = true;
                continue;
            }
            any_active = true;
            CD s = 0.0;
            for (size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                s += CD(1.0) / (zi - roots[j]);
            }
            CD denom = CD(1.0) - newton * s;
            roots[i] = zi - (std::abs(denom) > 0 ? newton / denom : newton);
        }
        if (!any_active) return;
    }
    // Require every root to sit within Newton distance ~1e-12 of a true root.
    for (size_t i = 0; i < n; ++i) {
        CD dv = eval_exact(dp, roots[i]);
        if (std::abs(dv) == 0.0 ||
            std::abs(eval_exact(p, roots[i]) / dv) > 1e-12 * (1.0 + std::abs(roots[i])))
            throw RootFindError("polish_roots_exact: root failed to refine");
    }
}

CD jacobi_sum(const Poly<CD> &f, const Poly<CD> &g, JacobiInfo *info) {
    if (f.degree() < 1) throw std::domain_error("jacobi_sum: f must be non-constant");
    double scale = f.max_coeff_mag();
    if (std::abs(f.coeff(0)) <= 1e-14 * scale)
        throw std::domain_error("jacobi_sum: f(0) = 0");
    RootSet rs = find_roots(f);
    if (rs.min_separation < kRootSeparationTol)
        throw std::domain_error("jacobi_sum: multiple (or clustered) zero detected");
    Poly<CD> df = f.derivative();
    CD sum = 0.0;
    double term_scale = 0.0;
    for (const auto &r : rs.roots) {
        CD t = g.eval(r) / df.eval(r);
        sum += t;
        term_scale += std::abs(t);
    }
    if (info) {
        info->degree_bound_ok = g.is_zero() || g.degree() <= f.degree() - 2;
        info->term_scale = term_scale;
        info->min_separation = rs.min_separation;
    }
    return sum;
}

}  // namespace tkt
