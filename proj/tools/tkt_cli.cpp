// Command-line front end: vanishing-identity runs, torsion tables,
// certification suites, and exact variety printouts.
//
// Exit codes: 0 = all expectations met, 1 = mathematical expectation
// violated, 2 = genericity/convergence exhaustion, 3 = invalid input.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tkt/chebyshev.hpp"
#include "tkt/report.hpp"
#include "tkt/residue.hpp"
#include "tkt/torsion.hpp"
#include "tkt/variety.hpp"

namespace {

using namespace tkt;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitExhausted = 2;
constexpr int kExitInvalid = 3;

struct Options {
    int n = 0;  // 0 = unset (certify runs every |n| <= 4)
    std::string slope = "1/0";
    std::string c_str, C_str;
    int trials = 1;
    std::uint64_t seed = 0;
    std::string mode = "float";
    double tol = -1.0;  // <0: library defaults
    int resample_budget = 8;
    std::string format = "json";
    std::vector<std::string> suites;
    int kmax = 50;
};

// "a", "bi", "a+bi", "a-bi"; each part a decimal or "p/q" rational string.
GaussRat parse_gauss(const std::string &s) {
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i') return GaussRat(rat_from_decimal(s));
    std::string body = s.substr(0, s.size() - 1);
    size_t split = std::string::npos;
    for (size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos)
        return GaussRat(Rat(0), body.empty() || body == "+"   ? Rat(1)
                                : body == "-"                 ? Rat(-1)
                                                              : rat_from_decimal(body));
    std::string re = body.substr(0, split);
    std::string im = body.substr(split);
    Rat imv = im == "+" ? Rat(1) : im == "-" ? Rat(-1) : rat_from_decimal(im);
    return GaussRat(rat_from_decimal(re), imv);
}

// The root c of c^2 - Cc + 1 = 0 with |c| >= 1 (canonical choice), snapped to
// the exact dyadic Gaussian rational nearest double precision provides.
GaussRat c_from_C(const GaussRat &C) {
    CD Cv = to_cd(C);
    CD disc = std::sqrt(Cv * Cv - 4.0);
    CD c1 = (Cv + disc) / 2.0, c2 = (Cv - disc) / 2.0;
    CD c = std::abs(c1) >= std::abs(c2) ? c1 : c2;
    return gauss_from_cd(c);
}

Json config_json(const char *cmd, const Options &o) {
    Json cfg{{"cmd", cmd},
             {"n", o.n},
             {"slope", o.slope},
             {"trials", o.trials},
             {"seed", o.seed},
             {"mode", o.mode},
             {"resample_budget", o.resample_budget},
             {"format", o.format}};
    cfg["c"] = o.c_str.empty() ? Json() : Json(o.c_str);
    cfg["C"] = o.C_str.empty() ? Json() : Json(o.C_str);
    cfg["tol"] = o.tol < 0 ? Json() : Json(o.tol);
    return cfg;
}

void apply_tol(VanishingReport &rep, double tol) {
    if (tol < 0) return;
    rep.verdict = rep.relative_magnitude < tol ? VanishingReport::Verdict::vanishes
                                               : VanishingReport::Verdict::nonvanishing;
}

int cmd_vanish(const Options &o) {
    TwistKnot knot(o.n);
    Slope slope = Slope::parse(o.slope);
    std::mt19937_64 rng(o.seed);
    bool fixed_c = !o.c_str.empty() || !o.C_str.empty();
    GaussRat c;
    if (!o.c_str.empty()) c = parse_gauss(o.c_str);
    if (!o.C_str.empty()) c = c_from_C(parse_gauss(o.C_str));

    std::vector<VanishingReport> reps;
    for (int t = 0; t < o.trials; ++t) {
        VanishingReport rep;
        if (fixed_c) {
            try {
                rep = vanishing_sum(knot, slope, c);
            } catch (const GenericityError &e) {
                std::cerr << "genericity failure at fixed c: " << e.what() << "\n";
                return kExitExhausted;
            }
        } else {
            rep = run_vanishing(knot, slope, rng, o.resample_budget);
        }
        apply_tol(rep, o.tol);
        reps.push_back(std::move(rep));
    }
    emit(std::cout, parse_format(o.format), config_json("vanish", o), reps);

    auto expected = o.n == 1 ? VanishingReport::Verdict::nonvanishing
                             : VanishingReport::Verdict::vanishes;
    bool exhausted = false, violated = false;
    for (const auto &rep : reps) {
        if (rep.verdict == VanishingReport::Verdict::inconclusive)
            exhausted = true;
        else if (rep.verdict != expected)
            violated = true;
    }
    if (violated) return kExitViolation;
    if (exhausted) return kExitExhausted;
    return kExitOk;
}

std::string fmt_cd(CD v) {
    std::ostringstream os;
    os << std::setprecision(12) << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
    return os.str();
}

int cmd_torsion(const Options &o) {
    TwistKnot knot(o.n);
    Slope slope = Slope::parse(o.slope);
    std::mt19937_64 rng(o.seed);
    GaussRat c;
    if (!o.c_str.empty())
        c = parse_gauss(o.c_str);
    else if (!o.C_str.empty())
        c = c_from_C(parse_gauss(o.C_str));
    else
        c = sample_generic_c(rng);

    std::vector<FiberPoint> fiber;
    for (int attempt = 0;; ++attempt) {
        try {
            fiber = fiber_solve(knot, slope, c);
            break;
        } catch (const GenericityError &e) {
            if (!o.c_str.empty() || !o.C_str.empty() || attempt >= o.resample_budget) {
                std::cerr << "genericity failure: " << e.what() << "\n";
                return kExitExhausted;
            }
            c = sample_generic_c(rng);
        }
    }

    std::cout << "n=" << o.n << " slope=" << slope.str() << " c=" << gauss_to_string(c) << "\n";
    std::cout << std::left << std::setw(30) << "m" << std::setw(30) << "z" << std::setw(30)
              << "E" << std::setw(26) << "T(jacobian)" << std::setw(26) << "T(curve-change)"
              << std::setw(26) << "T(three-var)" << "T(closed)\n";
    bool has_closed = (slope.p == 1 && slope.q == 0) || (slope.p == 0 && slope.q == 1);
    for (const auto &pt : fiber) {
        CD m = pt.point.m, z = pt.point.z;
        CD l = longitude_eigen(knot, m, z);
        CD t_coc = change_of_curve(knot, slope, m, z);
        CD t_3v = torsion_three_variable(knot, slope, m, z, l);
        std::ostringstream closed;
        if (slope.q == 0)
            closed << fmt_cd(torsion_mu(knot, m, z));
        else if (slope.p == 0)
            closed << fmt_cd(torsion_lambda(knot, z));
        else
            closed << "-";
        std::cout << std::left << std::setw(30) << fmt_cd(m) << std::setw(30) << fmt_cd(z)
                  << std::setw(30) << fmt_cd(pt.E_value) << std::setw(26)
                  << fmt_cd(pt.torsion) << std::setw(26) << fmt_cd(t_coc) << std::setw(26)
                  << fmt_cd(t_3v) << closed.str() << "\n";
    }
    (void)has_closed;
    return kExitOk;
}

struct SuiteResult {
    std::string name;
    bool ok;
    std::string detail;
};

Poly<CD> random_poly(std::mt19937_64 &rng, int deg) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<CD> cs(static_cast<size_t>(deg) + 1);
    for (auto &x : cs) x = CD(u(rng), u(rng));
    if (std::abs(cs[0]) < 0.1) cs[0] += CD(0.5, 0.0);
    if (std::abs(cs.back()) < 0.1) cs.back() += CD(0.5, 0.0);
    return Poly<CD>(std::move(cs));
}

int cmd_certify(const Options &o) {
    std::vector<std::string> suites = o.suites;
    if (suites.empty())
        suites = {"chebyshev", "zeqn", "unit", "alternate", "det", "degrees", "jacobi"};
    std::mt19937_64 rng(o.seed);
    std::vector<SuiteResult> results;
    auto add = [&](std::string name, bool ok, std::string detail) {
        results.push_back({std::move(name), ok, std::move(detail)});
    };

    std::vector<int> ns;
    if (o.n != 0)
        ns = {o.n};
    else
        ns = {-4, -3, -2, -1, 1, 2, 3, 4};

    for (const auto &suite : suites) {
        if (suite == "chebyshev") {
            auto rep = cheb_identity_suite(o.kmax);
            add("chebyshev", rep.ok, rep.ok ? std::to_string(rep.checked) + " identities"
                                            : rep.failure);
        } else if (suite == "zeqn") {
            bool ok = true;
            std::string detail;
            for (int n : ns) {
                auto r1 = zeqn_certify(TwistKnot(n));
                auto r2 = simp_certify(TwistKnot(n));
                if (!r1.ok || !r2.ok) {
                    ok = false;
                    detail = "n=" + std::to_string(n);
                }
            }
            add("zeqn", ok, detail);
        } else if (suite == "unit") {
            bool ok = true;
            std::string detail;
            for (int n : ns)
                for (Slope s : {Slope(1, 0), Slope(1, 1), Slope(1, 2), Slope(3, 2)}) {
                    auto r = unit_identity_certify(TwistKnot(n), s);
                    if (!r.ok) {
                        ok = false;
                        detail = "n=" + std::to_string(n) + " slope=" + s.str();
                    }
                }
            add("unit", ok, detail);
        } else if (suite == "alternate") {
            bool ok = true;
            std::string detail;
            for (int n : ns)
                for (Slope s : {Slope(1, 1), Slope(3, 2)}) {
                    GaussRat c = sample_generic_c(rng);
                    auto r = h_alternate_form_certify(TwistKnot(n), s, c);
                    if (!r.ok) {
                        ok = false;
                        detail = "n=" + std::to_string(n) + " slope=" + s.str() + ": " + r.detail;
                    }
                }
            add("alternate", ok, detail);
        } else if (suite == "det") {
            bool ok = true;
            std::string detail;
            for (int n : ns) {
                if (n == 1) continue;  // non-hyperbolic; covered by vanish expectations
                for (Slope s : {Slope(2, 1), Slope(1, 1)}) {
                    GaussRat c = sample_generic_c(rng);
                    for (int attempt = 0;; ++attempt) {
                        try {
                            auto r = s.even_p()
                                         ? det_certify_even(TwistKnot(n), s, c, 20, rng)
                                         : det_certify_odd(TwistKnot(n), s, c, 20, rng);
                            if (!r.ok) {
                                ok = false;
                                detail = "n=" + std::to_string(n) + " slope=" + s.str() + ": " +
                                         r.detail;
                            }
                            break;
                        } catch (const GenericityError &) {
                            if (attempt >= o.resample_budget) return kExitExhausted;
                            c = sample_generic_c(rng);
                        }
                    }
                }
            }
            add("det", ok, detail);
        } else if (suite == "degrees") {
            bool ok = true;
            std::string detail;
            for (int n : ns) {
                Slope s = o.slope.empty() ? Slope(1, 1) : Slope::parse(o.slope);
                if (s.even_p()) s = Slope(1, 1);
                GaussRat c = sample_generic_c(rng);
                auto r = degree_report(TwistKnot(n), s, c);
                if (n == 1) {
                    // The degree laws are predicted to fail for the trefoil;
                    // the suite passes exactly when the failure is observed.
                    bool failed = !r.inequality_holds ||
                                  (r.closed_form_applicable && !r.closed_form_holds);
                    if (!failed) {
                        ok = false;
                        detail = "n=1 unexpectedly satisfies the degree laws";
                    }
                } else if (!r.inequality_holds ||
                           (r.closed_form_applicable && !r.closed_form_holds)) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + " slope=" + s.str() + ": " + r.detail;
                }
            }
            add("degrees", ok, detail);
        } else if (suite == "jacobi") {
            bool ok = true;
            std::string detail;
            std::uniform_int_distribution<int> degf(3, 9);
            int checked = 0;
            for (int t = 0; t < 200; ++t) {
                int df = degf(rng);
                std::uniform_int_distribution<int> degg(0, df - 2);
                Poly<CD> f = random_poly(rng, df);
                Poly<CD> g = random_poly(rng, degg(rng));
                JacobiInfo info;
                CD s;
                try {
                    s = jacobi_sum(f, g, &info);
                } catch (const std::exception &) {
                    continue;  // clustered draw; skip
                }
                ++checked;
                if (std::abs(s) > 1e-9 * std::max(1.0, info.term_scale)) {
                    ok = false;
                    detail = "residue sum " + std::to_string(std::abs(s));
                }
            }
            add("jacobi", ok, ok ? std::to_string(checked) + " draws" : detail);
        } else {
            std::cerr << "unknown suite: " << suite << "\n";
            return kExitInvalid;
        }
    }

    bool all_ok = true;
    for (const auto &r : results) {
        std::cout << r.name << ": " << (r.ok ? "pass" : "FAIL")
                  << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
        all_ok = all_ok && r.ok;
    }
    return all_ok ? kExitOk : kExitViolation;
}

std::string rat_coeff_str(const Rat &c) { return rat_to_string(c); }

std::string poly_str(const Poly<Rat> &p, const std::string &var = "z") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rat c = p.coeff(static_cast<size_t>(i));
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        Rat a = abs(c);
        first = false;
        bool unit = a == 1 && i > 0;
        if (!unit) os << rat_coeff_str(a);
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::string ratfunc_str(const RatFunc<Rat> &f) {
    if (f.den() == Poly<Rat>::one()) return poly_str(f.num());
    return "(" + poly_str(f.num()) + ") / (" + poly_str(f.den()) + ")";
}

std::string laurent_str(const BivLaurent<Rat> &f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << poly_str(it->second) << ")";
        if (it->first != 0) os << " m^" << it->first;
    }
    return os.str();
}

int cmd_variety(const Options &o) {
    TwistKnot knot(o.n);
    Slope slope = Slope::parse(o.slope);
    FParts fp = f_parts(knot);
    GParts gp = g_parts(knot);
    std::cout << "K_{2n} with n = " << o.n << "\n";
    std::cout << "f1 = " << poly_str(fp.f1) << "\n";
    std::cout << "f2 = " << poly_str(fp.f2) << "\n";
    std::cout << "F  = " << laurent_str(F_laurent(knot)) << "\n";
    std::cout << "Riley: S_" << (knot.n + 1) << "(z) - (u^2 - (u+1)(m^2 + m^-2 - 3)) S_"
              << knot.n << "(z), z = 2 + (2 - m^2 - m^-2) u + u^2\n";
    std::cout << "  S_" << knot.n << " = " << poly_str(cheb(knot.n)) << "\n";
    std::cout << "  S_" << (knot.n + 1) << " = " << poly_str(cheb(knot.n + 1)) << "\n";
    std::cout << "T_lambda = " << ratfunc_str(torsion_lambda_ratfunc(knot)) << "\n";
    std::cout << "g1 = " << ratfunc_str(gp.g1) << "\n";
    std::cout << "g2 = " << poly_str(gp.g2) << "\n";
    std::cout << "E_{" << slope.str() << "} = " << laurent_str(eigen_laurent(knot, slope))
              << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"twist-knot adjoint torsion toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App *sub, bool need_n) {
        auto *n_opt = sub->add_option("--n", o.n, "twist parameter n of K_{2n} (nonzero)");
        if (need_n) n_opt->required();
        sub->add_option("--slope", o.slope, "boundary slope p/q");
        sub->add_option("--c", o.c_str, "trace parameter c (complex, e.g. 1.5 or 0.3+0.2i)");
        sub->add_option("--C", o.C_str, "trace C = c + 1/c; converted to the |c|>=1 root");
        sub->add_option("--trials", o.trials, "number of seeded trials");
        sub->add_option("--seed", o.seed, "RNG seed (fully determines sampling)");
        sub->add_option("--mode", o.mode, "exact|float")
            ->check(CLI::IsMember({"exact", "float"}));
        sub->add_option("--tol", o.tol, "verdict tolerance override")->envname("TKT_TOL");
        sub->add_option("--resample-budget", o.resample_budget, "genericity resample budget")
            ->envname("TKT_RESAMPLE_BUDGET");
        sub->add_option("--format", o.format, "json|csv|table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        sub->add_option("--suite", o.suites, "certification suites to run");
        sub->add_option("--kmax", o.kmax, "Chebyshev identity range");
    };

    auto *vanish = app.add_subcommand("vanish", "verify the vanishing identity");
    add_common(vanish, true);
    auto *torsion = app.add_subcommand("torsion", "tabulate fiber torsions by all routes");
    add_common(torsion, true);
    auto *certify = app.add_subcommand("certify", "run certification suites");
    add_common(certify, false);
    auto *variety = app.add_subcommand("variety", "print the exact variety data");
    add_common(variety, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (vanish->parsed()) return cmd_vanish(o);
        if (torsion->parsed()) return cmd_torsion(o);
        if (certify->parsed()) return cmd_certify(o);
        if (variety->parsed()) return cmd_variety(o);
    } catch (const GenericityError &e) {
        std::cerr << "genericity exhaustion: " << e.what() << "\n";
        return kExitExhausted;
    } catch (const RootFindError &e) {
        std::cerr << "root finding failed: " << e.what() << "\n";
        return kExitExhausted;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitInvalid;
}
