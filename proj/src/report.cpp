#include "tkt/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace tkt {

OutputFormat parse_format(const std::string &s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "table") return OutputFormat::table;
    throw std::invalid_argument("unknown output format: " + s);
}

Json complex_json(CD v) {
    return Json{{"re", v.real()}, {"im", v.imag()}};
}

Json gauss_json(const GaussRat &v) {
    return Json{{"re", rat_to_string(v.re)}, {"im", rat_to_string(v.im)}};
}

Json report_json(const VanishingReport &rep) {
    Json fiber = Json::array();
    for (const auto &pt : rep.fiber) {
        fiber.push_back(Json{{"m", complex_json(pt.point.m)},
                             {"z", complex_json(pt.point.z)},
                             {"u", complex_json(pt.point.u)},
                             {"residual", pt.point.residual},
                             {"E", complex_json(pt.E_value)},
                             {"torsion", complex_json(pt.torsion)}});
    }
    return Json{{"n", rep.n},
                {"slope", rep.slope.str()},
                {"c", gauss_json(rep.c)},
                {"c_value", complex_json(rep.c_value)},
                {"C_value", complex_json(rep.C_value)},
                {"fiber", fiber},
                {"sum_bivariate", complex_json(rep.sum_bivariate)},
                {"sum_univariate", complex_json(rep.sum_univariate)},
                {"rel_bivariate", rep.rel_bivariate},
                {"rel_univariate", rep.rel_univariate},
                {"relative_magnitude", rep.relative_magnitude},
                {"genericity_retries", rep.genericity_retries},
                {"verdict", verdict_name(rep.verdict)}};
}

Json document_json(const Json &config, const std::vector<VanishingReport> &reports) {
    Json results = Json::array();
    int vanish = 0, nonvanish = 0, inconclusive = 0;
    for (const auto &rep : reports) {
        results.push_back(report_json(rep));
        switch (rep.verdict) {
            case VanishingReport::Verdict::vanishes: ++vanish; break;
            case VanishingReport::Verdict::nonvanishing: ++nonvanish; break;
            default: ++inconclusive; break;
        }
    }
    Json summary{{"runs", static_cast<int>(reports.size())},
                 {"vanishes", vanish},
                 {"nonvanishing", nonvanish},
                 {"inconclusive", inconclusive}};
    return Json{{"config", config}, {"results", results}, {"summary", summary}};
}

namespace {

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string fmt_complex(CD v) {
    std::ostringstream os;
    os << std::setprecision(17) << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
    return os.str();
}

}  // namespace

std::string reports_csv(const std::vector<VanishingReport> &reports) {
    std::ostringstream os;
    os << "n,slope,c,fiber_size,sum_bivariate,sum_univariate,rel_bivariate,rel_univariate,"
          "relative_magnitude,genericity_retries,verdict\n";
    for (const auto &rep : reports) {
        os << rep.n << "," << rep.slope.str() << "," << gauss_to_string(rep.c) << ","
           << rep.fiber.size() << "," << fmt_complex(rep.sum_bivariate) << ","
           << fmt_complex(rep.sum_univariate) << "," << fmt_double(rep.rel_bivariate) << ","
           << fmt_double(rep.rel_univariate) << "," << fmt_double(rep.relative_magnitude) << ","
           << rep.genericity_retries << "," << verdict_name(rep.verdict) << "\n";
    }
    return os.str();
}

std::string reports_table(const std::vector<VanishingReport> &reports) {
    std::ostringstream os;
    os << std::left << std::setw(5) << "n" << std::setw(8) << "slope" << std::setw(7) << "fiber"
       << std::setw(26) << "|sum| (bivariate)" << std::setw(26) << "|sum| (univariate)"
       << std::setw(14) << "rel.mag" << "verdict\n";
    for (const auto &rep : reports) {
        std::ostringstream rb, ru, rm;
        rb << std::setprecision(6) << std::abs(rep.sum_bivariate);
        ru << std::setprecision(6) << std::abs(rep.sum_univariate);
        rm << std::setprecision(6) << rep.relative_magnitude;
        os << std::left << std::setw(5) << rep.n << std::setw(8) << rep.slope.str()
           << std::setw(7) << rep.fiber.size() << std::setw(26) << rb.str() << std::setw(26)
           << ru.str() << std::setw(14) << rm.str() << verdict_name(rep.verdict) << "\n";
    }
    return os.str();
}

void emit(std::ostream &os, OutputFormat fmt, const Json &config,
          const std::vector<VanishingReport> &reports) {
    switch (fmt) {
        case OutputFormat::json: os << document_json(config, reports).dump(2) << "\n"; break;
        case OutputFormat::csv: os << reports_csv(reports); break;
        case OutputFormat::table: os << reports_table(reports); break;
    }
}

}  // namespace tkt
