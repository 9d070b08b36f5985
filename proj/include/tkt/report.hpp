#ifndef TKT_REPORT_HPP
#define TKT_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "tkt/residue.hpp"

namespace tkt {

// Ordered JSON keeps key order stable so identical configs (including the
// seed) serialize to byte-identical output.
using Json = nlohmann::ordered_json;

enum class OutputFormat { json, csv, table };
OutputFormat parse_format(const std::string &s);  // throws std::invalid_argument

Json complex_json(CD v);
Json gauss_json(const GaussRat &v);

Json report_json(const VanishingReport &rep);

// Top-level {config, results, summary} document.
Json document_json(const Json &config, const std::vector<VanishingReport> &reports);

std::string reports_csv(const std::vector<VanishingReport> &reports);
std::string reports_table(const std::vector<VanishingReport> &reports);

void emit(std::ostream &os, OutputFormat fmt, const Json &config,
          const std::vector<VanishingReport> &reports);

}  // namespace tkt

#endif
