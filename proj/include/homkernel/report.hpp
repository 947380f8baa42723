#ifndef HOMKERNEL_REPORT_HPP
#define HOMKERNEL_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "homkernel/homology.hpp"

namespace homkernel {

struct StatementReport {
  std::size_t line = 0, column = 0;
  std::string source;
  std::string type;
  std::optional<bool> pass;  ///< set for assert, check and search
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::string> text;
  std::optional<std::string> error;

  bool operator==(const StatementReport&) const = default;
};

struct ReportDocument {
  std::string command;
  std::vector<StatementReport> statements;
  std::optional<double> seconds;

  bool failed() const;
  bool errored() const;
  /// 0 when every assert and check passed, 1 on failures, 3 on runtime errors.
  int exit_code() const;
  bool operator==(const ReportDocument&) const = default;
};

enum class Format { Text, Json };

std::string emit(const ReportDocument& doc, Format format);
nlohmann::json to_json(const ReportDocument& doc);
ReportDocument from_json(const nlohmann::json& j);

nlohmann::json module_summary(const PresentedModule& m);
std::string module_summary_text(const PresentedModule& m);
nlohmann::json length_json(const Length& l);
nlohmann::json betti_json(const Resolution& r);

}  // namespace homkernel

#endif
