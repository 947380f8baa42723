#ifndef HOMKERNEL_REPRODUCE_HPP
#define HOMKERNEL_REPRODUCE_HPP

#include <string>
#include <vector>

#include "homkernel/report.hpp"

namespace homkernel {

struct ReproduceEntry {
  std::string id;
  std::string anchor;  ///< phrase of the original text the script pins
  std::string script;
};

const std::vector<ReproduceEntry>& reproduce_registry();
/// UnknownExampleId if absent.
const ReproduceEntry& reproduce_entry(const std::string& id);

struct ReproduceResult {
  std::string id;
  ReportDocument prime_field, rationals;
  bool identical = false;  ///< same texts and verdicts over both fields
  bool pass() const;
};

ReproduceResult reproduce(const std::string& id);
/// Runs every id concurrently; results follow registry order.
std::vector<ReproduceResult> reproduce_all();

std::string reproduce_text(const ReproduceResult& r);

}  // namespace homkernel

#endif
