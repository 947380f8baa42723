#ifndef HOMKERNEL_INTERPRETER_HPP
#define HOMKERNEL_INTERPRETER_HPP

#include <optional>
#include <string>

#include "homkernel/report.hpp"
#include "homkernel/script.hpp"

namespace homkernel {

struct RunOptions {
  /// Replaces the coefficient field of every ring declaration.
  std::optional<Field> field;
  /// Default bound for resolve, pd and abformula without an explicit bound.
  std::size_t res_bound = 6;
  bool timing = false;
};

/// Executes statements in order; failures and runtime errors are recorded per
/// statement and never stop the run.
ReportDocument run_script(const Script& script, const RunOptions& options = {});

}  // namespace homkernel

#endif
