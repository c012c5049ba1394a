#pragma once

#include <optional>
#include <string>

#include "ckm/problem.hpp"

namespace ckm {

/// Flag overrides applied on top of the problem file's options.
struct RunOverrides {
  std::optional<int> depth;
  std::optional<int> max_power;
  int json_indent = 2;
};

/// Rendered report plus the process exit code.  The JSON text is
/// deterministic: identical input and overrides give identical bytes.
struct RunResult {
  std::string json;
  int exit_code = 0;
};

/// Classification run.  Exit 0 integrable, 2 not integrable (report still
/// rendered), 3 on analysis errors (the report is then a single error object).
RunResult run_classify(const ProblemFile& pf, const RunOverrides& ov = {});
RunResult run_classify_file(const std::string& path, const RunOverrides& ov = {});

/// Classification plus independent verification in the matrix model.
/// Exit 0 when the verdict is corroborated (character tables agree, or a
/// nilpotency probe certifies non-integrability), 4 on a mismatch, 3 on
/// analysis errors.  Requires options.verify and a type-A gcm of the
/// declared oracle rank.
RunResult run_verify(const ProblemFile& pf, const RunOverrides& ov = {});
RunResult run_verify_file(const std::string& path, const RunOverrides& ov = {});

}  // namespace ckm
