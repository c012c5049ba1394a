#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ckm/classify.hpp"

namespace ckm {

struct ProblemOptions {
  int depth = 6;
  int max_power = 8;
  bool verify = false;
  std::size_t oracle_rank = 0;

  friend bool operator==(const ProblemOptions&, const ProblemOptions&) = default;
};

/// Parsed problem document.  Holds the textual payload exactly as declared;
/// semantic validation (ring, ideal, functional) happens in build_spec.
struct ProblemFile {
  std::vector<std::string> variables;
  std::vector<std::string> ideal;
  std::vector<std::vector<long>> gcm;
  /// coroot label "h<i>" -> monomial string -> rational string
  std::map<std::string, std::map<std::string, std::string>> psi;
  std::optional<std::vector<std::string>> hpp;
  ProblemOptions options;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Strict schema: unknown keys, wrong types, or malformed shapes are
/// SchemaError.  Values are kept as strings; nothing mathematical runs here.
ProblemFile parse_problem(const std::string& json_text);

/// Reads and parses; IoError when the file cannot be read.
ProblemFile load_problem(const std::string& path);

/// Semantic validation: builds the ring, Cartan data, ideal, and functional.
/// psi keys must be exactly the standard monomials of the quotient.
PsiSpec build_spec(const ProblemFile& pf);

}  // namespace ckm
