#include "ckm/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ckm/errors.hpp"

namespace ckm {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& message) {
  fail(ErrorCode::SchemaError, message);
}

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.contains(key))
      schema_fail("unexpected key \"" + key + "\" in " + where);
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) schema_fail(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) schema_fail(where + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

ProblemFile parse_problem(const std::string& json_text) {
  json j = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) schema_fail("problem file is not valid JSON");
  if (!j.is_object()) schema_fail("problem file must be a JSON object");
  require_keys(j, {"variables", "ideal", "gcm", "psi", "hpp", "options"},
               "problem file");
  for (const char* key : {"variables", "ideal", "gcm", "psi"})
    if (!j.contains(key))
      schema_fail(std::string("missing required key \"") + key + "\"");

  ProblemFile pf;
  pf.variables = string_list(j["variables"], "variables");
  if (pf.variables.empty()) schema_fail("variables must be non-empty");
  std::set<std::string> seen(pf.variables.begin(), pf.variables.end());
  if (seen.size() != pf.variables.size())
    schema_fail("variables must be distinct");

  pf.ideal = string_list(j["ideal"], "ideal");

  const json& gcm = j["gcm"];
  if (!gcm.is_array() || gcm.empty()) schema_fail("gcm must be a non-empty matrix");
  for (const auto& row : gcm) {
    if (!row.is_array() || row.size() != gcm.size())
      schema_fail("gcm must be square");
    std::vector<long> r;
    for (const auto& entry : row) {
      if (!entry.is_number_integer()) schema_fail("gcm entries must be integers");
      r.push_back(entry.get<long>());
    }
    pf.gcm.push_back(std::move(r));
  }

  const json& psi = j["psi"];
  if (!psi.is_object()) schema_fail("psi must be an object keyed by coroot labels");
  std::set<std::string> expected;
  for (std::size_t i = 0; i < pf.gcm.size(); ++i)
    expected.insert("h" + std::to_string(i + 1));
  for (const auto& [label, row] : psi.items()) {
    if (!expected.contains(label))
      schema_fail("psi key \"" + label + "\" is not a coroot label of this gcm");
    if (!row.is_object())
      schema_fail("psi[\"" + label + "\"] must map monomial strings to rational strings");
    std::map<std::string, std::string> entries;
    for (const auto& [mono, value] : row.items()) {
      if (!value.is_string())
        schema_fail("psi[\"" + label + "\"][\"" + mono + "\"] must be a string");
      entries[mono] = value.get<std::string>();
    }
    pf.psi[label] = std::move(entries);
  }
  for (const auto& label : expected)
    if (!pf.psi.contains(label))
      schema_fail("psi is missing coroot label \"" + label + "\"");

  if (j.contains("hpp")) pf.hpp = string_list(j["hpp"], "hpp");

  if (j.contains("options")) {
    const json& opt = j["options"];
    if (!opt.is_object()) schema_fail("options must be an object");
    require_keys(opt, {"depth", "max_power", "verify", "oracle_rank"}, "options");
    if (opt.contains("depth")) {
      if (!opt["depth"].is_number_integer() || opt["depth"].get<long>() < 0)
        schema_fail("options.depth must be a non-negative integer");
      pf.options.depth = opt["depth"].get<int>();
    }
    if (opt.contains("max_power")) {
      if (!opt["max_power"].is_number_integer() || opt["max_power"].get<long>() < 1)
        schema_fail("options.max_power must be a positive integer");
      pf.options.max_power = opt["max_power"].get<int>();
    }
    if (opt.contains("verify")) {
      if (!opt["verify"].is_boolean()) schema_fail("options.verify must be a boolean");
      pf.options.verify = opt["verify"].get<bool>();
    }
    if (opt.contains("oracle_rank")) {
      if (!opt["oracle_rank"].is_number_integer() ||
          opt["oracle_rank"].get<long>() < 0)
        schema_fail("options.oracle_rank must be a non-negative integer");
      pf.options.oracle_rank = opt["oracle_rank"].get<std::size_t>();
    }
  }
  return pf;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot read problem file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

PsiSpec build_spec(const ProblemFile& pf) {
  Ring ring(pf.variables);
  CartanData cartan = CartanData::validate(pf.gcm);

  std::vector<Polynomial> gens;
  for (const auto& s : pf.ideal) gens.push_back(Polynomial::parse(s, ring));
  Ideal ideal(ring, gens);

  PsiSpec::EntryMap entries;
  for (std::size_t i = 0; i < cartan.rank(); ++i) {
    const auto& row = pf.psi.at("h" + std::to_string(i + 1));
    for (const auto& [mono_text, value_text] : row) {
      Polynomial p = Polynomial::parse(mono_text, ring);
      if (p.terms().size() != 1 || !(p.terms().begin()->second == Rational(1)))
        schema_fail("psi key \"" + mono_text + "\" is not a monomial");
      entries[{i, p.terms().begin()->first}] =
          Rational::from_string(value_text);
    }
  }

  std::optional<std::vector<Rational>> hpp;
  if (pf.hpp) {
    hpp.emplace();
    for (const auto& s : *pf.hpp) hpp->push_back(Rational::from_string(s));
  }
  return PsiSpec(std::move(cartan), std::move(ideal), entries, std::move(hpp));
}

}  // namespace ckm
