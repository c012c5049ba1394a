#include "ckm/report.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include <json.hpp>

#include "ckm/errors.hpp"
#include "ckm/oracle.hpp"

namespace ckm {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string coroot_label(std::size_t i) { return "h" + std::to_string(i + 1); }

ordered_json rational_list(const std::vector<Rational>& xs) {
  ordered_json out = ordered_json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

/// Canonical echo of the parsed problem: polynomials and rationals are
/// re-rendered, psi rows are keyed by the standard monomials in basis order,
/// and option defaults are materialized.
ordered_json echo_input(const ProblemFile& pf, const PsiSpec& spec) {
  ordered_json in;
  in["variables"] = pf.variables;
  ordered_json ideal = ordered_json::array();
  for (const auto& g : spec.ideal().generators()) ideal.push_back(g.str());
  in["ideal"] = ideal;
  in["gcm"] = pf.gcm;
  ordered_json psi;
  const auto& vars = spec.ring().vars();
  for (std::size_t i = 0; i < spec.cartan().rank(); ++i) {
    ordered_json row;
    for (std::size_t c = 0; c < spec.quotient().dim(); ++c)
      row[spec.quotient().basis()[c].str(vars)] = spec.psi().at(i, c).str();
    psi[coroot_label(i)] = std::move(row);
  }
  in["psi"] = std::move(psi);
  if (spec.hpp_values()) in["hpp"] = rational_list(*spec.hpp_values());
  in["options"] = {{"depth", pf.options.depth},
                   {"max_power", pf.options.max_power},
                   {"verify", pf.options.verify},
                   {"oracle_rank", pf.options.oracle_rank}};
  return in;
}

/// Box entries sorted by height then lexicographically, zeros included:
/// the zero frontier documents where the character truncates.
std::vector<std::vector<int>> sorted_box(const CharacterTable& t) {
  std::vector<std::vector<int>> betas;
  for (const auto& [beta, m] : t.entries()) betas.push_back(beta);
  std::stable_sort(betas.begin(), betas.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     long ha = std::accumulate(a.begin(), a.end(), 0L);
                     long hb = std::accumulate(b.begin(), b.end(), 0L);
                     if (ha != hb) return ha < hb;
                     return a < b;
                   });
  return betas;
}

ordered_json character_entries(const CharacterTable& t) {
  ordered_json out = ordered_json::array();
  for (const auto& beta : sorted_box(t))
    out.push_back(ordered_json::array({beta, t.mult(beta)}));
  return out;
}

ordered_json verdict_json(const Decomposition& d) {
  ordered_json v;
  v["status"] = verdict_name(d.verdict);
  if (d.obstruction) {
    v["reason"] = {{"type", "radical-obstruction"},
                   {"coroot", coroot_label(d.obstruction->coroot)},
                   {"witness", d.obstruction->witness.str()}};
  } else if (d.non_dominant) {
    v["reason"] = {{"type", "non-dominant-weight"},
                   {"point_index", d.non_dominant->point_index},
                   {"coroot", coroot_label(d.non_dominant->coroot)}};
  }
  return v;
}

struct ProbeTarget {
  std::size_t coroot;
  Polynomial coordinate;
};

ordered_json run_probes(const CurrentAlgebraSpec& model, const PsiSpec& spec,
                        const std::vector<ProbeTarget>& targets, int max_power,
                        bool& any_non_nilpotent) {
  ordered_json out = ordered_json::array();
  for (const auto& t : targets) {
    auto probe = nilpotency_probe(model, spec, t.coroot + 1, t.coroot,
                                  t.coordinate, PBWVector::vacuum(), max_power);
    ordered_json entry;
    entry["coroot"] = coroot_label(t.coroot);
    entry["coordinate"] = t.coordinate.str();
    if (probe.vanishing_power)
      entry["vanishing_power"] = *probe.vanishing_power;
    else
      entry["vanishing_power"] = nullptr;
    entry["max_power"] = probe.max_power;
    out.push_back(std::move(entry));
    if (!probe.vanishing_power) any_non_nilpotent = true;
  }
  return out;
}

/// Lowering coordinates worth probing: the constant direction on the failing
/// coroot, plus the concrete certificate (radical witness or the idempotent
/// of the non-dominant point).
std::vector<ProbeTarget> probe_targets(const PsiSpec& spec,
                                       const Decomposition& d) {
  std::vector<ProbeTarget> targets;
  Polynomial one = Polynomial::constant(spec.ring(), Rational(1));
  if (d.obstruction) {
    targets.push_back({d.obstruction->coroot, one});
    targets.push_back({d.obstruction->coroot, d.obstruction->witness});
  } else if (d.non_dominant) {
    targets.push_back({d.non_dominant->coroot, one});
    QuotientAlgebra radical_quotient = quotient_algebra(
        buchberger(Ideal(spec.ring(), d.radical_generators)));
    targets.push_back(
        {d.non_dominant->coroot,
         radical_quotient.from_coords(d.idempotents[d.non_dominant->point_index])});
  }
  return targets;
}

ordered_json classification_body(const ProblemFile& pf, const PsiSpec& spec,
                                 const Decomposition& d, int depth) {
  ordered_json report;
  report["input"] = echo_input(pf, spec);
  report["dimension"] = spec.quotient().dim();
  ordered_json radical = ordered_json::array();
  for (const auto& g : d.radical_generators) radical.push_back(g.str());
  report["radical"] = std::move(radical);
  ordered_json points = ordered_json::array();
  for (const auto& p : d.points) points.push_back(rational_list(p));
  report["points"] = std::move(points);
  ordered_json idempotents = ordered_json::array();
  for (const auto& e : d.idempotents) idempotents.push_back(rational_list(e));
  report["idempotents"] = std::move(idempotents);
  ordered_json weights = ordered_json::array();
  for (const auto& w : d.weights) weights.push_back(rational_list(w.pairings));
  report["weights"] = std::move(weights);
  report["verdict"] = verdict_json(d);
  if (d.verdict == Verdict::Integrable)
    report["character"] = character_entries(predicted_character(d, depth));
  return report;
}

RunResult finish(const ordered_json& report, int exit_code, int indent) {
  return RunResult{report.dump(indent) + "\n", exit_code};
}

RunResult error_result(const Error& e, int indent) {
  ordered_json report;
  report["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
  return finish(report, 3, indent);
}

template <typename Fn>
RunResult guarded(int indent, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return error_result(e, indent);
  }
}

}  // namespace

RunResult run_classify(const ProblemFile& pf, const RunOverrides& ov) {
  return guarded(ov.json_indent, [&] {
    PsiSpec spec = build_spec(pf);
    Decomposition d = classify_module(spec);
    int depth = ov.depth.value_or(pf.options.depth);
    ordered_json report = classification_body(pf, spec, d, depth);
    return finish(report, d.verdict == Verdict::Integrable ? 0 : 2,
                  ov.json_indent);
  });
}

RunResult run_verify(const ProblemFile& pf, const RunOverrides& ov) {
  return guarded(ov.json_indent, [&] {
    require(pf.options.verify, ErrorCode::SchemaError,
            "verification requires options.verify = true");
    PsiSpec spec = build_spec(pf);
    require(pf.options.oracle_rank == spec.cartan().rank(),
            ErrorCode::UnsupportedOracleType,
            "options.oracle_rank does not match the gcm rank");
    CurrentAlgebraSpec model(spec.cartan(), spec.quotient());

    Decomposition d = classify_module(spec);
    int depth = ov.depth.value_or(pf.options.depth);
    int max_power = ov.max_power.value_or(pf.options.max_power);
    ordered_json report = classification_body(pf, spec, d, depth);

    ordered_json oracle;
    int exit_code;
    CharacterTable ranks = irreducible_character(model, spec, depth);
    if (d.verdict == Verdict::Integrable) {
      CharacterTable predicted = predicted_character(d, depth);
      bool match = true;
      ordered_json comparison = ordered_json::array();
      for (const auto& beta : sorted_box(ranks)) {
        long want = predicted.mult(beta);
        long got = ranks.mult(beta);
        if (want != got) match = false;
        comparison.push_back(ordered_json::array({beta, want, got}));
      }
      oracle["comparison"] = std::move(comparison);
      oracle["match"] = match;
      exit_code = match ? 0 : 4;
    } else {
      oracle["character"] = character_entries(ranks);
      bool corroborated = false;
      oracle["probes"] =
          run_probes(model, spec, probe_targets(spec, d), max_power, corroborated);
      oracle["corroborated"] = corroborated;
      exit_code = corroborated ? 0 : 4;
    }
    report["oracle"] = std::move(oracle);
    return finish(report, exit_code, ov.json_indent);
  });
}

RunResult run_classify_file(const std::string& path, const RunOverrides& ov) {
  return guarded(ov.json_indent,
                 [&] { return run_classify(load_problem(path), ov); });
}

RunResult run_verify_file(const std::string& path, const RunOverrides& ov) {
  return guarded(ov.json_indent,
                 [&] { return run_verify(load_problem(path), ov); });
}

}  // namespace ckm
