#include "qsphere/format.hpp"

namespace qsphere {

using nlohmann::json;

json to_json(const LaurentPoly& c) {
  json out = json::array();
  for (const auto& t : c.terms()) {
    json coefficient = t.coefficient.is_small() ? json(t.coefficient.small_value()) : json(t.coefficient.to_string());
    out.push_back(json::array({t.exponent, std::move(coefficient)}));
  }
  return out;
}

json to_json(const Word& w) {
  json out = json::array();
  for (const auto& g : w) out.push_back(g.to_string());
  return out;
}

json to_json(const NCPolynomial& p) {
  json out = json::array();
  for (const auto& [w, c] : p.terms()) out.push_back({{"coeff", to_json(c)}, {"monomial", to_json(w)}});
  return out;
}

json to_json(const MetricVector& m) {
  return {{"N1", m.n1}, {"N2", m.n2}, {"N3", m.n3}, {"N4", m.n4}, {"N5", m.n5}, {"N6", m.n6}};
}

json to_json(const Rule& rule) {
  return {{"lhs", to_json(rule.lhs)}, {"type", rule.type.to_string()}, {"rhs", to_json(rule.rhs)}};
}

json rules_json(const ReductionSystem& system) {
  json rules = json::array();
  for (const auto& r : system.rules()) rules.push_back(to_json(r));
  return {{"n", system.n()}, {"count", system.rules().size()}, {"rules", std::move(rules)}};
}

namespace {

json resolution_json(const Resolution& r) {
  return {{"ambiguity", to_json(r.ambiguity.word())},
          {"sigma", to_json(r.ambiguity.sigma->lhs)},
          {"tau", to_json(r.ambiguity.tau->lhs)},
          {"left", to_json(r.left_nf)},
          {"right", to_json(r.right_nf)},
          {"steps_left", r.steps_left},
          {"steps_right", r.steps_right}};
}

}  // namespace

json report_json(const Report& report, bool include_elapsed) {
  json unresolved = json::array();
  for (const auto& r : report.unresolved) unresolved.push_back(resolution_json(r));
  json out = {{"n", report.n},
              {"ambiguities", report.total},
              {"resolved", report.resolved},
              {"unresolved", std::move(unresolved)}};
  if (report.error) {
    out["checked"] = report.checked;
    out["error"] = *report.error;
  }
  if (include_elapsed) out["elapsed_ms"] = report.elapsed.count();
  return out;
}

std::string rule_text(const Rule& rule) { return rule.lhs.to_string() + " -> " + rule.rhs.to_string(); }

std::string report_text(const Report& report) {
  std::string out = "n=" + std::to_string(report.n) + " ambiguities=" + std::to_string(report.total) +
                    " resolved=" + std::to_string(report.resolved) +
                    " unresolved=" + std::to_string(report.unresolved.size()) +
                    " elapsed_ms=" + std::to_string(report.elapsed.count()) + "\n";
  for (const auto& r : report.unresolved) {
    out += "unresolved " + r.ambiguity.word().to_string() + " | left: " + r.left_nf.to_string() +
           " | right: " + r.right_nf.to_string() + "\n";
  }
  if (report.error) {
    out += "aborted after " + std::to_string(report.checked) + " checks: " + *report.error + "\n";
  }
  return out;
}

}  // namespace qsphere
