#include "conegeom/report.hpp"

#include <cstdio>

namespace conegeom {

namespace {

std::string verdict(bool pass) { return pass ? "pass" : "fail"; }

std::string format_residual(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

nlohmann::json StructureReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["verdict"] = verdict(pass);
  j["max_residual"] = max_residual;
  j["worst_point"] = worst_point;
  j["samples_used"] = samples_used;
  j["tolerance"] = tolerance;
  return j;
}

const StructureReport* ClassificationReport::find_check(
    const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::optional<bool> ClassificationReport::flag(const std::string& name) const {
  for (const auto& [n, v] : flags)
    if (n == name) return v;
  return std::nullopt;
}

nlohmann::json ClassificationReport::to_json() const {
  nlohmann::json j;
  j["engine_version"] = engine_version;
  j["config"] = {{"samples", samples}, {"seed", seed}, {"tolerance", tolerance}};
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) checks_json.push_back(c.to_json());
  j["checks"] = checks_json;
  nlohmann::json flags_json;
  for (const auto& [name, value] : flags)
    flags_json[name] = value.has_value() ? verdict(*value) : "skipped";
  j["flags"] = flags_json;
  return j;
}

std::string ClassificationReport::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.pass ? "[pass] " : "[FAIL] ";
    out += c.name;
    out += "  residual=";
    out += format_residual(c.max_residual);
    out += "  tol=";
    out += format_residual(c.tolerance);
    out += "\n";
  }
  out += "flags:\n";
  for (const auto& [name, value] : flags) {
    out += "  ";
    out += name;
    out += ": ";
    out += value.has_value() ? verdict(*value) : "skipped";
    out += "\n";
  }
  return out;
}

}  // namespace conegeom
