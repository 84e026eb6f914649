#include "k72/runner.hpp"

#include "k72/cases.hpp"

#include "json.hpp"

#include <chrono>
#include <sstream>

namespace k72 {

namespace {

CaseStatus status_from_string(const std::string& text) {
  if (text == "PASS") return CaseStatus::Pass;
  if (text == "FLAG") return CaseStatus::Flag;
  if (text == "FAIL") return CaseStatus::Fail;
  throw UsageError("unknown case status: " + text);
}

nlohmann::ordered_json labeled_values_json(const std::vector<LabeledValue>& values) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const LabeledValue& v : values) {
    out.push_back({{"label", v.label}, {"value", v.value}});
  }
  return out;
}

std::vector<LabeledValue> labeled_values_from_json(const nlohmann::json& array) {
  std::vector<LabeledValue> out;
  for (const auto& entry : array) {
    out.push_back({entry.at("label").get<std::string>(), entry.at("value").get<std::string>()});
  }
  return out;
}

std::string summary_verdict(const SuiteSummary& summary) {
  if (summary.fail > 0) return "FAIL";
  if (summary.flag > 0) return "PASS WITH FLAGS";
  return "PASS";
}

}  // namespace

std::string tool_version() {
#ifdef K72_VERSION
  return K72_VERSION;
#else
  return "0.0.0";
#endif
}

SuiteReport run(const std::string& selector) {
  const auto start = std::chrono::steady_clock::now();

  SuiteReport report;
  report.version = tool_version();
  for (const CaseDef& def : case_registry()) {
    if (selector != "all" && def.id.rfind(selector, 0) != 0) continue;
    report.cases.push_back(def.run());
  }
  if (report.cases.empty()) {
    std::string message = "selector '" + selector + "' matches no case; valid ids:";
    for (const CaseDef& def : case_registry()) {
      message += "\n  " + def.id;
    }
    throw UsageError(message);
  }
  for (const CaseReport& c : report.cases) {
    switch (c.status) {
      case CaseStatus::Pass: ++report.summary.pass; break;
      case CaseStatus::Flag: ++report.summary.flag; break;
      case CaseStatus::Fail: ++report.summary.fail; break;
    }
  }

  const auto end = std::chrono::steady_clock::now();
  report.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  return report;
}

std::string emit(const SuiteReport& report, EmitFormat format) {
  if (format == EmitFormat::Json) {
    nlohmann::ordered_json out;
    out["version"] = report.version;
    out["cases"] = nlohmann::ordered_json::array();
    for (const CaseReport& c : report.cases) {
      nlohmann::ordered_json entry;
      entry["id"] = c.id;
      entry["anchor"] = c.anchor;
      entry["claimed"] = labeled_values_json(c.claimed);
      entry["computed"] = labeled_values_json(c.computed);
      entry["status"] = to_string(c.status);
      entry["witnesses"] = c.witnesses;
      entry["assumptions"] = c.assumptions;
      out["cases"].push_back(std::move(entry));
    }
    out["summary"] = {{"pass", report.summary.pass},
                      {"flag", report.summary.flag},
                      {"fail", report.summary.fail}};
    out["runtime_ms"] = report.runtime_ms;
    return out.dump(2) + "\n";
  }

  std::ostringstream out;
  for (const CaseReport& c : report.cases) {
    out << c.id << "  [" << to_string(c.status) << "]\n";
    out << "  anchor: " << c.anchor << "\n";
    for (std::size_t i = 0; i < c.claimed.size(); ++i) {
      const bool match = c.claimed[i].value == c.computed[i].value;
      out << "  " << c.claimed[i].label << ": claimed " << c.claimed[i].value
          << ", computed " << c.computed[i].value << (match ? "" : "  << MISMATCH") << "\n";
    }
    for (const std::string& w : c.witnesses) {
      out << "  witness: " << w << "\n";
    }
    for (const std::string& a : c.assumptions) {
      out << "  assumes: " << a << "\n";
    }
  }
  out << "summary: " << report.summary.total() << " cases: " << report.summary.pass
      << " PASS, " << report.summary.flag << " FLAG, " << report.summary.fail
      << " FAIL  [" << summary_verdict(report.summary) << "]  (runtime "
      << report.runtime_ms << " ms)\n";
  return out.str();
}

SuiteReport parse_json_report(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& error) {
    throw UsageError(std::string("malformed report: ") + error.what());
  }
  try {
    SuiteReport report;
    report.version = parsed.at("version").get<std::string>();
    for (const auto& entry : parsed.at("cases")) {
      CaseReport c;
      c.id = entry.at("id").get<std::string>();
      c.anchor = entry.at("anchor").get<std::string>();
      c.claimed = labeled_values_from_json(entry.at("claimed"));
      c.computed = labeled_values_from_json(entry.at("computed"));
      c.status = status_from_string(entry.at("status").get<std::string>());
      c.witnesses = entry.at("witnesses").get<std::vector<std::string>>();
      c.assumptions = entry.at("assumptions").get<std::vector<std::string>>();
      report.cases.push_back(std::move(c));
    }
    report.summary.pass = parsed.at("summary").at("pass").get<long long>();
    report.summary.flag = parsed.at("summary").at("flag").get<long long>();
    report.summary.fail = parsed.at("summary").at("fail").get<long long>();
    report.runtime_ms = parsed.at("runtime_ms").get<long long>();
    return report;
  } catch (const nlohmann::json::exception& error) {
    throw UsageError(std::string("malformed report: ") + error.what());
  }
}

int exit_code_for(const SuiteReport& report, bool strict_flags) {
  if (report.summary.fail > 0) return 1;
  if (strict_flags && report.summary.flag > 0) return 2;
  return 0;
}

std::string list_cases_text() {
  std::ostringstream out;
  for (const CaseDef& def : case_registry()) {
    out << def.id << "\t" << def.anchor << "\n";
  }
  return out.str();
}

}  // namespace k72
