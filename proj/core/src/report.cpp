#include "k72/report.hpp"

#include <algorithm>
#include <utility>

namespace k72 {

std::string to_string(CaseStatus status) {
  switch (status) {
    case CaseStatus::Pass:
      return "PASS";
    case CaseStatus::Flag:
      return "FLAG";
    case CaseStatus::Fail:
      return "FAIL";
  }
  return "FAIL";
}

std::string bool_to_string(bool value) { return value ? "true" : "false"; }

CaseBuilder::CaseBuilder(std::string id, std::string anchor) {
  report_.id = std::move(id);
  report_.anchor = std::move(anchor);
}

CaseBuilder& CaseBuilder::item(const std::string& label, const std::string& claimed,
                               const std::string& computed) {
  report_.claimed.push_back({label, claimed});
  report_.computed.push_back({label, computed});
  if (claimed != computed) {
    any_plain_mismatch_ = true;
  }
  return *this;
}

CaseBuilder& CaseBuilder::item(const std::string& label, const Rat& claimed, const Rat& computed) {
  return item(label, rat_to_string(claimed), rat_to_string(computed));
}

CaseBuilder& CaseBuilder::item(const std::string& label, long long claimed, long long computed) {
  return item(label, Rat(claimed), Rat(computed));
}

CaseBuilder& CaseBuilder::item_bool(const std::string& label, bool claimed, bool computed) {
  return item(label, bool_to_string(claimed), bool_to_string(computed));
}

CaseBuilder& CaseBuilder::flagged_item(const std::string& label, const std::string& claimed,
                                       const std::string& computed) {
  report_.claimed.push_back({label, claimed});
  report_.computed.push_back({label, computed});
  if (claimed != computed) {
    any_flagged_mismatch_ = true;
  }
  return *this;
}

CaseBuilder& CaseBuilder::flagged_item(const std::string& label, const Rat& claimed,
                                       const Rat& computed) {
  return flagged_item(label, rat_to_string(claimed), rat_to_string(computed));
}

CaseBuilder& CaseBuilder::witness(std::string text) {
  report_.witnesses.push_back(std::move(text));
  return *this;
}

CaseBuilder& CaseBuilder::assume(std::string text) {
  report_.assumptions.push_back(std::move(text));
  return *this;
}

CaseReport CaseBuilder::finish() {
  std::sort(report_.witnesses.begin(), report_.witnesses.end());
  if (any_plain_mismatch_) {
    report_.status = CaseStatus::Fail;
  } else if (any_flagged_mismatch_) {
    report_.status = CaseStatus::Flag;
  } else {
    report_.status = CaseStatus::Pass;
  }
  return report_;
}

}  // namespace k72
