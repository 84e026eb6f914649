#pragma once

#include "k72/rational.hpp"

#include <string>
#include <vector>

namespace k72 {

// Outcome of one verification case.
//   PASS: every claimed item matches its recomputation exactly.
//   FLAG: the only mismatches are ones explicitly marked as documented
//         discrepancies (the source's arithmetic disagrees with the
//         recomputation, and the case says so; the claim is never altered).
//   FAIL: any undocumented mismatch.
enum class CaseStatus { Pass, Flag, Fail };

std::string to_string(CaseStatus status);

struct LabeledValue {
  std::string label;
  std::string value;

  friend bool operator==(const LabeledValue&, const LabeledValue&) = default;
};

// One named verification case: claimed values side by side with recomputed
// ones, a status derived from the comparison, witnesses (argmax points,
// exception lists) and assumptions (cited facts used but not recomputed).
struct CaseReport {
  std::string id;
  std::string anchor;
  std::vector<LabeledValue> claimed;
  std::vector<LabeledValue> computed;
  CaseStatus status = CaseStatus::Pass;
  std::vector<std::string> witnesses;  // kept sorted
  std::vector<std::string> assumptions;

  friend bool operator==(const CaseReport&, const CaseReport&) = default;
};

// Assembles a CaseReport. Each item() adds one claimed/computed pair; the
// flagged variant marks a documented discrepancy so a mismatch downgrades
// the case to FLAG rather than FAIL. finish() sorts witnesses and derives
// the status.
class CaseBuilder {
 public:
  CaseBuilder(std::string id, std::string anchor);

  CaseBuilder& item(const std::string& label, const std::string& claimed,
                    const std::string& computed);
  CaseBuilder& item(const std::string& label, const Rat& claimed, const Rat& computed);
  CaseBuilder& item(const std::string& label, long long claimed, long long computed);
  CaseBuilder& item_bool(const std::string& label, bool claimed, bool computed);

  CaseBuilder& flagged_item(const std::string& label, const std::string& claimed,
                            const std::string& computed);
  CaseBuilder& flagged_item(const std::string& label, const Rat& claimed, const Rat& computed);

  CaseBuilder& witness(std::string text);
  CaseBuilder& assume(std::string text);

  CaseReport finish();

 private:
  CaseReport report_;
  bool any_plain_mismatch_ = false;
  bool any_flagged_mismatch_ = false;
};

std::string bool_to_string(bool value);

}  // namespace k72
