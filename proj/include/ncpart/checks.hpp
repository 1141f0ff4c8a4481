#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ncpart {
namespace checks {

enum class Status { Pass, Fail, ReportOnly };

struct CheckResult {
  std::string name;
  std::string params;
  Status status = Status::Pass;
  std::vector<std::string> details;  // counterexamples or measured values

  bool passed() const { return status != Status::Fail; }
};

using Params = std::map<std::string, std::string>;
using CheckFn = std::function<CheckResult(const Params&)>;

/// Named checks: the library's invariants plus the report-only scans of
/// the open questions.
const std::map<std::string, CheckFn>& registry();
CheckResult run_check(const std::string& name, const Params& params);

/// The acceptance suite: one result per criterion, in order.
std::vector<CheckResult> run_acceptance();

}  // namespace checks
}  // namespace ncpart
