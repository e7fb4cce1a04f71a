#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace bindkit {

struct LawViolation {
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

// Outcome of checking one law. `pass` is true exactly when no violation
// was observed; the recorded counterexamples are capped, the trial count
// is not.
struct LawReport {
  std::string law;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<LawViolation> violations;
  std::string meta;  // optional note on the checked reading

  static constexpr std::size_t kMaxRecorded = 5;

  bool pass() const { return violations.empty(); }

  void record(std::string inputs, std::string lhs, std::string rhs) {
    if (violations.size() < kMaxRecorded)
      violations.push_back(
          {std::move(inputs), std::move(lhs), std::move(rhs)});
  }

  nlohmann::ordered_json to_json() const;
};

nlohmann::ordered_json reports_to_json(const std::vector<LawReport>& rs);

// One line per report: "law ............. pass (N trials)".
std::string summarize(const std::vector<LawReport>& rs);

bool all_pass(const std::vector<LawReport>& rs);

}  // namespace bindkit
