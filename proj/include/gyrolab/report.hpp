#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gyrolab/element.hpp"
#include "gyrolab/json.hpp"

namespace gyrolab {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool exhaustive = false;   // full enumeration vs seeded sample
  std::uint64_t cases = 0;   // cases examined
  std::vector<Element> witness;  // replayable counterexample, empty when passed
  std::string note;
};

// Structured pass/fail record. A failed check always carries a witness that
// can be replayed through the contract that produced it.
class VerificationReport {
 public:
  void add_pass(std::string name, bool exhaustive, std::uint64_t cases,
                std::string note = "");
  void add_fail(std::string name, bool exhaustive, std::uint64_t cases,
                std::vector<Element> witness, std::string note = "");
  void add(CheckResult result);
  // Records a check that was deliberately not run (e.g. a property with no
  // finite restatement). Skips never affect the overall verdict.
  void skip(std::string what);
  void merge(const VerificationReport& other);

  bool overall() const;
  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::vector<std::string>& skipped() const { return skipped_; }
  const CheckResult* find(const std::string& name) const;

  json to_json() const;
  std::string to_text() const;

 private:
  std::vector<CheckResult> checks_;
  std::vector<std::string> skipped_;
};

}  // namespace gyrolab
