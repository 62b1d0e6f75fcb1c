#include "gyrolab/report.hpp"

#include <sstream>

namespace gyrolab {

void VerificationReport::add_pass(std::string name, bool exhaustive,
                                  std::uint64_t cases, std::string note) {
  checks_.push_back({std::move(name), true, exhaustive, cases, {}, std::move(note)});
}

void VerificationReport::add_fail(std::string name, bool exhaustive,
                                  std::uint64_t cases, std::vector<Element> witness,
                                  std::string note) {
  checks_.push_back(
      {std::move(name), false, exhaustive, cases, std::move(witness), std::move(note)});
}

void VerificationReport::add(CheckResult result) { checks_.push_back(std::move(result)); }

void VerificationReport::skip(std::string what) { skipped_.push_back(std::move(what)); }

void VerificationReport::merge(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  skipped_.insert(skipped_.end(), other.skipped_.begin(), other.skipped_.end());
}

bool VerificationReport::overall() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

json VerificationReport::to_json() const {
  json checks = json::array();
  for (const auto& c : checks_) {
    json w = nullptr;
    if (!c.witness.empty()) {
      w = json::array();
      for (const auto& e : c.witness) w.push_back(e.to_json());
    }
    json entry{{"name", c.name},
               {"passed", c.passed},
               {"exhaustive", c.exhaustive},
               {"cases", c.cases},
               {"witness", w}};
    if (!c.note.empty()) entry["note"] = c.note;
    checks.push_back(std::move(entry));
  }
  json j{{"checks", std::move(checks)}, {"overall", overall()}};
  if (!skipped_.empty()) j["skipped"] = skipped_;
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases
       << (c.exhaustive ? " cases, exhaustive)" : " cases, sampled)");
    if (!c.witness.empty()) {
      os << " witness=";
      for (std::size_t i = 0; i < c.witness.size(); ++i)
        os << (i ? ", " : "(") << c.witness[i].str();
      os << ")";
    }
    if (!c.note.empty()) os << "  [" << c.note << "]";
    os << "\n";
  }
  for (const auto& s : skipped_) os << "SKIP " << s << "\n";
  os << (overall() ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
  return os.str();
}

}  // namespace gyrolab
