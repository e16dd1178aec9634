#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "alcove/center.hpp"

namespace alcove {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "alcove-center/1";

struct CaseRecord {
  std::string name;
  Json inputs = Json::object();
  Json expected;
  Json computed;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<CaseRecord> cases;
  double wall_seconds = 0;
  bool pass() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return true;
  }
};

// Exact values as strings so no precision is lost.
Json to_json(const Rational& x);
Json to_json(const CycScalar& x, int degree);
Json to_json(const Weight& w);

// Field order is fixed; wall time is only written when timing is set, so the
// default output is byte-identical across runs.
Json report_json(const VerifyReport& r, bool timing, bool with_schema = true);
Json combined_json(const std::vector<VerifyReport>& reports, bool timing);
std::string dump(const Json& j);

}  // namespace alcove
