#include "alcove/report.hpp"

namespace alcove {

Json to_json(const Rational& x) {
  Json j;
  j["num"] = numerator_string(x);
  j["den"] = denominator_string(x);
  return j;
}

Json to_json(const CycScalar& x, int degree) {
  std::vector<Rational> c = x.coefficients();
  c.resize(static_cast<std::size_t>(std::max<int>(degree, static_cast<int>(c.size()))), Rational(0));
  Json arr = Json::array();
  for (const Rational& v : c) arr.push_back(to_string(v));
  Json j;
  j["cyc"] = arr;
  return j;
}

Json to_json(const Weight& w) {
  Json arr = Json::array();
  for (int x : w) arr.push_back(x);
  return arr;
}

Json report_json(const VerifyReport& r, bool timing, bool with_schema) {
  Json j;
  if (with_schema) j["schema"] = kSchema;
  if (!r.suite.empty()) j["suite"] = r.suite;
  Json cases = Json::array();
  for (const CaseRecord& c : r.cases) {
    Json cj;
    cj["name"] = c.name;
    cj["inputs"] = c.inputs;
    cj["expected"] = c.expected;
    cj["computed"] = c.computed;
    cj["pass"] = c.pass;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  j["pass"] = r.pass();
  if (timing) j["wall_seconds"] = r.wall_seconds;
  return j;
}

Json combined_json(const std::vector<VerifyReport>& reports, bool timing) {
  Json j;
  j["schema"] = kSchema;
  j["suite"] = "all";
  Json arr = Json::array();
  bool ok = true;
  for (const VerifyReport& r : reports) {
    arr.push_back(report_json(r, timing, false));
    ok = ok && r.pass();
  }
  j["suites"] = std::move(arr);
  j["pass"] = ok;
  return j;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace alcove
