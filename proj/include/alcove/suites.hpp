#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alcove/report.hpp"

namespace alcove {

struct SuiteConfig {
  std::optional<std::string> type;  // unset: the default desks A1 at l=3 and A2 at l=5
  std::optional<int> l;
  int n = 3;                        // starting idempotent multiplicity
  int deg = 4;                      // degree bound for the fixed-point check
  std::optional<int> trunc;         // per-suite default when unset
  unsigned seed = 1;
  Exec exec = Exec::Parallel;
};

struct Desk {
  std::string type;
  int l = 0;
};

// The smallest admissible level for a type.
int default_level(const RootDatum& d);
std::vector<Desk> desks(const SuiteConfig& cfg);

VerifyReport suite_d2(const SuiteConfig& cfg);         // trace formula vs module-by-module sum
VerifyReport suite_d1(const SuiteConfig& cfg);         // trace depends on the weight multiset only
VerifyReport suite_l514(const SuiteConfig& cfg);       // translation trace scalar = stabilizer order
VerifyReport suite_b5(const SuiteConfig& cfg);         // pushforward commutes with restriction
VerifyReport suite_poincare(const SuiteConfig& cfg);   // Fl = G/B x Gr and the exponent product
VerifyReport suite_linkage(const SuiteConfig& cfg);    // tensor shift multiset and the block criterion
VerifyReport suite_charring(const SuiteConfig& cfg);   // character ring identities and round trip
VerifyReport suite_vanishing(const SuiteConfig& cfg);  // pushforward vanishes off the block

const std::vector<std::string>& suite_names();
// "all" runs d2, d1, l514, b5, poincare, linkage. UsageError on unknown names.
std::vector<VerifyReport> run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace alcove
