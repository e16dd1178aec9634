#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "alcove/suites.hpp"

using namespace alcove;

namespace {

struct Options {
  std::string type;
  int rank = 0;
  int l = 0;
  std::string weight;
  std::string omega;
  std::string q = "generic";
  int n = 3;
  int deg = 4;
  int trunc = 0;
  unsigned seed = 1;
  bool json = false;
  bool timing = false;
  bool serial = false;
  std::string suite;
};

std::string type_string(const Options& o) {
  if (o.type.empty()) throw UsageError("--type is required");
  // "A" with --rank 2 means A2
  if (o.type.size() == 1) {
    if (o.rank <= 0) throw UsageError("--rank is required when --type has no rank");
    return o.type + std::to_string(o.rank);
  }
  return o.type;
}

Weight parse_weight(const std::string& text, int rank, const char* flag) {
  Weight w(rank);
  std::stringstream in(text);
  std::string part;
  int i = 0;
  while (std::getline(in, part, ',')) {
    if (i >= rank) throw UsageError(std::string(flag) + " has more than " + std::to_string(rank) + " coordinates");
    try {
      std::size_t used = 0;
      w[i] = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw UsageError(std::string(flag) + ": '" + part + "' is not an integer");
    }
    ++i;
  }
  if (i != rank) throw UsageError(std::string(flag) + " needs " + std::to_string(rank) + " coordinates");
  return w;
}

int level(const Options& o, const RootDatum& d) {
  const int l = o.l ? o.l : default_level(d);
  if (!d.validate_l(l)) throw InadmissibleLevel("level " + std::to_string(l) + " is not admissible for " + d.name());
  return l;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

int cmd_datum(const Options& o) {
  const RootDatum d = RootDatum::parse(type_string(o));
  if (o.json) {
    Json j;
    j["schema"] = kSchema;
    j["type"] = d.name();
    j["rank"] = d.rank();
    j["coxeter_number"] = d.coxeter_number();
    j["e"] = d.pi1_order();
    j["positive_roots"] = d.num_positive_roots();
    j["exponents"] = d.exponents();
    j["weyl_order"] = d.weyl_order();
    std::cout << dump(j) << "\n";
    return 0;
  }
  std::cout << d.name() << ": h=" << d.coxeter_number() << ", e=" << d.pi1_order()
            << ", |positive roots|=" << d.num_positive_roots() << ", exponents " << join(d.exponents())
            << ", |W|=" << d.weyl_order() << "\n";
  return 0;
}

int cmd_blocks(const Options& o) {
  const WeylGroup W(RootDatum::parse(type_string(o)));
  const int l = level(o, W.datum());
  const auto blocks = enumerate_blocks(W, l);
  if (o.json) {
    Json j;
    j["schema"] = kSchema;
    j["type"] = W.datum().name();
    j["l"] = l;
    Json arr = Json::array();
    for (const BlockLabel& b : blocks) {
      Json bj;
      bj["omega"] = to_json(b.omega);
      bj["stabilizer_order"] = b.stabilizer_order();
      bj["parahoric_type"] = b.parahoric_type;
      arr.push_back(std::move(bj));
    }
    j["blocks"] = std::move(arr);
    std::cout << dump(j) << "\n";
    return 0;
  }
  std::cout << blocks.size() << " blocks for " << W.datum().name() << " at l=" << l << "\n";
  for (const BlockLabel& b : blocks)
    std::cout << "  omega=" << b.omega.to_string() << "  stabilizer order " << b.stabilizer_order() << "  walls {"
              << join(b.parahoric_type) << "}\n";
  return 0;
}

int cmd_character(const Options& o) {
  const WeylGroup W(RootDatum::parse(type_string(o)));
  const RootDatum& d = W.datum();
  if (o.weight.empty()) throw UsageError("--weight is required");
  const Weight lam = parse_weight(o.weight, d.rank(), "--weight");
  if (!d.is_dominant(lam)) throw NotDominant("weight " + lam.to_string() + " is not dominant");
  if (o.q != "generic" && o.q != "zeta") throw UsageError("--q must be generic or zeta");
  const auto mults = weight_multiplicities(W, lam);
  std::optional<CycScalar> qdim;
  int degree = 0;
  if (o.q == "zeta") {
    const CyclotomicField& F = CyclotomicField::get(level(o, d));
    qdim = quantum_dimension(d, lam, F);
    degree = F.degree();
  }
  if (o.json) {
    Json j;
    j["schema"] = kSchema;
    j["type"] = d.name();
    j["highest_weight"] = to_json(lam);
    Json arr = Json::array();
    for (const auto& [mu, m] : mults) {
      Json t;
      t["weight"] = to_json(mu);
      Json c;
      c["num"] = std::to_string(m);
      c["den"] = "1";
      c["qpow"] = 0;
      t["coeff"] = std::move(c);
      arr.push_back(std::move(t));
    }
    j["terms"] = std::move(arr);
    if (qdim) j["quantum_dimension"] = to_json(*qdim, degree);
    std::cout << dump(j) << "\n";
    return 0;
  }
  std::cout << "ch V" << lam.to_string() << " for " << d.name() << ": " << mults.size() << " weights, dimension "
            << classical_dimension(d, lam).get_str() << "\n";
  for (const auto& [mu, m] : mults) std::cout << "  " << mu.to_string() << "  x" << m << "\n";
  if (qdim) std::cout << "quantum dimension at the root of unity: " << qdim->to_string() << "\n";
  return 0;
}

int cmd_trace(const Options& o) {
  const WeylGroup W(RootDatum::parse(type_string(o)));
  const int l = level(o, W.datum());
  if (o.omega.empty()) throw UsageError("--omega is required");
  const Weight omega = parse_weight(o.omega, W.rank(), "--omega");
  const auto blocks = enumerate_blocks(W, l);
  const auto it = std::find_if(blocks.begin(), blocks.end(), [&](const BlockLabel& b) { return b.omega == omega; });
  if (it == blocks.end()) throw UsageError("omega " + omega.to_string() + " is not an alcove label at l=" + std::to_string(l));
  const TraceScalarReport t =
      translation_trace_scalar(W, l, *it, o.n, std::max(o.n, 6), o.serial ? Exec::Serial : Exec::Parallel);
  if (o.json) {
    Json j;
    j["schema"] = kSchema;
    j["omega"] = to_json(omega);
    j["scalar"] = t.value.to_string();
    j["expected"] = t.expected;
    j["stable"] = t.stable;
    j["multiplicity"] = t.multiplicity;
    j["value"] = to_json(t.value, CyclotomicField::get(l).degree());
    j["pass"] = t.matches();
    std::cout << dump(j) << "\n";
  } else {
    std::cout << "omega=" << omega.to_string() << " scalar=" << t.value.to_string() << " expected=" << t.expected
              << (t.stable ? " stable" : " unstable") << " at n=" << t.multiplicity << "  "
              << (t.matches() ? "PASS" : "FAIL") << "\n";
  }
  return t.matches() ? 0 : 1;
}

int cmd_verify(const Options& o) {
  SuiteConfig cfg;
  if (!o.type.empty()) cfg.type = type_string(o);
  if (o.l) cfg.l = o.l;
  cfg.n = o.n;
  cfg.deg = o.deg;
  if (o.trunc) cfg.trunc = o.trunc;
  cfg.seed = o.seed;
  cfg.exec = o.serial ? Exec::Serial : Exec::Parallel;
  const std::vector<VerifyReport> reports = run_suite(o.suite, cfg);
  bool ok = true;
  for (const VerifyReport& r : reports) ok = ok && r.pass();
  if (o.json) {
    const Json j = reports.size() == 1 && o.suite != "all" ? report_json(reports[0], o.timing) : combined_json(reports, o.timing);
    std::cout << dump(j) << "\n";
    return ok ? 0 : 1;
  }
  for (const VerifyReport& r : reports) {
    int passed = 0;
    for (const CaseRecord& c : r.cases) {
      if (c.pass) ++passed;
      else std::cout << "  FAIL " << c.name << ": expected " << c.expected.dump() << ", computed " << c.computed.dump() << "\n";
    }
    std::cout << r.suite << ": " << passed << "/" << r.cases.size() << " cases pass";
    if (o.timing) std::cout << " in " << r.wall_seconds << " s";
    std::cout << "  " << (r.pass() ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alcove-center: exact computations on the center of category O at a root of unity"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "root system, e.g. A2 (or a series letter with --rank)");
    sub->add_option("--rank", o.rank, "rank when --type is a bare series letter")->check(CLI::Range(1, WeylGroup::kMaxRank));
    sub->add_option("--l", o.l, "order of the root of unity");
    sub->add_flag("--json", o.json, "machine-readable output");
  };
  auto* datum = app.add_subcommand("datum", "root datum invariants");
  common(datum);
  auto* blocks = app.add_subcommand("blocks", "alcove labels with stabilizers");
  common(blocks);
  auto* character = app.add_subcommand("character", "weights of a Weyl module");
  common(character);
  character->add_option("--weight", o.weight, "dominant highest weight, comma separated fundamental coordinates");
  character->add_option("--q", o.q, "generic or zeta");
  auto* trace = app.add_subcommand("trace", "translation trace scalar for one block");
  common(trace);
  trace->add_option("--omega", o.omega, "alcove label, comma separated");
  trace->add_option("--n", o.n, "starting idempotent multiplicity")->check(CLI::Range(0, 6));
  trace->add_flag("--serial", o.serial, "use the serial kernel");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("suite", o.suite, "d2, d1, l514, b5, poincare, linkage, charring, vanishing or all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", o.n, "starting idempotent multiplicity")->check(CLI::Range(0, 6));
  verify->add_option("--deg", o.deg, "degree bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--trunc", o.trunc, "length truncation")->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "seed for random cases");
  verify->add_flag("--timing", o.timing, "include wall time (breaks byte-identical output)");
  verify->add_flag("--serial", o.serial, "use the serial kernels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*datum) return cmd_datum(o);
    if (*blocks) return cmd_blocks(o);
    if (*character) return cmd_character(o);
    if (*trace) return cmd_trace(o);
    return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidType& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InadmissibleLevel& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const RankTooLarge& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const NotDominant& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
