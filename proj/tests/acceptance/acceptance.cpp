// Acceptance checks: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gqs/cli.hpp"
#include "gqs/document.hpp"
#include "gqs/error.hpp"
#include "gqs/harness.hpp"
#include "gqs/oracle.hpp"

using namespace gqs;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits. Verdicts are exact; only runtimes carry a bound.
constexpr double kExampleSeconds = 1.0;
constexpr double kSuiteSeconds = 300.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmtSeconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << "s";
  return o.str();
}

Outcome freeRankTwo(const std::string& dir) {
  const auto start = Clock::now();
  const auto s = resolve(loadStructure(dir + "/free_rank_two.json"));
  const auto& n = s.zsubmodules.at("N");
  const auto colon = zColonIdeal(n);
  const bool quasi = zIsProper(n) && zIsSemiprimeIdeal(colon);
  const bool witness = zWitnessNotSemiprime(n, 2, {3, 0}, 2);
  const double t = secondsSince(start);
  Outcome o;
  o.pass = colon.generator == 0 && quasi && witness && t < kExampleSeconds;
  o.detail = "colon=" + colon.toString() + " quasi-semiprime=" + (quasi ? "true" : "false") +
             " witness(2,(3,0),2)=" + (witness ? "valid" : "invalid") + " " + fmtSeconds(t);
  return o;
}

Outcome cyclicEight(const std::string& dir) {
  const auto start = Clock::now();
  const auto s = resolve(loadStructure(dir + "/cyclic_eight_over_z.json"));
  const auto& n = s.zsubmodules.at("N");
  const auto colon = zColonIdeal(n);
  const bool colonSemiprime = zIsSemiprimeIdeal(colon);
  const auto v = zCheckSemiprimeSubmoduleTorsion(n);
  const double t = secondsSince(start);
  const bool witnessOk = v.witness && *v.witness == ZPowerWitness{2, {1}, 2};
  Outcome o;
  o.pass = colon.generator == 4 && !colonSemiprime && !v.holds && witnessOk && t < kExampleSeconds;
  o.detail = "colon=" + colon.toString() + " colon-semiprime=" + (colonSemiprime ? "true" : "false") +
             " semiprime=" + (v.holds ? "true" : "false") + " witness=" +
             (v.witness ? "(" + std::to_string(v.witness->r) + "," + s.zmodule->label(v.witness->m) + "," +
                              std::to_string(v.witness->n) + ")"
                        : std::string("none")) +
             " " + fmtSeconds(t);
  return o;
}

Outcome theoremSuite(const Catalog& catalog) {
  const auto start = Clock::now();
  std::uint64_t violations = 0;
  std::string vacuousOnly;
  for (TheoremId id : allTheorems()) {
    const auto r = verifyTheorem(id, catalog);
    violations += r.violations.size();
    // The ideal-power statement is the one id without a non-vacuity requirement.
    if (id != TheoremId::IdealPowerEquivalence && r.vacuous >= r.checked) vacuousOnly += " " + toString(id);
  }
  const double t = secondsSince(start);
  Outcome o;
  o.pass = violations == 0 && vacuousOnly.empty() && t < kSuiteSeconds;
  o.detail = "violations=" + std::to_string(violations) +
             " vacuous-only=" + (vacuousOnly.empty() ? std::string("none") : vacuousOnly) + " " + fmtSeconds(t);
  return o;
}

Outcome oracleEquivalence(const Catalog& catalog) {
  std::uint64_t compared = 0, disagreements = 0;
  std::string first;
  auto compare = [&](PredicateId id, const OracleInstance& inst, const std::string& where) {
    if (!acceptsInstance(id, inst)) return;
    ++compared;
    if (naiveOracle(id, inst) != optimizedVerdict(id, inst)) {
      ++disagreements;
      if (first.empty()) first = toString(id) + " on " + where;
    }
  };
  for (const auto& r : catalog.rings) {
    if (r->order() > kOracleMaxRing) continue;
    for (const auto& i : enumerateGradedIdeals(r)) {
      for (PredicateId id : allPredicates()) compare(id, i, r->name());
    }
  }
  for (const auto& m : catalog.modules) {
    if (m->ring()->order() > kOracleMaxRing || m->order() > kOracleMaxModule) continue;
    for (PredicateId id : allPredicates()) compare(id, m, m->name());
    for (const auto& n : enumerateGradedSubmodules(m)) {
      for (PredicateId id : allPredicates()) compare(id, n, m->name());
    }
  }
  Outcome o;
  o.pass = disagreements == 0 && compared > 0;
  o.detail = "compared=" + std::to_string(compared) + " disagreements=" + std::to_string(disagreements) +
             (first.empty() ? "" : " first: " + first);
  return o;
}

Outcome exponentBounds(const Catalog& catalog) {
  std::uint64_t compared = 0, differ = 0;
  auto sweep = [&](const GradedIdeal& i) {
    const std::uint64_t n = i.ring()->order();
    ++compared;
    if (isGradedSemiprimeIdeal(i, n) != isGradedSemiprimeIdeal(i, 2 * n) ||
        isGradedPrimaryIdeal(i, n) != isGradedPrimaryIdeal(i, 2 * n)) {
      ++differ;
    }
  };
  for (const auto& r : catalog.rings) {
    for (const auto& i : enumerateGradedIdeals(r)) sweep(i);
  }
  // Colon ideals of every catalog submodule, which is where the predicates are used.
  for (const auto& m : catalog.modules) {
    for (const auto& n : enumerateGradedSubmodules(m)) sweep(colonIdeal(n));
  }
  Outcome o;
  o.pass = differ == 0 && compared > 0;
  o.detail = "ideals=" + std::to_string(compared) + " differing=" + std::to_string(differ);
  return o;
}

Outcome enumerationGroundTruth() {
  const auto group = GradingGroup::cyclic(2);
  const std::vector<CyclicFactor> f{{2, 0}, {2, 1}};
  const auto split = productModule(f, makeCyclicRing(2, group));
  const auto subs = enumerateGradedSubmodules(split);
  const auto bruteSubs = bruteForceGradedSubmodules(*split);
  bool subsMatch = subs.size() == bruteSubs.size();
  for (std::size_t i = 0; subsMatch && i < subs.size(); ++i) subsMatch = subs[i].elements() == bruteSubs[i];

  const auto z8 = makeCyclicRing(8, group);
  const auto ideals = enumerateGradedIdeals(z8);
  const auto bruteIdeals = bruteForceGradedIdeals(*z8);
  bool idealsMatch = ideals.size() == bruteIdeals.size();
  for (std::size_t i = 0; idealsMatch && i < ideals.size(); ++i) idealsMatch = ideals[i].elements() == bruteIdeals[i];

  Outcome o;
  o.pass = subs.size() == 4 && ideals.size() == 4 && subsMatch && idealsMatch;
  o.detail = "split-pair submodules=" + std::to_string(subs.size()) + " (brute " + std::to_string(bruteSubs.size()) +
             ") Z8 ideals=" + std::to_string(ideals.size()) + " (brute " + std::to_string(bruteIdeals.size()) + ")";
  return o;
}

std::string verifyAllRun(const std::filesystem::path& path) {
  std::ostringstream out, err;
  const int status = runCommand({"verify", "all", "--catalog", "default", "--json", path.string()}, out, err);
  if (status != kExitOk) return "status " + std::to_string(status);
  auto doc = nlohmann::json::parse(std::ifstream(path));
  for (auto& report : doc.at("reports")) report.erase("elapsed_ms");
  return doc.dump(2);
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "gqs_acceptance_run_a.json";
  const auto b = dir / "gqs_acceptance_run_b.json";
  const auto first = verifyAllRun(a);
  const auto second = verifyAllRun(b);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  Outcome o;
  o.pass = first == second && first.rfind("status", 0) != 0;
  o.detail = "bytes=" + std::to_string(first.size()) + (o.pass ? " identical" : " differ");
  return o;
}

Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {false, std::string("error: ") + e.what()};
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : GQS_DOCUMENTS_DIR;
  const auto catalog = buildStandardCatalog("default");

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"free rank two example", [&] { return freeRankTwo(dir); }},
      {"cyclic eight example", [&] { return cyclicEight(dir); }},
      {"theorem suite", [&] { return theoremSuite(catalog); }},
      {"oracle equivalence", [&] { return oracleEquivalence(catalog); }},
      {"exponent bound", [&] { return exponentBounds(catalog); }},
      {"enumeration ground truth", enumerationGroundTruth},
      {"determinism", determinism},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto o = guarded(criteria[i].second);
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  "
              << o.detail << "\n";
  }
  return all ? 0 : 1;
}
