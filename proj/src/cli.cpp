#include "gqs/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "gqs/document.hpp"
#include "gqs/error.hpp"
#include "gqs/harness.hpp"
#include "gqs/predicates.hpp"

namespace gqs {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Outcome of a check: a verdict (possibly unknown) or a computed value.
struct CheckResult {
  std::optional<bool> verdict;
  bool decided = true;
  std::string witness;
  std::string note;
  std::optional<std::string> value;
  json extra = json::object();
};

struct CheckOptions {
  std::string predicate;
  std::string structure;
  std::string submodule;
  std::string ideal;
  std::string expect;
  std::string jsonPath;
};

void writeJson(const std::string& path, const json& j) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write JSON output", path);
  f << j.dump(2) << "\n";
}

const std::vector<std::string>& checkPredicates() {
  static const std::vector<std::string> names{
      "semiprime-ideal", "prime-ideal", "primary-ideal", "maximal-ideal", "radical",          "semiprime",
      "quasi-semiprime", "multiplication", "envelope",  "ideal-power",   "semiprime-module", "quasi-semiprime-module"};
  return names;
}

bool isIdealPredicate(const std::string& p) {
  return p == "semiprime-ideal" || p == "prime-ideal" || p == "primary-ideal" || p == "maximal-ideal" ||
         p == "radical";
}

bool isSubmodulePredicate(const std::string& p) {
  return p == "semiprime" || p == "quasi-semiprime" || p == "envelope" || p == "ideal-power";
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& map, const std::string& name, const std::string& what) {
  auto it = map.find(name);
  if (it == map.end()) throw UsageError("no " + what + " named '" + name + "' in the document");
  return it->second;
}

CheckResult fromVerdict(bool holds, std::string witness) {
  CheckResult r;
  r.verdict = holds;
  if (!holds) {
    if (witness.empty()) {
      r.note = "not proper";
    } else {
      r.witness = std::move(witness);
    }
  }
  return r;
}

// ---- finite structures -----------------------------------------------------

GradedIdeal targetIdeal(const ResolvedStructure& s, const CheckOptions& o) {
  if (!o.ideal.empty()) return lookup(s.ideals, o.ideal, "ideal");
  if (!o.submodule.empty()) return colonIdeal(lookup(s.submodules, o.submodule, "submodule"));
  throw UsageError("predicate '" + o.predicate + "' needs -I IDEAL or -N SUBMODULE (for its colon ideal)");
}

std::string powerWitness(const FiniteGradedRing& R, const PowerWitness& w, const std::string& second,
                         const std::string& secondLabel) {
  return "r=" + R.label(w.r) + " " + second + "=" + secondLabel + " n=" + std::to_string(w.n);
}

CheckResult checkFinite(const ResolvedStructure& s, const CheckOptions& o) {
  const auto& R = *s.ring;
  const auto& p = o.predicate;

  if (isIdealPredicate(p)) {
    const GradedIdeal ideal = targetIdeal(s, o);
    CheckResult result;
    if (p == "semiprime-ideal") {
      const auto v = checkGradedSemiprimeIdeal(ideal);
      result = fromVerdict(v.holds, v.witness ? powerWitness(R, *v.witness, "s", R.label(v.witness->x)) : "");
    } else if (p == "prime-ideal") {
      const auto v = checkGradedPrimeIdeal(ideal);
      result = fromVerdict(v.holds, v.witness ? "r=" + R.label(v.witness->r) + " s=" + R.label(v.witness->s) : "");
    } else if (p == "primary-ideal") {
      const auto v = checkGradedPrimaryIdeal(ideal);
      result = fromVerdict(v.holds, v.witness ? "r=" + R.label(v.witness->r) + " s=" + R.label(v.witness->s) : "");
    } else if (p == "maximal-ideal") {
      const auto v = checkGradedMaximalIdeal(ideal);
      result = fromVerdict(v.holds, v.witness ? "between=" + v.witness->toString() : "");
    } else {
      result.value = gradedRadical(ideal).toString();
    }
    result.extra["ideal"] = ideal.toString();
    return result;
  }

  if (isSubmodulePredicate(p)) {
    if (o.submodule.empty()) throw UsageError("predicate '" + p + "' needs -N SUBMODULE");
    const GradedSubmodule& n = lookup(s.submodules, o.submodule, "submodule");
    const auto& M = *n.module();
    CheckResult result;
    if (p == "semiprime") {
      const auto v = checkGradedSemiprimeSubmodule(n);
      result = fromVerdict(v.holds, v.witness ? powerWitness(R, *v.witness, "m", M.label(v.witness->x)) : "");
    } else if (p == "quasi-semiprime") {
      const auto v = checkGradedQuasiSemiprimeSubmodule(n);
      std::string w;
      if (v.witness) w = "colon=" + colonIdeal(n).toString() + " " + powerWitness(R, *v.witness, "s", R.label(v.witness->x));
      result = fromVerdict(v.holds, w);
      result.extra["colon"] = colonIdeal(n).toString();
    } else if (p == "ideal-power") {
      const auto v = checkIdealPowerCriterion(n);
      result = fromVerdict(v.holds, v.witness ? "I=" + v.witness->ideal.toString() + " k=" + std::to_string(v.witness->k) : "");
    } else {
      const auto env = gradedEnvelope(n);
      const bool equal = env.submodule == n;
      result.verdict = equal;
      if (!equal) result.witness = "RGE=" + env.submodule.toString();
      result.extra["envelope"] = env.submodule.toString();
      result.extra["generator_set"] = M.label(env.generatorSet);
    }
    result.extra["submodule"] = n.toString();
    return result;
  }

  if (p == "multiplication") {
    const auto v = checkGradedMultiplicationModule(s.module);
    return fromVerdict(v.holds, v.witness ? "N=" + v.witness->toString() : "");
  }
  if (p == "semiprime-module") {
    const auto v = checkGradedSemiprimeModule(s.module);
    return fromVerdict(v.holds, v.witness ? powerWitness(R, *v.witness, "m", s.module->label(v.witness->x)) : "");
  }
  const auto v = checkGradedQuasiSemiprimeModule(s.module);
  return fromVerdict(v.holds, v.witness ? "N=" + v.witness->toString() : "");
}

// ---- integer structures ----------------------------------------------------

ZIdeal targetZIdeal(const ResolvedStructure& s, const CheckOptions& o) {
  if (!o.ideal.empty()) return lookup(s.zideals, o.ideal, "ideal");
  if (!o.submodule.empty()) return zColonIdeal(lookup(s.zsubmodules, o.submodule, "submodule"));
  throw UsageError("predicate '" + o.predicate + "' needs -I IDEAL or -N SUBMODULE (for its colon ideal)");
}

std::string zWitness(const ZModuleInstance& M, const ZPowerWitness& w) {
  return "r=" + std::to_string(w.r) + " m=" + M.label(w.m) + " n=" + std::to_string(w.n);
}

// r = p, s = c / p^2, n = 2 for the least prime p with p^2 | c.
std::string squareWitness(const ZIdeal& ideal) {
  const std::int64_t c = ideal.generator;
  for (std::int64_t p = 2; p * p <= c; ++p) {
    if (c % (p * p) == 0) return "r=" + std::to_string(p) + " s=" + std::to_string(c / (p * p)) + " n=2";
  }
  return "";
}

CheckResult checkInteger(const ResolvedStructure& s, const CheckOptions& o) {
  const auto& p = o.predicate;
  if (isIdealPredicate(p)) {
    const ZIdeal ideal = targetZIdeal(s, o);
    CheckResult result;
    if (p == "semiprime-ideal") result = fromVerdict(zIsSemiprimeIdeal(ideal), squareWitness(ideal));
    if (p == "prime-ideal") result = fromVerdict(zIsPrimeIdeal(ideal), "");
    if (p == "primary-ideal") result = fromVerdict(zIsPrimaryIdeal(ideal), "");
    if (p == "maximal-ideal") result = fromVerdict(zIsMaximalIdeal(ideal), "");
    if (p == "radical") result.value = zRadical(ideal).toString();
    if (result.verdict == false && ideal.isProper()) result.note.clear();
    result.extra["ideal"] = ideal.toString();
    return result;
  }
  if (p != "semiprime" && p != "quasi-semiprime") {
    throw Error(ErrorKind::Unsupported, "predicate '" + p + "' is not available for integer modules");
  }
  if (o.submodule.empty()) throw UsageError("predicate '" + p + "' needs -N SUBMODULE");
  const ZSubmodule& n = lookup(s.zsubmodules, o.submodule, "submodule");
  const auto& M = *n.parent();
  CheckResult result;
  result.extra["submodule"] = n.toString();
  if (!zIsProper(n)) return fromVerdict(false, "");

  if (p == "quasi-semiprime") {
    const ZIdeal colon = zColonIdeal(n);
    result.verdict = zIsSemiprimeIdeal(colon);
    if (!*result.verdict) result.witness = "colon=" + colon.toString();
    result.extra["colon"] = colon.toString();
    return result;
  }

  if (M.isTorsion()) {
    const auto v = zCheckSemiprimeSubmoduleTorsion(n);
    result.verdict = v.holds;
    if (v.witness) result.witness = zWitness(M, *v.witness);
    return result;
  }
  if (auto it = s.zwitnesses.find(o.submodule); it != s.zwitnesses.end()) {
    const auto& w = it->second;
    if (zWitnessNotSemiprime(n, w.r, w.m, w.n)) {
      result.verdict = false;
      result.witness = zWitness(M, w);
      return result;
    }
    result.extra["hint_rejected"] = zWitness(M, w);
  }
  if (auto w = zSearchNotSemiprimeWitness(n)) {
    result.verdict = false;
    result.witness = zWitness(M, *w);
    return result;
  }
  result.decided = false;
  result.note = "no witness within search bounds";
  return result;
}

int runCheck(const CheckOptions& o, std::ostream& out) {
  if (std::find(checkPredicates().begin(), checkPredicates().end(), o.predicate) == checkPredicates().end()) {
    throw UsageError("unknown predicate '" + o.predicate + "'");
  }
  if (!o.expect.empty() && o.predicate == "radical") throw UsageError("--expect needs a predicate with a verdict");
  const ResolvedStructure s = resolve(loadStructure(o.structure));
  const CheckResult r = s.isInteger() ? checkInteger(s, o) : checkFinite(s, o);

  json j = r.extra;
  j["predicate"] = o.predicate;
  if (r.value) {
    out << *r.value << "\n";
    j["value"] = *r.value;
  } else {
    if (!r.decided) {
      out << "unknown  (" << r.note << ")\n";
    } else if (*r.verdict) {
      out << "true\n";
    } else if (!r.witness.empty()) {
      out << "false  witness: " << r.witness << "\n";
    } else if (!r.note.empty()) {
      out << "false  (" << r.note << ")\n";
    } else {
      out << "false\n";
    }
    j["verdict"] = r.decided ? json(*r.verdict) : json(nullptr);
    j["witness"] = r.witness.empty() ? json(nullptr) : json(r.witness);
  }
  if (!o.jsonPath.empty()) writeJson(o.jsonPath, j);

  if (!o.expect.empty()) {
    const bool wanted = o.expect == "true";
    if (!r.decided || *r.verdict != wanted) return kExitFailure;
  }
  return kExitOk;
}

int runEnumerate(const std::string& what, const std::string& structure, const std::string& jsonPath,
                 std::ostream& out) {
  const ResolvedStructure s = resolve(loadStructure(structure));
  if (s.isInteger()) throw Error(ErrorKind::Unsupported, "integer modules have infinitely many submodules");
  std::vector<std::string> items;
  if (what == "ideals") {
    for (const auto& i : enumerateGradedIdeals(s.ring)) items.push_back(i.toString());
  } else {
    for (const auto& n : enumerateGradedSubmodules(s.module)) items.push_back(n.toString());
  }
  for (const auto& i : items) out << i << "\n";
  if (!jsonPath.empty()) writeJson(jsonPath, json{{"kind", what}, {"count", items.size()}, {"items", items}});
  return kExitOk;
}

int runVerify(const std::string& target, const std::string& profile, const std::string& jsonPath, bool timing,
              std::ostream& out) {
  std::vector<TheoremId> ids;
  if (target == "all") {
    ids = allTheorems();
  } else if (auto id = parseTheoremId(target)) {
    ids.push_back(*id);
  } else {
    throw UsageError("unknown theorem id '" + target + "'");
  }
  const Catalog catalog = buildStandardCatalog(profile);
  std::vector<TheoremReport> reports;
  bool failed = false;
  for (TheoremId id : ids) {
    reports.push_back(verifyTheorem(id, catalog));
    out << formatReport(reports.back(), timing) << "\n";
    failed = failed || !reports.back().passed();
  }
  if (!jsonPath.empty()) {
    writeJson(jsonPath, target == "all" ? reportsDocument(catalog, reports, timing) : toJson(reports.front(), timing));
  }
  return failed ? kExitFailure : kExitOk;
}

int runSearch(const std::string& profile, const std::string& jsonPath, std::ostream& out) {
  const SearchReport report = searchQuasiNotSemiprime(buildStandardCatalog(profile));
  out << "space: " << report.spaceDescription << "\n";
  out << "pairs scanned: " << report.pairsScanned << "\n";
  out << "finite separating instances: " << report.found.size() << "\n";
  for (const auto& f : report.found) out << "  " << f.module << "  N=" << f.submodule << "\n";
  out << "integer separating instances: " << report.integerFound.size() << "\n";
  for (const auto& f : report.integerFound) out << "  " << f.module << "  N=" << f.submodule << "\n";
  out << "exhausted: " << (report.exhausted ? "true" : "false") << "\n";
  if (!jsonPath.empty()) writeJson(jsonPath, toJson(report));
  return kExitOk;
}

int runCatalogList(const std::string& profile, std::ostream& out) {
  const Catalog catalog = buildStandardCatalog(profile);
  out << "profile " << catalog.profile << ": " << catalog.rings.size() << " rings, " << catalog.modules.size()
      << " modules, " << catalog.zInstances.size() << " integer instances\n";
  for (const auto& r : catalog.rings) out << "ring    " << r->name() << "  order=" << r->order() << "\n";
  for (const auto& m : catalog.modules) {
    out << "module  " << m->name() << "  order=" << m->order() << "  ring=" << m->ring()->name() << "\n";
  }
  for (const auto& z : catalog.zInstances) {
    out << "integer " << z.name << "  " << z.submodule.parent()->describe() << "  N=" << z.submodule.toString()
        << "\n";
  }
  return kExitOk;
}

}  // namespace

int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (std::find(args.begin(), args.end(), "--seedless") != args.end()) {
    err << "error: --seedless is reserved; the engine has no randomness to disable\n";
    return kExitUsage;
  }

  CLI::App app{"Decision procedures for graded semiprime and quasi-semiprime submodules", "gqs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  CheckOptions check;
  auto* checkCmd = app.add_subcommand("check", "Evaluate a predicate on a structure document");
  checkCmd->add_option("predicate", check.predicate, "Predicate name")->required()->check(CLI::IsMember(checkPredicates()));
  checkCmd->add_option("-s,--structure", check.structure, "Structure document (JSON)")->required();
  checkCmd->add_option("-N,--submodule", check.submodule, "Named submodule");
  checkCmd->add_option("-I,--ideal", check.ideal, "Named ideal");
  checkCmd->add_option("--expect", check.expect, "Exit 1 unless the verdict matches")->check(CLI::IsMember({"true", "false"}));
  checkCmd->add_option("--json", check.jsonPath, "Write the result as JSON");

  std::string what, structure, enumJson;
  auto* enumCmd = app.add_subcommand("enumerate", "List graded ideals or graded submodules");
  enumCmd->add_option("what", what, "ideals | submodules")->required()->check(CLI::IsMember({"ideals", "submodules"}));
  enumCmd->add_option("-s,--structure", structure, "Structure document (JSON)")->required();
  enumCmd->add_option("--json", enumJson, "Write the list as JSON");

  std::string theorem, verifyProfile = "default", verifyJson;
  bool noTiming = false;
  auto* verifyCmd = app.add_subcommand("verify", "Check theorem statements over a catalog");
  std::string ids;
  for (TheoremId id : allTheorems()) ids += " " + toString(id);
  verifyCmd->add_option("theorem", theorem, "Theorem id or 'all'; ids:" + ids)->required();
  verifyCmd->add_option("--catalog", verifyProfile, "Catalog profile (small, default, extended)");
  verifyCmd->add_option("--json", verifyJson, "Write the report as JSON");
  verifyCmd->add_flag("--no-timing", noTiming, "Omit elapsed times");

  std::string searchProfile = "default", searchJson;
  auto* searchCmd = app.add_subcommand("search", "Search for quasi-semiprime submodules that are not semiprime");
  searchCmd->add_option("--catalog", searchProfile, "Catalog profile");
  searchCmd->add_option("--json", searchJson, "Write the report as JSON");

  std::string listProfile = "default";
  auto* catalogCmd = app.add_subcommand("catalog", "Inspect catalogs");
  catalogCmd->require_subcommand(1);
  auto* listCmd = catalogCmd->add_subcommand("list", "List the structures of a catalog profile");
  listCmd->add_option("--catalog", listProfile, "Catalog profile");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*checkCmd) return runCheck(check, out);
    if (*enumCmd) return runEnumerate(what, structure, enumJson, out);
    if (*verifyCmd) return runVerify(theorem, verifyProfile, verifyJson, !noTiming, out);
    if (*searchCmd) return runSearch(searchProfile, searchJson, out);
    if (*listCmd) return runCatalogList(listProfile, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gqs
