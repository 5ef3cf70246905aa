#include "gqs/harness.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>

#include "gqs/error.hpp"
#include "gqs/hom.hpp"
#include "gqs/oracle.hpp"
#include "gqs/predicates.hpp"

namespace gqs {

using nlohmann::json;

namespace {

struct TheoremName {
  TheoremId id;
  std::string_view name;
};

constexpr std::array kTheoremNames{
    TheoremName{TheoremId::SemiprimeImpliesQuasi, "T2.2"},
    TheoremName{TheoremId::MultiplicationEquivalence, "T2.5"},
    TheoremName{TheoremId::IdealPowerEquivalence, "T2.6"},
    TheoremName{TheoremId::PrimaryColonIsPrime, "T2.7"},
    TheoremName{TheoremId::EnvelopeEquivalence, "T2.8"},
    TheoremName{TheoremId::EpimorphismImage, "T2.9i"},
    TheoremName{TheoremId::EpimorphismPreimage, "T2.9ii"},
    TheoremName{TheoremId::MaximalColonExtends, "T2.10"},
    TheoremName{TheoremId::IntersectionClosed, "T2.11"},
    TheoremName{TheoremId::SemiprimeModuleIsQuasi, "T2.13"},
};

struct Profile {
  std::vector<std::uint32_t> cyclic;
  std::vector<std::pair<std::uint32_t, std::int64_t>> quotientPoly;
  std::uint32_t maxModuleOrder;
};

std::optional<Profile> profileNamed(std::string_view name) {
  if (name == "small") return Profile{{2, 3, 4, 6, 8}, {{2, 0}, {2, 1}}, 8};
  if (name == "default") return Profile{{2, 3, 4, 6, 8, 9, 12}, {{2, 0}, {2, 1}, {3, 1}, {4, 0}}, 16};
  if (name == "extended") {
    return Profile{{2, 3, 4, 5, 6, 8, 9, 10, 12, 16}, {{2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}, {4, 0}, {4, 1}}, 24};
  }
  return std::nullopt;
}

std::vector<std::uint32_t> divisorsAtLeastTwo(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

void addProducts(const RingPtr& ring, std::uint32_t n, std::uint32_t maxOrder, std::vector<ModulePtr>& out) {
  const auto divisors = divisorsAtLeastTwo(n);
  for (std::uint32_t d : divisors) {
    if (d < n) {
      const std::array f{CyclicFactor{d, 0}};
      out.push_back(productModule(f, ring));
    }
  }
  for (std::uint32_t a : divisors) {
    for (std::uint32_t b : divisors) {
      if (a * b > maxOrder) continue;
      if (a <= b) {
        const std::array trivial{CyclicFactor{a, 0}, CyclicFactor{b, 0}};
        out.push_back(productModule(trivial, ring));
      }
      const std::array split{CyclicFactor{a, 0}, CyclicFactor{b, 1}};
      out.push_back(productModule(split, ring));
    }
  }
}

std::vector<ZExample> integerExamples() {
  const auto group = GradingGroup::cyclic(2);
  std::vector<ZExample> out;
  auto free = ZModuleInstance::create(group, 2, {}, {0, 1});
  out.push_back({"free-rank-two", ZSubmodule::create(free, {{4, 0}}), ZPowerWitness{2, {3, 0}, 2}});
  auto torsion = ZModuleInstance::create(group, 0, {8}, {0});
  out.push_back({"cyclic-eight", ZSubmodule::create(torsion, {{4}}), ZPowerWitness{2, {1}, 2}});
  return out;
}

// Quasi-semiprime evaluated through the radical: a proper graded ideal is
// semiprime exactly when it equals its graded radical. Used for conclusions
// whose hypothesis already goes through the direct predicate.
bool quasiViaRadical(const GradedSubmodule& n) {
  if (!n.isProper()) return false;
  const GradedIdeal colon = colonIdeal(n);
  return colon.isProper() && gradedRadical(colon) == colon;
}

bool semiprimeIdealViaRadical(const GradedIdeal& ideal) {
  return ideal.isProper() && gradedRadical(ideal) == ideal;
}

json describe(const GradedSubmodule& n) { return n.module()->label(n.elements()); }

class Sweep {
 public:
  explicit Sweep(TheoremReport& report) : report_(report) {}

  void skip() {
    ++report_.total;
    ++report_.skipped;
  }
  /// Implication instance; conclusion is evaluated only when the hypothesis holds.
  void implication(bool hypothesis, const std::function<bool()>& conclusion, const std::function<json()>& detail) {
    ++report_.total;
    ++report_.checked;
    if (!hypothesis) {
      ++report_.vacuous;
      return;
    }
    if (!conclusion()) report_.violations.push_back(detail());
  }
  /// Equivalence instance; vacuous when both sides are false.
  void equivalence(bool lhs, bool rhs, const std::function<json()>& detail) {
    ++report_.total;
    ++report_.checked;
    if (!lhs && !rhs) ++report_.vacuous;
    if (lhs != rhs) {
      json d = detail();
      d["lhs"] = lhs;
      d["rhs"] = rhs;
      report_.violations.push_back(std::move(d));
    }
  }

 private:
  TheoremReport& report_;
};

std::vector<GradedHomomorphism> epimorphismFamily(const ModulePtr& module, const std::vector<GradedSubmodule>& subs) {
  std::vector<GradedHomomorphism> out;
  for (const auto& k : subs) {
    if (k.isProper()) out.push_back(quotientProjection(k));
  }
  if (module->order() <= 8) {
    for (auto& f : gradedEndomorphisms(module)) {
      if (isEpimorphism(f)) out.push_back(std::move(f));
    }
  }
  return out;
}

json homDetail(const GradedHomomorphism& f) {
  return json{{"source", f.source()->name()}, {"target", f.target()->name()}, {"kernel", describe(kernel(f))}};
}

void sweepModule(TheoremId id, const ModulePtr& module, Sweep& sweep) {
  const auto subs = enumerateGradedSubmodules(module);
  auto detail = [&module](const GradedSubmodule& n) {
    return [&module, &n]() { return json{{"module", module->name()}, {"submodule", describe(n)}}; };
  };

  switch (id) {
    case TheoremId::SemiprimeImpliesQuasi:
      for (const auto& n : subs) {
        if (!n.isProper()) {
          sweep.skip();
          continue;
        }
        sweep.implication(isGradedSemiprimeSubmodule(n), [&] { return isGradedQuasiSemiprimeSubmodule(n); },
                          detail(n));
      }
      return;

    case TheoremId::MultiplicationEquivalence:
    case TheoremId::IdealPowerEquivalence:
    case TheoremId::EnvelopeEquivalence: {
      const bool multiplication = isGradedMultiplicationModule(module);
      for (const auto& n : subs) {
        if (!multiplication || !n.isProper()) {
          sweep.skip();
          continue;
        }
        const bool quasi = isGradedQuasiSemiprimeSubmodule(n);
        bool other = false;
        if (id == TheoremId::MultiplicationEquivalence) other = isGradedSemiprimeSubmodule(n);
        if (id == TheoremId::IdealPowerEquivalence) other = idealPowerCriterion(n);
        if (id == TheoremId::EnvelopeEquivalence) other = gradedEnvelope(n).submodule == n;
        sweep.equivalence(quasi, other, detail(n));
      }
      return;
    }

    case TheoremId::PrimaryColonIsPrime:
      for (const auto& n : subs) {
        if (!n.isProper()) {
          sweep.skip();
          continue;
        }
        const GradedIdeal colon = colonIdeal(n);
        const bool hypothesis = isGradedQuasiSemiprimeSubmodule(n) && isGradedPrimaryIdeal(colon);
        sweep.implication(hypothesis, [&] { return isGradedPrimeIdeal(colon); }, detail(n));
      }
      return;

    case TheoremId::EpimorphismImage:
      for (const auto& f : epimorphismFamily(module, subs)) {
        const GradedSubmodule ker = kernel(f);
        for (const auto& n : subs) {
          if (!n.isProper() || !ker.isSubsetOf(n)) {
            sweep.skip();
            continue;
          }
          sweep.implication(
              isGradedQuasiSemiprimeSubmodule(n), [&] { return quasiViaRadical(image(f, n)); },
              [&] {
                json d = homDetail(f);
                d["submodule"] = describe(n);
                return d;
              });
        }
      }
      return;

    case TheoremId::EpimorphismPreimage:
      for (const auto& f : epimorphismFamily(module, subs)) {
        for (const auto& np : enumerateGradedSubmodules(f.target())) {
          if (!np.isProper()) {
            sweep.skip();
            continue;
          }
          sweep.implication(
              isGradedQuasiSemiprimeSubmodule(np), [&] { return quasiViaRadical(preimage(f, np)); },
              [&] {
                json d = homDetail(f);
                d["target_submodule"] = describe(np);
                return d;
              });
        }
      }
      return;

    case TheoremId::MaximalColonExtends:
      for (const auto& k : subs) {
        if (!k.isProper()) continue;
        for (const auto& n : subs) {
          if (!n.isSubsetOf(k)) continue;
          const bool hypothesis = isGradedQuasiSemiprimeSubmodule(n) && isGradedMaximalIdeal(colonIdeal(n));
          sweep.implication(hypothesis, [&] { return quasiViaRadical(k); }, [&] {
            return json{{"module", module->name()}, {"N", describe(n)}, {"K", describe(k)}};
          });
        }
      }
      return;

    case TheoremId::IntersectionClosed:
      for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::size_t j = i; j < subs.size(); ++j) {
          const auto& n = subs[i];
          const auto& k = subs[j];
          if (!n.isProper() || !k.isProper()) {
            sweep.skip();
            continue;
          }
          const bool hypothesis = isGradedQuasiSemiprimeSubmodule(n) && isGradedQuasiSemiprimeSubmodule(k);
          sweep.implication(hypothesis, [&] { return quasiViaRadical(intersect(n, k)); }, [&] {
            return json{{"module", module->name()}, {"N", describe(n)}, {"K", describe(k)}};
          });
        }
      }
      return;

    case TheoremId::SemiprimeModuleIsQuasi: {
      if (module->order() == 1) {
        sweep.skip();
        return;
      }
      auto conclusion = [&] {
        for (const auto& n : subs) {
          if (!n.isZero() && !semiprimeIdealViaRadical(annihilator(n))) return false;
        }
        return true;
      };
      sweep.implication(isGradedSemiprimeModule(module), conclusion,
                        [&] { return json{{"module", module->name()}}; });
      return;
    }
  }
}

std::string entryName(const ModulePtr& m) { return m->name(); }

}  // namespace

std::string toString(TheoremId id) {
  for (const auto& t : kTheoremNames) {
    if (t.id == id) return std::string(t.name);
  }
  return "unknown";
}

std::optional<TheoremId> parseTheoremId(std::string_view text) {
  for (const auto& t : kTheoremNames) {
    if (t.name == text) return t.id;
  }
  return std::nullopt;
}

const std::vector<TheoremId>& allTheorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> out;
    for (const auto& t : kTheoremNames) out.push_back(t.id);
    return out;
  }();
  return ids;
}

const std::vector<std::string>& catalogProfiles() {
  static const std::vector<std::string> names{"small", "default", "extended"};
  return names;
}

Catalog buildStandardCatalog(std::string_view profile) {
  const auto p = profileNamed(profile);
  if (!p) throw Error(ErrorKind::InvalidArgument, "unknown catalog profile", std::string(profile));
  const auto group = GradingGroup::cyclic(2);

  Catalog catalog;
  catalog.profile = std::string(profile);
  for (std::uint32_t n : p->cyclic) catalog.rings.push_back(makeCyclicRing(n, group));
  for (const auto& [n, c] : p->quotientPoly) catalog.rings.push_back(makeQuotientPolyRing(n, c, 1, group));

  std::vector<ModulePtr> base;
  for (const auto& ring : catalog.rings) base.push_back(ringAsModule(ring));
  for (std::size_t i = 0; i < p->cyclic.size(); ++i) {
    addProducts(catalog.rings[i], p->cyclic[i], p->maxModuleOrder, base);
  }
  std::vector<ModulePtr> quotients;
  for (const auto& m : base) {
    for (const auto& k : enumerateGradedSubmodules(m)) {
      if (k.isProper() && !k.isZero()) quotients.push_back(quotientModule(m, k).module);
    }
  }
  catalog.modules = std::move(base);
  catalog.modules.insert(catalog.modules.end(), quotients.begin(), quotients.end());
  catalog.zInstances = integerExamples();
  return catalog;
}

std::string toString(ReportStatus status) {
  switch (status) {
    case ReportStatus::Pass: return "PASS";
    case ReportStatus::WeakPass: return "WEAK-PASS";
    case ReportStatus::Fail: return "FAIL";
  }
  return "FAIL";
}

ReportStatus TheoremReport::status() const {
  if (!violations.empty()) return ReportStatus::Fail;
  if (checked == vacuous) return ReportStatus::WeakPass;
  return ReportStatus::Pass;
}

TheoremReport verifyTheorem(TheoremId id, const Catalog& catalog) {
  if (!parseTheoremId(toString(id))) throw Error(ErrorKind::InvalidArgument, "invalid theorem id");
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report;
  report.theorem = id;
  Sweep sweep(report);
  for (const auto& m : catalog.modules) sweepModule(id, m, sweep);
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  if (report.checked + report.skipped != report.total) throw std::logic_error("report counts inconsistent");
  return report;
}

SearchReport searchQuasiNotSemiprime(const Catalog& catalog) {
  SearchReport report;
  std::ostringstream space;
  space << "profile " << (catalog.profile.empty() ? "(custom)" : catalog.profile) << ": " << catalog.modules.size()
        << " finite modules, every proper graded submodule; " << catalog.zInstances.size()
        << " integer instances";
  report.spaceDescription = space.str();

  for (const auto& m : catalog.modules) {
    for (const auto& n : enumerateGradedSubmodules(m)) {
      if (!n.isProper()) continue;
      ++report.pairsScanned;
      if (!isGradedQuasiSemiprimeSubmodule(n) || isGradedSemiprimeSubmodule(n)) continue;
      // Re-verify with the doubled exponent bound and the radical route.
      const std::uint64_t doubled = 2ULL * m->ring()->order();
      bool confirmed = quasiViaRadical(n) && !isGradedSemiprimeSubmodule(n, doubled);
      if (confirmed && m->ring()->order() <= kOracleMaxRing && m->order() <= kOracleMaxModule) {
        confirmed = naiveOracle(PredicateId::QuasiSemiprimeSubmodule, n) &&
                    !naiveOracle(PredicateId::SemiprimeSubmodule, n);
      }
      if (!confirmed) throw std::logic_error("search hit failed re-verification: " + m->name() + " " + n.toString());
      report.found.push_back({m->ring()->name(), entryName(m), n.toString()});
    }
  }

  for (const auto& z : catalog.zInstances) {
    const auto& n = z.submodule;
    if (!zIsProper(n) || !zIsSemiprimeIdeal(zColonIdeal(n))) continue;
    bool notSemiprime = false;
    if (z.refutation) {
      notSemiprime = zWitnessNotSemiprime(n, z.refutation->r, z.refutation->m, z.refutation->n);
    } else if (n.parent()->isTorsion()) {
      notSemiprime = !zIsSemiprimeSubmoduleTorsion(n);
    } else {
      notSemiprime = zSearchNotSemiprimeWitness(n).has_value();
    }
    if (notSemiprime) report.integerFound.push_back({"Z", n.parent()->describe(), n.toString()});
  }
  report.exhausted = true;
  return report;
}

json toJson(const TheoremReport& report, bool withTiming) {
  json j{{"theorem", toString(report.theorem)},
         {"status", toString(report.status())},
         {"total", report.total},
         {"skipped", report.skipped},
         {"checked", report.checked},
         {"vacuous", report.vacuous},
         {"violations", report.violations}};
  if (withTiming) j["elapsed_ms"] = report.elapsed.count();
  return j;
}

json toJson(const SearchReport& report) {
  auto entries = [](const std::vector<SeparatingInstance>& v) {
    json arr = json::array();
    for (const auto& e : v) arr.push_back({{"ring", e.ring}, {"module", e.module}, {"submodule", e.submodule}});
    return arr;
  };
  return json{{"space", report.spaceDescription},
              {"pairs_scanned", report.pairsScanned},
              {"exhausted", report.exhausted},
              {"found", entries(report.found)},
              {"integer_found", entries(report.integerFound)}};
}

json reportsDocument(const Catalog& catalog, const std::vector<TheoremReport>& list, bool withTiming) {
  json reports = json::array();
  for (const auto& r : list) reports.push_back(toJson(r, withTiming));
  return json{{"schema", "gqs-report/1"},
              {"catalog",
               {{"profile", catalog.profile},
                {"rings", catalog.rings.size()},
                {"modules", catalog.modules.size()},
                {"integer_instances", catalog.zInstances.size()}}},
              {"reports", std::move(reports)}};
}

json verifyAllJson(const Catalog& catalog, bool withTiming) {
  std::vector<TheoremReport> reports;
  for (TheoremId id : allTheorems()) reports.push_back(verifyTheorem(id, catalog));
  return reportsDocument(catalog, reports, withTiming);
}

std::string formatReport(const TheoremReport& report, bool withTiming) {
  std::ostringstream out;
  out << toString(report.theorem) << "  " << toString(report.status()) << "  total=" << report.total
      << " checked=" << report.checked << " vacuous=" << report.vacuous << " skipped=" << report.skipped
      << " violations=" << report.violations.size();
  if (withTiming) out << "  (" << report.elapsed.count() << " ms)";
  for (const auto& v : report.violations) out << "\n  violation: " << v.dump();
  return out.str();
}

}  // namespace gqs
