#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gqs/module.hpp"
#include "gqs/zmodule.hpp"

namespace gqs {

enum class TheoremId {
  SemiprimeImpliesQuasi,
  MultiplicationEquivalence,
  IdealPowerEquivalence,
  PrimaryColonIsPrime,
  EnvelopeEquivalence,
  EpimorphismImage,
  EpimorphismPreimage,
  MaximalColonExtends,
  IntersectionClosed,
  SemiprimeModuleIsQuasi,
};

std::string toString(TheoremId id);
std::optional<TheoremId> parseTheoremId(std::string_view text);
const std::vector<TheoremId>& allTheorems();

struct ZExample {
  std::string name;
  ZSubmodule submodule;
  /// Known refutation of semiprimeness, if any.
  std::optional<ZPowerWitness> refutation;
};

struct Catalog {
  std::string profile;
  std::vector<RingPtr> rings;
  std::vector<ModulePtr> modules;
  std::vector<ZExample> zInstances;
};

/// Profiles: "small", "default", "extended". Deterministic.
Catalog buildStandardCatalog(std::string_view profile);
const std::vector<std::string>& catalogProfiles();

enum class ReportStatus { Pass, WeakPass, Fail };
std::string toString(ReportStatus status);

struct TheoremReport {
  TheoremId theorem;
  std::uint64_t total = 0;
  std::uint64_t skipped = 0;
  std::uint64_t checked = 0;
  std::uint64_t vacuous = 0;
  std::vector<nlohmann::json> violations;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return violations.empty(); }
  ReportStatus status() const;
};

TheoremReport verifyTheorem(TheoremId id, const Catalog& catalog);

struct SeparatingInstance {
  std::string ring;
  std::string module;
  std::string submodule;
};

struct SearchReport {
  std::string spaceDescription;
  std::vector<SeparatingInstance> found;
  bool exhausted = false;
  std::uint64_t pairsScanned = 0;
  /// Separating instances over the integers, each re-verified.
  std::vector<SeparatingInstance> integerFound;
};

SearchReport searchQuasiNotSemiprime(const Catalog& catalog);

nlohmann::json toJson(const TheoremReport& report, bool withTiming = true);
nlohmann::json toJson(const SearchReport& report);
/// Report document (schema "gqs-report/1") for already computed reports.
nlohmann::json reportsDocument(const Catalog& catalog, const std::vector<TheoremReport>& reports,
                               bool withTiming = true);
/// The "verify all" document: every theorem over the catalog.
nlohmann::json verifyAllJson(const Catalog& catalog, bool withTiming = true);
std::string formatReport(const TheoremReport& report, bool withTiming = true);

}  // namespace gqs
