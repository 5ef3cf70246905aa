#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gqs/hom.hpp"
#include "gqs/module.hpp"
#include "gqs/zmodule.hpp"

namespace gqs {

// Structure-definition documents (JSON, schema "gqs-structure/1").
//
//   {
//     "schema": "gqs-structure/1",
//     "group": {"kind": "cyclic", "order": 2},
//     "ring": {"kind": "cyclic", "n": 8}
//           | {"kind": "quotient_poly", "n": 2, "c": 1, "xdeg": 1}
//           | {"kind": "z"},
//     "module": {"kind": "ring_as_module"}
//             | {"kind": "product", "factors": [[2, 0], [2, 1]]}
//             | {"kind": "quotient", "base": <module>, "by": [[2]]}
//             | {"kind": "z_module", "free": 2, "torsion": [], "degrees": [0, 1]},
//     "submodules": {"N": [[4, 0]]},
//     "ideals": {"I": [[2]]},
//     "homs": {"p": {"kind": "projection", "kernel": "N"},
//              "f": {"kind": "table", "map": [[[1], [3]]]}},
//     "witnesses": {"N": {"r": 2, "m": [3, 0], "n": 2}}
//   }
//
// Elements are coordinate vectors: one entry per cyclic factor for product
// and integer modules, [a] or [a, b] (for a + b x) for ring elements.

inline constexpr std::string_view kStructureSchema = "gqs-structure/1";

struct GroupSpec {
  std::uint32_t order = 1;
};

struct RingSpec {
  std::string kind;
  std::uint32_t n = 0;
  std::int64_t c = 0;
  GroupElem xdeg = 0;
};

struct ModuleSpec {
  std::string kind;
  std::vector<CyclicFactor> factors;
  std::shared_ptr<ModuleSpec> base;
  std::vector<ZVector> by;
  std::uint32_t freeRank = 0;
  std::vector<std::int64_t> torsion;
  std::vector<GroupElem> degrees;
};

struct HomSpec {
  std::string kind;
  std::string kernel;
  std::vector<std::pair<ZVector, ZVector>> map;
};

struct WitnessSpec {
  std::int64_t r = 0;
  ZVector m;
  std::uint64_t n = 1;
};

struct StructureDocument {
  GroupSpec group;
  RingSpec ring;
  ModuleSpec module;
  std::map<std::string, std::vector<ZVector>> submodules;
  std::map<std::string, std::vector<ZVector>> ideals;
  std::map<std::string, HomSpec> homs;
  std::map<std::string, WitnessSpec> witnesses;
};

/// Parses and fully validates a document; every name is resolved and every
/// domain object is constructed once. Syntax errors carry "line L, column C";
/// unknown fields and bad values carry a JSON pointer to the offending node.
StructureDocument parseStructure(std::string_view text);
StructureDocument loadStructure(const std::string& path);

/// Canonical serialization (sorted keys, two-space indent, trailing newline).
std::string serialize(const StructureDocument& doc);
nlohmann::json toJson(const StructureDocument& doc);

/// Domain objects built from a document. Finite documents fill ring, module,
/// submodules, ideals and homs; integer documents fill zmodule, zsubmodules,
/// zideals and zwitnesses.
struct ResolvedStructure {
  GradingGroup group = GradingGroup::cyclic(1);
  RingPtr ring;
  ModulePtr module;
  std::map<std::string, GradedSubmodule> submodules;
  std::map<std::string, GradedIdeal> ideals;
  std::map<std::string, GradedHomomorphism> homs;

  ZModulePtr zmodule;
  std::map<std::string, ZSubmodule> zsubmodules;
  std::map<std::string, ZIdeal> zideals;
  std::map<std::string, ZPowerWitness> zwitnesses;

  bool isInteger() const { return zmodule != nullptr; }
};

ResolvedStructure resolve(const StructureDocument& doc);

}  // namespace gqs
