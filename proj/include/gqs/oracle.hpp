#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "gqs/ideal.hpp"
#include "gqs/module.hpp"

namespace gqs {

enum class PredicateId {
  SemiprimeIdeal,
  PrimeIdeal,
  PrimaryIdeal,
  MaximalIdeal,
  SemiprimeSubmodule,
  QuasiSemiprimeSubmodule,
  IdealPowerCriterion,
  EnvelopeFixed,
  MultiplicationModule,
  SemiprimeModule,
  QuasiSemiprimeModule,
};

std::string toString(PredicateId id);
std::optional<PredicateId> parsePredicateId(std::string_view name);
const std::vector<PredicateId>& allPredicates();

using OracleInstance = std::variant<GradedIdeal, GradedSubmodule, ModulePtr>;

/// Whether the instance has the shape the predicate expects (ideal,
/// submodule or module).
bool acceptsInstance(PredicateId id, const OracleInstance& instance);

/// Largest structures the naive oracle will evaluate.
inline constexpr std::uint32_t kOracleMaxRing = 8;
inline constexpr std::uint32_t kOracleMaxModule = 16;

/// Evaluates the predicate straight from its definition: brute-force subset
/// filters for ideals and submodules, exponent bound 2|R|, and the
/// existential form of the multiplication-module test. Shares no decision
/// code with the optimized predicates. Throws Unsupported above the size
/// bounds and InvalidArgument on a shape mismatch.
bool naiveOracle(PredicateId id, const OracleInstance& instance);

/// The optimized predicate for the same id.
bool optimizedVerdict(PredicateId id, const OracleInstance& instance);

/// Brute-force subset filters, exposed for ground-truth tests.
std::vector<ElementSet> bruteForceGradedIdeals(const FiniteGradedRing& ring);
std::vector<ElementSet> bruteForceGradedSubmodules(const GradedModule& module);

}  // namespace gqs
