#pragma once

#include <map>
#include <optional>

#include "gqs/ideal.hpp"
#include "gqs/module.hpp"

namespace gqs {

// Submodule- and module-level predicates. Every quantifier over r and m
// ranges over homogeneous elements; "for some n" is bounded by |R|.
// Witnesses are the first counterexample in (r, m, n) index order.

Verdict<PowerWitness> checkGradedSemiprimeSubmodule(const GradedSubmodule& submodule, std::uint64_t bound = 0);
bool isGradedSemiprimeSubmodule(const GradedSubmodule& submodule, std::uint64_t bound = 0);

/// N proper and (N :_R M) a graded semiprime ideal. The witness, when
/// present, certifies that the colon ideal is not semiprime.
Verdict<PowerWitness> checkGradedQuasiSemiprimeSubmodule(const GradedSubmodule& submodule);
bool isGradedQuasiSemiprimeSubmodule(const GradedSubmodule& submodule);

/// N = (N :_R M) M for every graded N; the witness is the first N that fails.
Verdict<GradedSubmodule> checkGradedMultiplicationModule(const ModulePtr& module);
bool isGradedMultiplicationModule(const ModulePtr& module);

struct IdealPowerWitness {
  GradedIdeal ideal;
  unsigned k;
};

/// For every graded I and k up to the stabilization index of I^k:
/// I^k M in N implies I M in N.
Verdict<IdealPowerWitness> checkIdealPowerCriterion(const GradedSubmodule& submodule);
bool idealPowerCriterion(const GradedSubmodule& submodule);

struct EnvelopeResult {
  /// GE_M(N) = { r m : r, m homogeneous, r^n m in N for some n }.
  ElementSet generatorSet;
  /// RGE_M(N), the submodule generated by GE_M(N).
  GradedSubmodule submodule;
  /// First (r, m, n) in index order certifying each member of the generator set.
  std::map<Elem, PowerWitness> witnesses;
};

EnvelopeResult gradedEnvelope(const GradedSubmodule& submodule, std::uint64_t bound = 0);

/// {0} is a graded semiprime submodule. Throws InvalidArgument on the zero module.
Verdict<PowerWitness> checkGradedSemiprimeModule(const ModulePtr& module);
bool isGradedSemiprimeModule(const ModulePtr& module);

/// Ann_R(N) is graded semiprime for every nonzero graded N; the witness is
/// the first offending N. Throws InvalidArgument on the zero module.
Verdict<GradedSubmodule> checkGradedQuasiSemiprimeModule(const ModulePtr& module);
bool isGradedQuasiSemiprimeModule(const ModulePtr& module);

}  // namespace gqs
