#include "gqs/predicates.hpp"

#include "gqs/error.hpp"

namespace gqs {

Verdict<PowerWitness> checkGradedSemiprimeSubmodule(const GradedSubmodule& submodule, std::uint64_t bound) {
  if (!submodule.isProper()) return {};
  const auto& M = *submodule.module();
  const auto& R = *M.ring();
  if (bound == 0) bound = exponentBound(R);
  for (Elem r : R.homogeneous()) {
    for (Elem m : M.homogeneous()) {
      const Elem rm = M.act(r, m);
      if (submodule.contains(rm)) continue;
      Elem v = rm;
      for (std::uint64_t n = 2; n <= bound; ++n) {
        v = M.act(r, v);
        if (submodule.contains(v)) return {false, PowerWitness{r, m, n}};
      }
    }
  }
  return {true, std::nullopt};
}

bool isGradedSemiprimeSubmodule(const GradedSubmodule& submodule, std::uint64_t bound) {
  return checkGradedSemiprimeSubmodule(submodule, bound).holds;
}

Verdict<PowerWitness> checkGradedQuasiSemiprimeSubmodule(const GradedSubmodule& submodule) {
  if (!submodule.isProper()) return {};
  const GradedIdeal colon = colonIdeal(submodule);
  if (!colon.isProper()) {
    throw std::logic_error("colon ideal of a proper submodule contains 1");
  }
  return checkGradedSemiprimeIdeal(colon);
}

bool isGradedQuasiSemiprimeSubmodule(const GradedSubmodule& submodule) {
  return checkGradedQuasiSemiprimeSubmodule(submodule).holds;
}

Verdict<GradedSubmodule> checkGradedMultiplicationModule(const ModulePtr& module) {
  for (const auto& n : enumerateGradedSubmodules(module)) {
    if (!(idealTimesModule(colonIdeal(n), module) == n)) return {false, n};
  }
  return {true, std::nullopt};
}

bool isGradedMultiplicationModule(const ModulePtr& module) { return checkGradedMultiplicationModule(module).holds; }

Verdict<IdealPowerWitness> checkIdealPowerCriterion(const GradedSubmodule& submodule) {
  const auto& module = submodule.module();
  for (const auto& ideal : enumerateGradedIdeals(module->ring())) {
    if (idealTimesModule(ideal, module).isSubsetOf(submodule)) continue;
    // I M is not inside N, so any k with I^k M inside N is a counterexample.
    GradedIdeal power = ideal;
    for (unsigned k = 1;; ++k) {
      if (idealTimesModule(power, module).isSubsetOf(submodule)) return {false, IdealPowerWitness{ideal, k}};
      GradedIdeal next = idealProduct(power, ideal);
      if (next == power) break;
      power = std::move(next);
    }
  }
  return {true, std::nullopt};
}

bool idealPowerCriterion(const GradedSubmodule& submodule) { return checkIdealPowerCriterion(submodule).holds; }

EnvelopeResult gradedEnvelope(const GradedSubmodule& submodule, std::uint64_t bound) {
  const auto& module = submodule.module();
  const auto& M = *module;
  const auto& R = *M.ring();
  if (bound == 0) bound = exponentBound(R);
  ElementSet generators(M.order());
  std::map<Elem, PowerWitness> witnesses;
  for (Elem r : R.homogeneous()) {
    for (Elem m : M.homogeneous()) {
      const Elem rm = M.act(r, m);
      if (generators.contains(rm)) continue;
      Elem v = rm;
      for (std::uint64_t n = 1; n <= bound; ++n) {
        if (submodule.contains(v)) {
          generators.insert(rm);
          witnesses.emplace(rm, PowerWitness{r, m, n});
          break;
        }
        v = M.act(r, v);
      }
    }
  }
  GradedSubmodule closure = submoduleClosure(module, generators.elements());
  return {std::move(generators), std::move(closure), std::move(witnesses)};
}

Verdict<PowerWitness> checkGradedSemiprimeModule(const ModulePtr& module) {
  if (module->order() == 1) throw Error(ErrorKind::InvalidArgument, "zero module: {0} is not a proper submodule");
  return checkGradedSemiprimeSubmodule(zeroSubmodule(module));
}

bool isGradedSemiprimeModule(const ModulePtr& module) { return checkGradedSemiprimeModule(module).holds; }

Verdict<GradedSubmodule> checkGradedQuasiSemiprimeModule(const ModulePtr& module) {
  if (module->order() == 1) throw Error(ErrorKind::InvalidArgument, "zero module has no nonzero submodules");
  for (const auto& n : enumerateGradedSubmodules(module)) {
    if (n.isZero()) continue;
    if (!isGradedSemiprimeIdeal(annihilator(n))) return {false, n};
  }
  return {true, std::nullopt};
}

bool isGradedQuasiSemiprimeModule(const ModulePtr& module) { return checkGradedQuasiSemiprimeModule(module).holds; }

}  // namespace gqs
