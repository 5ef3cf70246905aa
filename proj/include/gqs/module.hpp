#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gqs/ideal.hpp"
#include "gqs/ring.hpp"

namespace gqs {

/// Finite graded module M = (+) M_g over a finite graded ring.
class GradedModule {
 public:
  /// Checks the unital module axioms and R_g M_h in M_gh exhaustively.
  /// `action` is indexed [r * |M| + x].
  static std::shared_ptr<const GradedModule> create(RingPtr ring, GradedAbelianGroup additive,
                                                    std::vector<Elem> action, std::string name = {});

  const RingPtr& ring() const { return ring_; }
  const GradedAbelianGroup& additive() const { return additive_; }
  const GradingGroup& group() const { return additive_.group(); }
  std::uint32_t order() const { return additive_.order(); }
  Elem zero() const { return additive_.zero(); }
  Elem add(Elem a, Elem b) const { return additive_.add(a, b); }
  Elem neg(Elem a) const { return additive_.neg(a); }
  Elem act(Elem r, Elem x) const { return action_[static_cast<std::size_t>(r) * order() + x]; }

  const ElementSet& component(GroupElem g) const { return additive_.component(g); }
  std::optional<GroupElem> degreeOf(Elem x) const { return additive_.degreeOf(x); }
  bool isHomogeneous(Elem x) const { return additive_.isHomogeneous(x); }
  const std::vector<Elem>& homogeneous() const { return additive_.homogeneous(); }

  const std::string& label(Elem x) const { return additive_.label(x); }
  std::string label(const ElementSet& s) const { return additive_.label(s); }
  const std::string& name() const { return name_; }

 private:
  GradedModule(RingPtr ring, GradedAbelianGroup additive, std::vector<Elem> action, std::string name);

  RingPtr ring_;
  GradedAbelianGroup additive_;
  std::vector<Elem> action_;
  std::string name_;
};

using ModulePtr = std::shared_ptr<const GradedModule>;

class GradedSubmodule {
 public:
  /// Validates: additive subgroup, closed under the action, graded.
  static GradedSubmodule fromElements(ModulePtr module, ElementSet elements);

  const ModulePtr& module() const { return module_; }
  const ElementSet& elements() const { return elements_; }
  /// Generators this submodule was built from, if any; reporting only.
  const std::vector<Elem>& generators() const { return generators_; }
  bool contains(Elem x) const { return elements_.contains(x); }
  std::size_t size() const { return elements_.size(); }
  bool isProper() const { return elements_.size() < module_->order(); }
  bool isZero() const { return elements_.size() == 1; }
  bool isSubsetOf(const GradedSubmodule& other) const { return elements_.isSubsetOf(other.elements_); }
  std::string toString() const { return module_->label(elements_); }

  friend bool operator==(const GradedSubmodule& a, const GradedSubmodule& b) {
    return a.module_ == b.module_ && a.elements_ == b.elements_;
  }

 private:
  GradedSubmodule(ModulePtr module, ElementSet elements, std::vector<Elem> generators)
      : module_(std::move(module)), elements_(std::move(elements)), generators_(std::move(generators)) {}
  friend GradedSubmodule submoduleClosure(const ModulePtr& module, std::span<const Elem> gens);

  ModulePtr module_;
  ElementSet elements_;
  std::vector<Elem> generators_;
};

/// R as a module over itself, M_g = R_g.
ModulePtr ringAsModule(const RingPtr& ring);

struct CyclicFactor {
  std::uint32_t order;
  GroupElem degree;
};

/// Z_{n_1} x ... x Z_{n_k} with factor i placed in degree g_i, over a ring
/// whose additive group is generated by 1 (r acts through its integer value).
/// Incompatible orders are rejected by the axiom check with a witness.
ModulePtr productModule(std::span<const CyclicFactor> factors, const RingPtr& ring);

/// Smallest submodule containing `gens`; throws NotGraded if it is not graded.
GradedSubmodule submoduleClosure(const ModulePtr& module, std::span<const Elem> gens);

/// Every graded submodule once, canonical order; includes {0} and M.
std::vector<GradedSubmodule> enumerateGradedSubmodules(const ModulePtr& module);

/// (N :_R M) = { r : r M in N }.
GradedIdeal colonIdeal(const GradedSubmodule& submodule);
/// Ann_R(K) = { r : r K = 0 }.
GradedIdeal annihilator(const GradedSubmodule& submodule);
/// I M, the submodule generated by { r x : r in I, x in M }.
GradedSubmodule idealTimesModule(const GradedIdeal& ideal, const ModulePtr& module);
GradedSubmodule intersect(const GradedSubmodule& a, const GradedSubmodule& b);
GradedSubmodule submoduleSum(const GradedSubmodule& a, const GradedSubmodule& b);
GradedSubmodule wholeModule(const ModulePtr& module);
GradedSubmodule zeroSubmodule(const ModulePtr& module);

struct QuotientModule {
  ModulePtr module;
  /// projection[x] is the coset of x.
  std::vector<Elem> projection;
};

/// M/K graded by (M/K)_g = (M_g + K)/K. Cosets are indexed in order of
/// their smallest member.
QuotientModule quotientModule(const ModulePtr& module, const GradedSubmodule& kernel);

}  // namespace gqs
