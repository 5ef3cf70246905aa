#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gqs/graded_abelian.hpp"

namespace gqs {

/// Finite commutative unital ring R = (+) R_g graded by a finite group.
///
/// Immutable; construct through `create` or one of the named constructors,
/// all of which check every ring axiom and grading law exhaustively.
class FiniteGradedRing {
 public:
  static std::shared_ptr<const FiniteGradedRing> create(GradedAbelianGroup additive, std::vector<Elem> mul, Elem one,
                                                        std::string name = {});

  const GradedAbelianGroup& additive() const { return additive_; }
  const GradingGroup& group() const { return additive_.group(); }
  std::uint32_t order() const { return additive_.order(); }
  Elem zero() const { return additive_.zero(); }
  Elem one() const { return one_; }
  Elem add(Elem a, Elem b) const { return additive_.add(a, b); }
  Elem neg(Elem a) const { return additive_.neg(a); }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * order() + b]; }
  /// r^n for n >= 1.
  Elem pow(Elem r, std::uint64_t n) const;

  const ElementSet& component(GroupElem g) const { return additive_.component(g); }
  std::optional<GroupElem> degreeOf(Elem x) const { return additive_.degreeOf(x); }
  bool isHomogeneous(Elem x) const { return additive_.isHomogeneous(x); }
  const std::vector<Elem>& homogeneous() const { return additive_.homogeneous(); }

  const std::string& label(Elem x) const { return additive_.label(x); }
  std::string label(const ElementSet& s) const { return additive_.label(s); }
  const std::string& name() const { return name_; }

  /// When 1 generates the additive group, the k in [0, |R|) with k*1 = r.
  std::optional<std::uint32_t> integerValue(Elem r) const;
  bool isCyclic() const { return !integerOf_.empty(); }

 private:
  FiniteGradedRing(GradedAbelianGroup additive, std::vector<Elem> mul, Elem one, std::string name);

  GradedAbelianGroup additive_;
  std::vector<Elem> mul_;
  Elem one_;
  std::string name_;
  std::vector<std::uint32_t> integerOf_;
};

using RingPtr = std::shared_ptr<const FiniteGradedRing>;

/// Z_n with the trivial grading: R_e = Z_n, R_g = {0} otherwise.
RingPtr makeCyclicRing(std::uint32_t n, const GradingGroup& group);

/// Z_n[x]/(x^2 - c) with deg x = xdeg; requires xdeg * xdeg = e.
RingPtr makeQuotientPolyRing(std::uint32_t n, std::int64_t c, GroupElem xdeg, const GradingGroup& group);

struct HomogeneousElement {
  Elem value;
  GroupElem degree;

  friend auto operator<=>(const HomogeneousElement&, const HomogeneousElement&) = default;
};

/// h(R), one entry per element; zero is listed once with the identity degree.
std::vector<HomogeneousElement> homogeneousElements(const FiniteGradedRing& ring);

/// Exponent bound used by every "for some n" quantifier: |R|.
std::uint64_t exponentBound(const FiniteGradedRing& ring);

}  // namespace gqs
