#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gqs/element_set.hpp"
#include "gqs/grading_group.hpp"

namespace gqs {

/// How elements are written and read back: a mixed-radix coordinate system
/// with one modulus per coordinate, plus a display label per element.
///
/// `fromRadix[k]` is the element whose coordinates have mixed-radix index k.
/// For quotient structures several radix indices map to the same element.
struct Presentation {
  std::vector<std::int64_t> moduli;
  std::vector<Elem> fromRadix;
  std::vector<std::string> labels;
};

/// Finite abelian group together with a decomposition into subgroups
/// indexed by a grading group, checked to be an internal direct sum.
///
/// Shared carrier for graded rings and graded modules.
class GradedAbelianGroup {
 public:
  GradedAbelianGroup(GradingGroup group, std::uint32_t order, std::vector<Elem> add, Elem zero,
                     std::vector<ElementSet> components, Presentation presentation = {});

  const GradingGroup& group() const { return group_; }
  std::uint32_t order() const { return order_; }
  Elem zero() const { return zero_; }
  Elem add(Elem a, Elem b) const { return add_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  /// k-fold sum x + ... + x.
  Elem multiple(std::uint64_t k, Elem x) const;

  const ElementSet& component(GroupElem g) const { return components_[g]; }
  /// Homogeneous component of x in degree g.
  Elem componentOf(Elem x, GroupElem g) const { return decomposition_[static_cast<std::size_t>(x) * group_.order() + g]; }
  /// Degree of a homogeneous element; zero reports the identity degree.
  std::optional<GroupElem> degreeOf(Elem x) const;
  bool isHomogeneous(Elem x) const { return degree_[x] != kInhomogeneous; }
  /// h(-): union of all components, ascending.
  const std::vector<Elem>& homogeneous() const { return homogeneous_; }

  const std::vector<Elem>& addTable() const { return add_; }
  const Presentation& presentation() const { return presentation_; }
  const std::string& label(Elem x) const { return presentation_.labels[x]; }
  std::string label(const ElementSet& s) const;
  /// Reduces each coordinate modulo its modulus; nullopt on arity mismatch.
  std::optional<Elem> fromCoordinates(std::span<const std::int64_t> coords) const;
  /// Coordinates of the element (of its smallest radix representative for quotients).
  std::vector<std::int64_t> coordinates(Elem x) const;

 private:
  static constexpr GroupElem kInhomogeneous = ~GroupElem{0};

  GradingGroup group_;
  std::uint32_t order_;
  std::vector<Elem> add_;
  std::vector<Elem> neg_;
  Elem zero_;
  std::vector<ElementSet> components_;
  std::vector<Elem> decomposition_;
  std::vector<GroupElem> degree_;
  std::vector<Elem> homogeneous_;
  Presentation presentation_;
  std::vector<std::size_t> radixOf_;
};

/// Default presentation: one coordinate equal to the element index.
Presentation indexPresentation(std::uint32_t order);

}  // namespace gqs
