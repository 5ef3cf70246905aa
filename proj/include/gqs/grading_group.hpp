#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gqs {

/// Index of an element of a grading group. Index 0 is always the identity.
using GroupElem = std::uint32_t;

/// Finite group given by its composition table.
class GradingGroup {
 public:
  /// Cyclic group Z_n, written additively: g * h = (g + h) mod n.
  static GradingGroup cyclic(std::uint32_t order);

  /// Validates associativity, that 0 is a two-sided identity, and inverses.
  /// Rejections carry the offending triple or element.
  static GradingGroup fromTable(std::uint32_t order, std::vector<GroupElem> table, std::string name = {});

  std::uint32_t order() const { return order_; }
  GroupElem identity() const { return 0; }
  bool contains(GroupElem g) const { return g < order_; }
  GroupElem compose(GroupElem a, GroupElem b) const { return table_[a * order_ + b]; }
  GroupElem inverse(GroupElem a) const { return inverse_[a]; }
  const std::string& name() const { return name_; }
  const std::vector<GroupElem>& table() const { return table_; }

  friend bool operator==(const GradingGroup& a, const GradingGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  GradingGroup() = default;

  std::uint32_t order_ = 0;
  std::vector<GroupElem> table_;
  std::vector<GroupElem> inverse_;
  std::string name_;
};

}  // namespace gqs
