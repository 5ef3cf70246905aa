#include "gqs/grading_group.hpp"

#include "gqs/error.hpp"

namespace gqs {

GradingGroup GradingGroup::cyclic(std::uint32_t order) {
  if (order == 0) throw Error(ErrorKind::InvalidArgument, "group order must be positive");
  std::vector<GroupElem> table(static_cast<std::size_t>(order) * order);
  for (GroupElem a = 0; a < order; ++a) {
    for (GroupElem b = 0; b < order; ++b) table[a * order + b] = (a + b) % order;
  }
  return fromTable(order, std::move(table), "Z" + std::to_string(order));
}

GradingGroup GradingGroup::fromTable(std::uint32_t order, std::vector<GroupElem> table, std::string name) {
  if (order == 0) throw Error(ErrorKind::InvalidArgument, "group order must be positive");
  if (table.size() != static_cast<std::size_t>(order) * order) {
    throw Error(ErrorKind::InvalidArgument, "group table has wrong size");
  }
  for (GroupElem v : table) {
    if (v >= order) throw Error(ErrorKind::InvalidArgument, "group table entry out of range", std::to_string(v));
  }

  GradingGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.name_ = name.empty() ? "G" + std::to_string(order) : std::move(name);

  for (GroupElem a = 0; a < order; ++a) {
    if (g.compose(0, a) != a || g.compose(a, 0) != a) {
      throw Error(ErrorKind::AxiomViolation, "element 0 is not a two-sided identity", "g=" + std::to_string(a));
    }
  }
  for (GroupElem a = 0; a < order; ++a) {
    for (GroupElem b = 0; b < order; ++b) {
      for (GroupElem c = 0; c < order; ++c) {
        if (g.compose(g.compose(a, b), c) != g.compose(a, g.compose(b, c))) {
          throw Error(ErrorKind::AxiomViolation, "group operation is not associative",
                      "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c));
        }
      }
    }
  }
  g.inverse_.assign(order, order);
  for (GroupElem a = 0; a < order; ++a) {
    for (GroupElem b = 0; b < order; ++b) {
      if (g.compose(a, b) == 0 && g.compose(b, a) == 0) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] == order) {
      throw Error(ErrorKind::AxiomViolation, "element has no inverse", "g=" + std::to_string(a));
    }
  }
  return g;
}

}  // namespace gqs
