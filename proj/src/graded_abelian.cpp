#include "gqs/graded_abelian.hpp"

#include "gqs/error.hpp"

namespace gqs {

Presentation indexPresentation(std::uint32_t order) {
  Presentation p;
  p.moduli = {static_cast<std::int64_t>(order)};
  p.fromRadix.resize(order);
  p.labels.resize(order);
  for (Elem x = 0; x < order; ++x) {
    p.fromRadix[x] = x;
    p.labels[x] = std::to_string(x);
  }
  return p;
}

GradedAbelianGroup::GradedAbelianGroup(GradingGroup group, std::uint32_t order, std::vector<Elem> add, Elem zero,
                                       std::vector<ElementSet> components, Presentation presentation)
    : group_(std::move(group)),
      order_(order),
      add_(std::move(add)),
      zero_(zero),
      components_(std::move(components)),
      presentation_(std::move(presentation)) {
  if (order_ == 0) throw Error(ErrorKind::InvalidArgument, "order must be positive");
  if (add_.size() != static_cast<std::size_t>(order_) * order_) {
    throw Error(ErrorKind::InvalidArgument, "addition table has wrong size");
  }
  if (zero_ >= order_) throw Error(ErrorKind::InvalidArgument, "zero index out of range");
  for (Elem v : add_) {
    if (v >= order_) throw Error(ErrorKind::InvalidArgument, "addition table entry out of range", std::to_string(v));
  }

  if (presentation_.labels.empty()) presentation_ = indexPresentation(order_);
  if (presentation_.labels.size() != order_) throw Error(ErrorKind::InvalidArgument, "label count mismatch");
  std::size_t radix = 1;
  for (auto m : presentation_.moduli) {
    if (m <= 0) throw Error(ErrorKind::InvalidArgument, "coordinate modulus must be positive");
    radix *= static_cast<std::size_t>(m);
  }
  if (presentation_.fromRadix.size() != radix) throw Error(ErrorKind::InvalidArgument, "presentation size mismatch");
  radixOf_.assign(order_, radix);
  for (std::size_t k = 0; k < radix; ++k) {
    Elem x = presentation_.fromRadix[k];
    if (x >= order_) throw Error(ErrorKind::InvalidArgument, "presentation entry out of range");
    if (radixOf_[x] == radix) radixOf_[x] = k;
  }
  for (Elem x = 0; x < order_; ++x) {
    if (radixOf_[x] == radix) throw Error(ErrorKind::InvalidArgument, "presentation misses an element", std::to_string(x));
  }

  auto lbl = [&](Elem x) { return presentation_.labels[x]; };

  for (Elem a = 0; a < order_; ++a) {
    if (this->add(zero_, a) != a) throw Error(ErrorKind::AxiomViolation, "zero is not an additive identity", "a=" + lbl(a));
    for (Elem b = 0; b < order_; ++b) {
      if (this->add(a, b) != this->add(b, a)) {
        throw Error(ErrorKind::AxiomViolation, "addition is not commutative", "a=" + lbl(a) + " b=" + lbl(b));
      }
      for (Elem c = 0; c < order_; ++c) {
        if (this->add(this->add(a, b), c) != this->add(a, this->add(b, c))) {
          throw Error(ErrorKind::AxiomViolation, "addition is not associative",
                      "a=" + lbl(a) + " b=" + lbl(b) + " c=" + lbl(c));
        }
      }
    }
  }
  neg_.assign(order_, order_);
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = 0; b < order_; ++b) {
      if (this->add(a, b) == zero_) {
        neg_[a] = b;
        break;
      }
    }
    if (neg_[a] == order_) throw Error(ErrorKind::AxiomViolation, "element has no additive inverse", "a=" + lbl(a));
  }

  const std::uint32_t gOrder = group_.order();
  if (components_.size() != gOrder) {
    throw Error(ErrorKind::GradingInconsistent, "need exactly one component per group element");
  }
  for (GroupElem g = 0; g < gOrder; ++g) {
    const ElementSet& comp = components_[g];
    if (comp.universe() != order_) throw Error(ErrorKind::InvalidArgument, "component universe mismatch");
    if (!comp.contains(zero_)) {
      throw Error(ErrorKind::GradingInconsistent, "component does not contain zero", "g=" + std::to_string(g));
    }
    for (Elem a : comp) {
      for (Elem b : comp) {
        if (!comp.contains(this->add(a, b))) {
          throw Error(ErrorKind::GradingInconsistent, "component is not an additive subgroup",
                      "g=" + std::to_string(g) + " a=" + lbl(a) + " b=" + lbl(b));
        }
      }
    }
  }

  // Internal direct sum: the summation map from the product of components
  // must be a bijection onto the whole group.
  std::size_t product = 1;
  for (const auto& comp : components_) {
    product *= comp.size();
    if (product > order_) break;
  }
  if (product != order_) {
    throw Error(ErrorKind::GradingInconsistent, "components do not form a direct sum (cardinality mismatch)");
  }
  decomposition_.assign(static_cast<std::size_t>(order_) * gOrder, order_);
  std::vector<std::size_t> digit(gOrder, 0);
  std::vector<bool> seen(order_, false);
  for (std::size_t step = 0; step < product; ++step) {
    Elem sum = zero_;
    for (GroupElem g = 0; g < gOrder; ++g) sum = this->add(sum, components_[g].elements()[digit[g]]);
    if (seen[sum]) {
      throw Error(ErrorKind::GradingInconsistent, "components do not form a direct sum", "element " + lbl(sum));
    }
    seen[sum] = true;
    for (GroupElem g = 0; g < gOrder; ++g) {
      decomposition_[static_cast<std::size_t>(sum) * gOrder + g] = components_[g].elements()[digit[g]];
    }
    for (GroupElem g = 0; g < gOrder; ++g) {
      if (++digit[g] < components_[g].size()) break;
      digit[g] = 0;
    }
  }

  degree_.assign(order_, kInhomogeneous);
  degree_[zero_] = group_.identity();
  for (GroupElem g = 0; g < gOrder; ++g) {
    for (Elem x : components_[g]) {
      if (x != zero_) degree_[x] = g;
    }
  }
  for (Elem x = 0; x < order_; ++x) {
    if (degree_[x] != kInhomogeneous) homogeneous_.push_back(x);
  }
}

Elem GradedAbelianGroup::multiple(std::uint64_t k, Elem x) const {
  Elem acc = zero_;
  Elem base = x;
  while (k > 0) {
    if (k & 1U) acc = add(acc, base);
    base = add(base, base);
    k >>= 1U;
  }
  return acc;
}

std::optional<GroupElem> GradedAbelianGroup::degreeOf(Elem x) const {
  if (degree_[x] == kInhomogeneous) return std::nullopt;
  return degree_[x];
}

std::string GradedAbelianGroup::label(const ElementSet& s) const {
  std::string out = "{";
  bool first = true;
  for (Elem x : s) {
    if (!first) out += ",";
    out += presentation_.labels[x];
    first = false;
  }
  out += "}";
  return out;
}

std::optional<Elem> GradedAbelianGroup::fromCoordinates(std::span<const std::int64_t> coords) const {
  if (coords.size() != presentation_.moduli.size()) return std::nullopt;
  std::size_t index = 0;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::int64_t m = presentation_.moduli[i];
    const std::int64_t r = ((coords[i] % m) + m) % m;
    index += static_cast<std::size_t>(r) * stride;
    stride *= static_cast<std::size_t>(m);
  }
  return presentation_.fromRadix[index];
}

std::vector<std::int64_t> GradedAbelianGroup::coordinates(Elem x) const {
  std::size_t k = radixOf_[x];
  std::vector<std::int64_t> out;
  out.reserve(presentation_.moduli.size());
  for (auto m : presentation_.moduli) {
    out.push_back(static_cast<std::int64_t>(k % static_cast<std::size_t>(m)));
    k /= static_cast<std::size_t>(m);
  }
  return out;
}

}  // namespace gqs
