#include "gqs/element_set.hpp"

#include <algorithm>

#include "gqs/error.hpp"

namespace gqs {

ElementSet ElementSet::fromMask(std::vector<bool> mask) {
  ElementSet out;
  out.mask_ = std::move(mask);
  for (std::size_t i = 0; i < out.mask_.size(); ++i) {
    if (out.mask_[i]) out.members_.push_back(static_cast<Elem>(i));
  }
  return out;
}

ElementSet ElementSet::fromElements(std::size_t universe, std::span<const Elem> elements) {
  ElementSet out(universe);
  for (Elem x : elements) {
    if (x >= universe) {
      throw Error(ErrorKind::InvalidArgument, "element index out of range", std::to_string(x));
    }
    out.mask_[x] = true;
  }
  for (std::size_t i = 0; i < universe; ++i) {
    if (out.mask_[i]) out.members_.push_back(static_cast<Elem>(i));
  }
  return out;
}

ElementSet ElementSet::all(std::size_t universe) {
  return fromMask(std::vector<bool>(universe, true));
}

void ElementSet::insert(Elem x) {
  if (x >= mask_.size()) {
    throw Error(ErrorKind::InvalidArgument, "element index out of range", std::to_string(x));
  }
  if (mask_[x]) return;
  mask_[x] = true;
  members_.insert(std::lower_bound(members_.begin(), members_.end(), x), x);
}

bool ElementSet::isSubsetOf(const ElementSet& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Elem x) { return other.contains(x); });
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet out(mask_.size());
  for (Elem x : members_) {
    if (other.contains(x)) {
      out.mask_[x] = true;
      out.members_.push_back(x);
    }
  }
  return out;
}

bool canonicalLess(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements() < b.elements();
}

}  // namespace gqs
