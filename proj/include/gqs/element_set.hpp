#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gqs {

/// Index of an element of a finite ring or module.
using Elem = std::uint32_t;

/// Subset of a finite universe {0, ..., n-1}: sorted member list plus a
/// membership mask, so both iteration order and lookups are cheap.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : mask_(universe, false) {}

  static ElementSet fromMask(std::vector<bool> mask);
  static ElementSet fromElements(std::size_t universe, std::span<const Elem> elements);
  static ElementSet all(std::size_t universe);

  bool contains(Elem x) const { return x < mask_.size() && mask_[x]; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::size_t universe() const { return mask_.size(); }
  const std::vector<Elem>& elements() const { return members_; }
  const std::vector<bool>& mask() const { return mask_; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  void insert(Elem x);

  bool isSubsetOf(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.mask_ == b.mask_; }

 private:
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

/// Canonical enumeration order: cardinality, then lexicographic on the
/// sorted member list.
bool canonicalLess(const ElementSet& a, const ElementSet& b);

}  // namespace gqs
