#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gqs/element_set.hpp"
#include "gqs/ring.hpp"

namespace gqs {

/// Result of a decision procedure, with a certificate when it fails.
/// A missing witness on a false verdict means the object was improper.
template <class Witness>
struct Verdict {
  bool holds = false;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }
};

/// (r, x, n) with r^n x inside and r x outside the object under test.
struct PowerWitness {
  Elem r;
  Elem x;
  std::uint64_t n;

  friend bool operator==(const PowerWitness&, const PowerWitness&) = default;
};

/// (r, s) with r s inside and the conclusion failing for both.
struct PairWitness {
  Elem r;
  Elem s;

  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

class GradedIdeal {
 public:
  /// Validates that `elements` is an additive subgroup absorbing R whose
  /// members' homogeneous components all lie in it.
  static GradedIdeal fromElements(RingPtr ring, ElementSet elements);

  const RingPtr& ring() const { return ring_; }
  const ElementSet& elements() const { return elements_; }
  bool contains(Elem x) const { return elements_.contains(x); }
  std::size_t size() const { return elements_.size(); }
  bool isProper() const { return elements_.size() < ring_->order(); }
  bool isSubsetOf(const GradedIdeal& other) const { return elements_.isSubsetOf(other.elements_); }
  std::string toString() const { return ring_->label(elements_); }

  friend bool operator==(const GradedIdeal& a, const GradedIdeal& b) {
    return a.ring_ == b.ring_ && a.elements_ == b.elements_;
  }

 private:
  GradedIdeal(RingPtr ring, ElementSet elements) : ring_(std::move(ring)), elements_(std::move(elements)) {}
  friend GradedIdeal idealClosure(const RingPtr& ring, std::span<const Elem> gens);

  RingPtr ring_;
  ElementSet elements_;
};

/// Smallest ideal containing `gens`; throws NotGraded (with a witness) if it
/// is not graded.
GradedIdeal idealClosure(const RingPtr& ring, std::span<const Elem> gens);

/// Every graded ideal once, in canonical order.
std::vector<GradedIdeal> enumerateGradedIdeals(const RingPtr& ring);

GradedIdeal idealSum(const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal idealProduct(const GradedIdeal& a, const GradedIdeal& b);
/// I^k for k >= 1.
GradedIdeal idealPower(const GradedIdeal& ideal, unsigned k);
/// Smallest k with I^(k+1) = I^k.
unsigned powerStabilizationIndex(const GradedIdeal& ideal);

// Exponent bounds of 0 mean exponentBound(R).

Verdict<PowerWitness> checkGradedSemiprimeIdeal(const GradedIdeal& ideal, std::uint64_t bound = 0);
bool isGradedSemiprimeIdeal(const GradedIdeal& ideal, std::uint64_t bound = 0);

Verdict<PairWitness> checkGradedPrimeIdeal(const GradedIdeal& ideal);
bool isGradedPrimeIdeal(const GradedIdeal& ideal);

Verdict<PairWitness> checkGradedPrimaryIdeal(const GradedIdeal& ideal, std::uint64_t bound = 0);
bool isGradedPrimaryIdeal(const GradedIdeal& ideal, std::uint64_t bound = 0);

/// On failure for a proper ideal the witness is an intermediate graded ideal.
Verdict<GradedIdeal> checkGradedMaximalIdeal(const GradedIdeal& ideal);
bool isGradedMaximalIdeal(const GradedIdeal& ideal);

/// Gr(I): ideal generated by homogeneous r with some power r^n in I.
GradedIdeal gradedRadical(const GradedIdeal& ideal, std::uint64_t bound = 0);

}  // namespace gqs
