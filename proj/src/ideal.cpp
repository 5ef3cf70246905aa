#include "gqs/ideal.hpp"

#include <algorithm>
#include <map>

#include "gqs/detail/closure.hpp"
#include "gqs/error.hpp"

namespace gqs {

namespace {

std::vector<bool> idealMask(const FiniteGradedRing& R, std::span<const Elem> gens) {
  return detail::closeUnder(
      R.order(), R.zero(), gens, R.order(), [&](Elem a, Elem b) { return R.add(a, b); },
      [&](Elem r, Elem x) { return R.mul(r, x); });
}

std::uint64_t resolveBound(const FiniteGradedRing& R, std::uint64_t bound) {
  return bound == 0 ? exponentBound(R) : bound;
}

}  // namespace

GradedIdeal GradedIdeal::fromElements(RingPtr ring, ElementSet elements) {
  if (!ring) throw Error(ErrorKind::InvalidArgument, "null ring");
  const auto& R = *ring;
  if (elements.universe() != R.order()) throw Error(ErrorKind::InvalidArgument, "ideal universe does not match ring");
  if (!elements.contains(R.zero())) throw Error(ErrorKind::AxiomViolation, "ideal must contain zero");
  for (Elem a : elements) {
    for (Elem b : elements) {
      if (!elements.contains(R.add(a, b))) {
        throw Error(ErrorKind::AxiomViolation, "not closed under addition", "a=" + R.label(a) + " b=" + R.label(b));
      }
    }
    for (Elem r = 0; r < R.order(); ++r) {
      if (!elements.contains(R.mul(r, a))) {
        throw Error(ErrorKind::AxiomViolation, "does not absorb multiplication", "r=" + R.label(r) + " a=" + R.label(a));
      }
    }
  }
  if (auto w = detail::gradedWitness(R.additive(), elements)) {
    throw Error(ErrorKind::NotGraded, "ideal is not graded", R.label(*w));
  }
  return GradedIdeal(std::move(ring), std::move(elements));
}

GradedIdeal idealClosure(const RingPtr& ring, std::span<const Elem> gens) {
  if (!ring) throw Error(ErrorKind::InvalidArgument, "null ring");
  for (Elem g : gens) {
    if (g >= ring->order()) throw Error(ErrorKind::InvalidArgument, "generator out of range", std::to_string(g));
  }
  ElementSet set = ElementSet::fromMask(idealMask(*ring, gens));
  if (auto w = detail::gradedWitness(ring->additive(), set)) {
    throw Error(ErrorKind::NotGraded, "generated ideal is not graded", ring->label(*w));
  }
  return GradedIdeal(ring, std::move(set));
}

std::vector<GradedIdeal> enumerateGradedIdeals(const RingPtr& ring) {
  // A graded ideal is generated by its homogeneous members, so adjoining one
  // homogeneous element at a time from {0} reaches all of them.
  std::map<std::vector<Elem>, GradedIdeal> found;
  std::vector<GradedIdeal> frontier{idealClosure(ring, {})};
  found.emplace(frontier.front().elements().elements(), frontier.front());
  while (!frontier.empty()) {
    std::vector<GradedIdeal> next;
    for (const auto& ideal : frontier) {
      for (Elem h : ring->homogeneous()) {
        if (ideal.contains(h)) continue;
        std::vector<Elem> gens = ideal.elements().elements();
        gens.push_back(h);
        GradedIdeal bigger = idealClosure(ring, gens);
        if (found.emplace(bigger.elements().elements(), bigger).second) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  std::vector<GradedIdeal> out;
  out.reserve(found.size());
  for (auto& [key, ideal] : found) out.push_back(std::move(ideal));
  std::sort(out.begin(), out.end(),
            [](const GradedIdeal& a, const GradedIdeal& b) { return canonicalLess(a.elements(), b.elements()); });
  return out;
}

GradedIdeal idealSum(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.ring() != b.ring()) throw Error(ErrorKind::InvalidArgument, "ideals over different rings");
  std::vector<Elem> gens = a.elements().elements();
  gens.insert(gens.end(), b.elements().begin(), b.elements().end());
  return idealClosure(a.ring(), gens);
}

GradedIdeal idealProduct(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.ring() != b.ring()) throw Error(ErrorKind::InvalidArgument, "ideals over different rings");
  const auto& R = *a.ring();
  std::vector<bool> products(R.order(), false);
  for (Elem x : a.elements()) {
    for (Elem y : b.elements()) products[R.mul(x, y)] = true;
  }
  std::vector<Elem> gens = ElementSet::fromMask(std::move(products)).elements();
  return idealClosure(a.ring(), gens);
}

GradedIdeal idealPower(const GradedIdeal& ideal, unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "ideal power exponent must be >= 1");
  GradedIdeal acc = ideal;
  for (unsigned i = 1; i < k; ++i) {
    GradedIdeal next = idealProduct(acc, ideal);
    if (next == acc) break;
    acc = std::move(next);
  }
  return acc;
}

unsigned powerStabilizationIndex(const GradedIdeal& ideal) {
  unsigned k = 1;
  GradedIdeal acc = ideal;
  while (true) {
    GradedIdeal next = idealProduct(acc, ideal);
    if (next == acc) return k;
    acc = std::move(next);
    ++k;
  }
}

Verdict<PowerWitness> checkGradedSemiprimeIdeal(const GradedIdeal& ideal, std::uint64_t bound) {
  if (!ideal.isProper()) return {};
  const auto& R = *ideal.ring();
  bound = resolveBound(R, bound);
  for (Elem r : R.homogeneous()) {
    for (Elem s : R.homogeneous()) {
      Elem rs = R.mul(r, s);
      if (ideal.contains(rs)) continue;
      Elem v = rs;
      for (std::uint64_t n = 2; n <= bound; ++n) {
        v = R.mul(r, v);
        if (ideal.contains(v)) return {false, PowerWitness{r, s, n}};
      }
    }
  }
  return {true, std::nullopt};
}

bool isGradedSemiprimeIdeal(const GradedIdeal& ideal, std::uint64_t bound) {
  return checkGradedSemiprimeIdeal(ideal, bound).holds;
}

Verdict<PairWitness> checkGradedPrimeIdeal(const GradedIdeal& ideal) {
  if (!ideal.isProper()) return {};
  const auto& R = *ideal.ring();
  for (Elem r : R.homogeneous()) {
    if (ideal.contains(r)) continue;
    for (Elem s : R.homogeneous()) {
      if (!ideal.contains(s) && ideal.contains(R.mul(r, s))) return {false, PairWitness{r, s}};
    }
  }
  return {true, std::nullopt};
}

bool isGradedPrimeIdeal(const GradedIdeal& ideal) { return checkGradedPrimeIdeal(ideal).holds; }

Verdict<PairWitness> checkGradedPrimaryIdeal(const GradedIdeal& ideal, std::uint64_t bound) {
  if (!ideal.isProper()) return {};
  const auto& R = *ideal.ring();
  bound = resolveBound(R, bound);
  std::vector<bool> nilpotentModulo(R.order(), false);
  for (Elem s : R.homogeneous()) {
    Elem v = s;
    for (std::uint64_t n = 1; n <= bound; ++n) {
      if (ideal.contains(v)) {
        nilpotentModulo[s] = true;
        break;
      }
      v = R.mul(v, s);
    }
  }
  for (Elem r : R.homogeneous()) {
    if (ideal.contains(r)) continue;
    for (Elem s : R.homogeneous()) {
      if (!nilpotentModulo[s] && ideal.contains(R.mul(r, s))) return {false, PairWitness{r, s}};
    }
  }
  return {true, std::nullopt};
}

bool isGradedPrimaryIdeal(const GradedIdeal& ideal, std::uint64_t bound) {
  return checkGradedPrimaryIdeal(ideal, bound).holds;
}

Verdict<GradedIdeal> checkGradedMaximalIdeal(const GradedIdeal& ideal) {
  if (!ideal.isProper()) return {};
  for (const auto& other : enumerateGradedIdeals(ideal.ring())) {
    if (other.isProper() && other.size() > ideal.size() && ideal.isSubsetOf(other)) return {false, other};
  }
  return {true, std::nullopt};
}

bool isGradedMaximalIdeal(const GradedIdeal& ideal) { return checkGradedMaximalIdeal(ideal).holds; }

GradedIdeal gradedRadical(const GradedIdeal& ideal, std::uint64_t bound) {
  const auto& R = *ideal.ring();
  bound = resolveBound(R, bound);
  std::vector<Elem> gens;
  for (Elem r : R.homogeneous()) {
    Elem v = r;
    for (std::uint64_t n = 1; n <= bound; ++n) {
      if (ideal.contains(v)) {
        gens.push_back(r);
        break;
      }
      v = R.mul(v, r);
    }
  }
  return idealClosure(ideal.ring(), gens);
}

}  // namespace gqs
