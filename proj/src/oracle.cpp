#include "gqs/oracle.hpp"

#include <array>
#include <functional>

#include "gqs/error.hpp"
#include "gqs/predicates.hpp"

namespace gqs {

namespace {

struct PredicateName {
  PredicateId id;
  std::string_view name;
};

constexpr std::array kPredicateNames{
    PredicateName{PredicateId::SemiprimeIdeal, "semiprime-ideal"},
    PredicateName{PredicateId::PrimeIdeal, "prime-ideal"},
    PredicateName{PredicateId::PrimaryIdeal, "primary-ideal"},
    PredicateName{PredicateId::MaximalIdeal, "maximal-ideal"},
    PredicateName{PredicateId::SemiprimeSubmodule, "semiprime"},
    PredicateName{PredicateId::QuasiSemiprimeSubmodule, "quasi-semiprime"},
    PredicateName{PredicateId::IdealPowerCriterion, "ideal-power"},
    PredicateName{PredicateId::EnvelopeFixed, "envelope-fixed"},
    PredicateName{PredicateId::MultiplicationModule, "multiplication"},
    PredicateName{PredicateId::SemiprimeModule, "semiprime-module"},
    PredicateName{PredicateId::QuasiSemiprimeModule, "quasi-semiprime-module"},
};

enum class Shape { Ideal, Submodule, Module };

Shape shapeOf(PredicateId id) {
  switch (id) {
    case PredicateId::SemiprimeIdeal:
    case PredicateId::PrimeIdeal:
    case PredicateId::PrimaryIdeal:
    case PredicateId::MaximalIdeal:
      return Shape::Ideal;
    case PredicateId::SemiprimeSubmodule:
    case PredicateId::QuasiSemiprimeSubmodule:
    case PredicateId::IdealPowerCriterion:
    case PredicateId::EnvelopeFixed:
      return Shape::Submodule;
    case PredicateId::MultiplicationModule:
    case PredicateId::SemiprimeModule:
    case PredicateId::QuasiSemiprimeModule:
      return Shape::Module;
  }
  return Shape::Module;
}

// ---------------------------------------------------------------------------
// Raw definitional helpers. Nothing here calls the optimized predicates,
// closures or enumerations.

using Mask = std::vector<bool>;

bool homogeneousIn(const GradedAbelianGroup& A, Elem x) {
  for (GroupElem g = 0; g < A.group().order(); ++g) {
    if (A.component(g).contains(x)) return true;
  }
  return false;
}

// Fixed point of "add pairs, multiply by every scalar" from the seed set.
Mask rawSpan(const GradedAbelianGroup& A, std::uint32_t scalars, const std::function<Elem(Elem, Elem)>& act, Mask seed) {
  seed[A.zero()] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem a = 0; a < A.order(); ++a) {
      if (!seed[a]) continue;
      for (Elem b = 0; b < A.order(); ++b) {
        if (seed[b] && !seed[A.add(a, b)]) {
          seed[A.add(a, b)] = true;
          changed = true;
        }
      }
      for (Elem r = 0; r < scalars; ++r) {
        if (!seed[act(r, a)]) {
          seed[act(r, a)] = true;
          changed = true;
        }
      }
    }
  }
  return seed;
}

bool isGradedSubset(const GradedAbelianGroup& A, const Mask& s) {
  // S equals the direct sum of its intersections with the components.
  Mask sums(A.order(), false);
  sums[A.zero()] = true;
  for (GroupElem g = 0; g < A.group().order(); ++g) {
    Mask next(A.order(), false);
    for (Elem a = 0; a < A.order(); ++a) {
      if (!sums[a]) continue;
      for (Elem b : A.component(g)) {
        if (s[b]) next[A.add(a, b)] = true;
      }
    }
    sums = std::move(next);
  }
  return sums == s;
}

bool isClosedSubset(const GradedAbelianGroup& A, std::uint32_t scalars, const std::function<Elem(Elem, Elem)>& act,
                    const Mask& s) {
  if (!s[A.zero()]) return false;
  for (Elem a = 0; a < A.order(); ++a) {
    if (!s[a]) continue;
    for (Elem b = 0; b < A.order(); ++b) {
      if (s[b] && !s[A.add(a, b)]) return false;
    }
    for (Elem r = 0; r < scalars; ++r) {
      if (!s[act(r, a)]) return false;
    }
  }
  return true;
}

std::vector<Mask> bruteForceClosedGraded(const GradedAbelianGroup& A, std::uint32_t scalars,
                                         const std::function<Elem(Elem, Elem)>& act) {
  if (A.order() > 20) throw Error(ErrorKind::Unsupported, "subset filter limited to 20 elements");
  std::vector<Mask> out;
  const std::uint64_t count = std::uint64_t{1} << A.order();
  Mask s(A.order());
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (!((bits >> A.zero()) & 1U)) continue;
    for (Elem x = 0; x < A.order(); ++x) s[x] = (bits >> x) & 1U;
    if (isClosedSubset(A, scalars, act, s) && isGradedSubset(A, s)) out.push_back(s);
  }
  return out;
}

struct RawRing {
  const FiniteGradedRing& R;

  std::function<Elem(Elem, Elem)> act() const {
    return [this](Elem r, Elem x) { return R.mul(r, x); };
  }
  Elem power(Elem r, std::uint64_t n) const {
    Elem acc = R.one();
    for (std::uint64_t i = 0; i < n; ++i) acc = R.mul(acc, r);
    return acc;
  }
  std::uint64_t bound() const { return 2ULL * R.order(); }
  bool proper(const Mask& ideal) const {
    for (bool b : ideal) {
      if (!b) return true;
    }
    return false;
  }
  std::vector<Mask> gradedIdeals() const { return bruteForceClosedGraded(R.additive(), R.order(), act()); }

  bool semiprime(const Mask& I) const {
    if (!proper(I)) return false;
    bool ok = true;
    for (Elem r = 0; r < R.order(); ++r) {
      if (!homogeneousIn(R.additive(), r)) continue;
      for (Elem s = 0; s < R.order(); ++s) {
        if (!homogeneousIn(R.additive(), s)) continue;
        for (std::uint64_t n = 1; n <= bound(); ++n) {
          if (I[R.mul(power(r, n), s)] && !I[R.mul(r, s)]) ok = false;
        }
      }
    }
    return ok;
  }
  bool prime(const Mask& I) const {
    if (!proper(I)) return false;
    for (Elem r = 0; r < R.order(); ++r) {
      for (Elem s = 0; s < R.order(); ++s) {
        if (!homogeneousIn(R.additive(), r) || !homogeneousIn(R.additive(), s)) continue;
        if (I[R.mul(r, s)] && !I[r] && !I[s]) return false;
      }
    }
    return true;
  }
  bool primary(const Mask& J) const {
    if (!proper(J)) return false;
    for (Elem r = 0; r < R.order(); ++r) {
      for (Elem s = 0; s < R.order(); ++s) {
        if (!homogeneousIn(R.additive(), r) || !homogeneousIn(R.additive(), s)) continue;
        if (!J[R.mul(r, s)] || J[r]) continue;
        bool somePower = false;
        for (std::uint64_t n = 1; n <= bound(); ++n) somePower = somePower || J[power(s, n)];
        if (!somePower) return false;
      }
    }
    return true;
  }
  bool maximal(const Mask& I) const {
    if (!proper(I)) return false;
    for (const Mask& J : gradedIdeals()) {
      if (J == I || !proper(J)) continue;
      bool contains = true;
      for (Elem x = 0; x < R.order(); ++x) contains = contains && (!I[x] || J[x]);
      if (contains) return false;
    }
    return true;
  }
};

struct RawModule {
  const GradedModule& M;
  RawRing ring{*M.ring()};

  std::function<Elem(Elem, Elem)> act() const {
    return [this](Elem r, Elem x) { return M.act(r, x); };
  }
  std::vector<Mask> gradedSubmodules() const {
    return bruteForceClosedGraded(M.additive(), M.ring()->order(), act());
  }
  bool proper(const Mask& N) const {
    for (bool b : N) {
      if (!b) return true;
    }
    return false;
  }
  Mask colon(const Mask& N) const {
    Mask out(M.ring()->order(), false);
    for (Elem r = 0; r < M.ring()->order(); ++r) {
      bool inside = true;
      for (Elem x = 0; x < M.order(); ++x) inside = inside && N[M.act(r, x)];
      out[r] = inside;
    }
    return out;
  }
  Mask annihilator(const Mask& N) const {
    Mask out(M.ring()->order(), false);
    for (Elem r = 0; r < M.ring()->order(); ++r) {
      bool kills = true;
      for (Elem x = 0; x < M.order(); ++x) kills = kills && (!N[x] || M.act(r, x) == M.zero());
      out[r] = kills;
    }
    return out;
  }
  Mask idealTimesModule(const Mask& I) const {
    Mask seed(M.order(), false);
    for (Elem r = 0; r < M.ring()->order(); ++r) {
      if (!I[r]) continue;
      for (Elem x = 0; x < M.order(); ++x) seed[M.act(r, x)] = true;
    }
    return rawSpan(M.additive(), M.ring()->order(), act(), std::move(seed));
  }
  Mask idealProduct(const Mask& A, const Mask& B) const {
    const auto& R = *M.ring();
    Mask seed(R.order(), false);
    for (Elem a = 0; a < R.order(); ++a) {
      for (Elem b = 0; b < R.order(); ++b) {
        if (A[a] && B[b]) seed[R.mul(a, b)] = true;
      }
    }
    return rawSpan(R.additive(), R.order(), ring.act(), std::move(seed));
  }
  static bool subset(const Mask& a, const Mask& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] && !b[i]) return false;
    }
    return true;
  }

  bool semiprime(const Mask& N) const {
    if (!proper(N)) return false;
    const auto& R = *M.ring();
    bool ok = true;
    for (Elem r = 0; r < R.order(); ++r) {
      if (!homogeneousIn(R.additive(), r)) continue;
      for (Elem m = 0; m < M.order(); ++m) {
        if (!homogeneousIn(M.additive(), m)) continue;
        for (std::uint64_t n = 1; n <= ring.bound(); ++n) {
          if (N[M.act(ring.power(r, n), m)] && !N[M.act(r, m)]) ok = false;
        }
      }
    }
    return ok;
  }
  bool quasiSemiprime(const Mask& N) const { return proper(N) && ring.semiprime(colon(N)); }
  bool multiplication() const {
    const auto ideals = ring.gradedIdeals();
    for (const Mask& N : gradedSubmodules()) {
      bool found = false;
      for (const Mask& I : ideals) found = found || idealTimesModule(I) == N;
      if (!found) return false;
    }
    return true;
  }
  bool idealPower(const Mask& N) const {
    for (const Mask& I : ring.gradedIdeals()) {
      const bool conclusion = subset(idealTimesModule(I), N);
      Mask power = I;
      for (std::uint64_t k = 1; k <= ring.bound(); ++k) {
        if (subset(idealTimesModule(power), N) && !conclusion) return false;
        power = idealProduct(power, I);
      }
    }
    return true;
  }
  bool envelopeFixed(const Mask& N) const {
    const auto& R = *M.ring();
    Mask ge(M.order(), false);
    for (Elem r = 0; r < R.order(); ++r) {
      if (!homogeneousIn(R.additive(), r)) continue;
      for (Elem m = 0; m < M.order(); ++m) {
        if (!homogeneousIn(M.additive(), m)) continue;
        for (std::uint64_t n = 1; n <= ring.bound(); ++n) {
          if (N[M.act(ring.power(r, n), m)]) ge[M.act(r, m)] = true;
        }
      }
    }
    return rawSpan(M.additive(), R.order(), act(), std::move(ge)) == N;
  }
  bool semiprimeModule() const {
    if (M.order() == 1) throw Error(ErrorKind::InvalidArgument, "zero module");
    Mask zero(M.order(), false);
    zero[M.zero()] = true;
    return semiprime(zero);
  }
  bool quasiSemiprimeModule() const {
    if (M.order() == 1) throw Error(ErrorKind::InvalidArgument, "zero module");
    for (const Mask& N : gradedSubmodules()) {
      std::size_t count = 0;
      for (bool b : N) count += b ? 1 : 0;
      if (count > 1 && !ring.semiprime(annihilator(N))) return false;
    }
    return true;
  }
};

void checkBounds(const FiniteGradedRing& R, std::uint32_t moduleOrder) {
  if (R.order() > kOracleMaxRing || moduleOrder > kOracleMaxModule) {
    throw Error(ErrorKind::Unsupported, "instance too large for the naive oracle",
                "|R|=" + std::to_string(R.order()) + " |M|=" + std::to_string(moduleOrder));
  }
}

}  // namespace

std::string toString(PredicateId id) {
  for (const auto& p : kPredicateNames) {
    if (p.id == id) return std::string(p.name);
  }
  return "unknown";
}

std::optional<PredicateId> parsePredicateId(std::string_view name) {
  for (const auto& p : kPredicateNames) {
    if (p.name == name) return p.id;
  }
  return std::nullopt;
}

const std::vector<PredicateId>& allPredicates() {
  static const std::vector<PredicateId> ids = [] {
    std::vector<PredicateId> out;
    for (const auto& p : kPredicateNames) out.push_back(p.id);
    return out;
  }();
  return ids;
}

bool acceptsInstance(PredicateId id, const OracleInstance& instance) {
  switch (shapeOf(id)) {
    case Shape::Ideal: return std::holds_alternative<GradedIdeal>(instance);
    case Shape::Submodule: return std::holds_alternative<GradedSubmodule>(instance);
    case Shape::Module: return std::holds_alternative<ModulePtr>(instance);
  }
  return false;
}

bool naiveOracle(PredicateId id, const OracleInstance& instance) {
  if (!acceptsInstance(id, instance)) throw Error(ErrorKind::InvalidArgument, "instance shape does not match predicate");
  if (const auto* ideal = std::get_if<GradedIdeal>(&instance)) {
    const auto& R = *ideal->ring();
    checkBounds(R, 0);
    RawRing raw{R};
    const Mask& I = ideal->elements().mask();
    switch (id) {
      case PredicateId::SemiprimeIdeal: return raw.semiprime(I);
      case PredicateId::PrimeIdeal: return raw.prime(I);
      case PredicateId::PrimaryIdeal: return raw.primary(I);
      case PredicateId::MaximalIdeal: return raw.maximal(I);
      default: break;
    }
  } else if (const auto* sub = std::get_if<GradedSubmodule>(&instance)) {
    const auto& M = *sub->module();
    checkBounds(*M.ring(), M.order());
    RawModule raw{M};
    const Mask& N = sub->elements().mask();
    switch (id) {
      case PredicateId::SemiprimeSubmodule: return raw.semiprime(N);
      case PredicateId::QuasiSemiprimeSubmodule: return raw.quasiSemiprime(N);
      case PredicateId::IdealPowerCriterion: return raw.idealPower(N);
      case PredicateId::EnvelopeFixed: return raw.envelopeFixed(N);
      default: break;
    }
  } else {
    const auto& M = *std::get<ModulePtr>(instance);
    checkBounds(*M.ring(), M.order());
    RawModule raw{M};
    switch (id) {
      case PredicateId::MultiplicationModule: return raw.multiplication();
      case PredicateId::SemiprimeModule: return raw.semiprimeModule();
      case PredicateId::QuasiSemiprimeModule: return raw.quasiSemiprimeModule();
      default: break;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unhandled predicate");
}

bool optimizedVerdict(PredicateId id, const OracleInstance& instance) {
  if (!acceptsInstance(id, instance)) throw Error(ErrorKind::InvalidArgument, "instance shape does not match predicate");
  switch (id) {
    case PredicateId::SemiprimeIdeal: return isGradedSemiprimeIdeal(std::get<GradedIdeal>(instance));
    case PredicateId::PrimeIdeal: return isGradedPrimeIdeal(std::get<GradedIdeal>(instance));
    case PredicateId::PrimaryIdeal: return isGradedPrimaryIdeal(std::get<GradedIdeal>(instance));
    case PredicateId::MaximalIdeal: return isGradedMaximalIdeal(std::get<GradedIdeal>(instance));
    case PredicateId::SemiprimeSubmodule: return isGradedSemiprimeSubmodule(std::get<GradedSubmodule>(instance));
    case PredicateId::QuasiSemiprimeSubmodule:
      return isGradedQuasiSemiprimeSubmodule(std::get<GradedSubmodule>(instance));
    case PredicateId::IdealPowerCriterion: return idealPowerCriterion(std::get<GradedSubmodule>(instance));
    case PredicateId::EnvelopeFixed: {
      const auto& n = std::get<GradedSubmodule>(instance);
      return gradedEnvelope(n).submodule == n;
    }
    case PredicateId::MultiplicationModule: return isGradedMultiplicationModule(std::get<ModulePtr>(instance));
    case PredicateId::SemiprimeModule: return isGradedSemiprimeModule(std::get<ModulePtr>(instance));
    case PredicateId::QuasiSemiprimeModule: return isGradedQuasiSemiprimeModule(std::get<ModulePtr>(instance));
  }
  throw Error(ErrorKind::InvalidArgument, "unhandled predicate");
}

std::vector<ElementSet> bruteForceGradedIdeals(const FiniteGradedRing& ring) {
  std::vector<ElementSet> out;
  RawRing raw{ring};
  for (auto& mask : raw.gradedIdeals()) out.push_back(ElementSet::fromMask(std::move(mask)));
  std::sort(out.begin(), out.end(), canonicalLess);
  return out;
}

std::vector<ElementSet> bruteForceGradedSubmodules(const GradedModule& module) {
  std::vector<ElementSet> out;
  RawModule raw{module};
  for (auto& mask : raw.gradedSubmodules()) out.push_back(ElementSet::fromMask(std::move(mask)));
  std::sort(out.begin(), out.end(), canonicalLess);
  return out;
}

}  // namespace gqs
