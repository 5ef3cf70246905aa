#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gqs/grading_group.hpp"
#include "gqs/ideal.hpp"

namespace gqs {

// Modules over the integers, trivially graded (R_e = Z, R_g = 0 otherwise),
// of shape Z^a (+) Z_{n_1} (+) ... (+) Z_{n_t} with one degree per factor.

using ZVector = std::vector<std::int64_t>;

class ZModuleInstance {
 public:
  static std::shared_ptr<const ZModuleInstance> create(GradingGroup group, std::uint32_t freeRank,
                                                       std::vector<std::int64_t> torsionOrders,
                                                       std::vector<GroupElem> degrees);

  const GradingGroup& group() const { return group_; }
  std::uint32_t freeRank() const { return freeRank_; }
  const std::vector<std::int64_t>& torsionOrders() const { return torsion_; }
  const std::vector<GroupElem>& degrees() const { return degrees_; }
  std::size_t arity() const { return degrees_.size(); }
  bool isTorsion() const { return freeRank_ == 0; }
  /// 0 for free coordinates, n_i for torsion coordinates.
  std::int64_t modulus(std::size_t coordinate) const;

  /// Reduces torsion coordinates into [0, n_i); throws on arity mismatch.
  ZVector normalize(const ZVector& v) const;
  /// Degree of a homogeneous vector (zero reports the identity).
  std::optional<GroupElem> degreeOf(const ZVector& v) const;
  /// Coordinates of degree g kept, the rest zeroed.
  ZVector componentOf(const ZVector& v, GroupElem g) const;
  ZVector unitVector(std::size_t coordinate) const;
  std::string label(const ZVector& v) const;
  std::string describe() const;

 private:
  ZModuleInstance() = default;

  GradingGroup group_ = GradingGroup::cyclic(1);
  std::uint32_t freeRank_ = 0;
  std::vector<std::int64_t> torsion_;
  std::vector<GroupElem> degrees_;
};

using ZModulePtr = std::shared_ptr<const ZModuleInstance>;

/// Subgroup of a ZModuleInstance generated by integer vectors; validated to
/// be graded (each generator's per-degree components lie in the span).
class ZSubmodule {
 public:
  static ZSubmodule create(ZModulePtr parent, std::vector<ZVector> generators);

  const ZModulePtr& parent() const { return parent_; }
  const std::vector<ZVector>& generators() const { return generators_; }
  /// Echelon basis of the preimage lattice in Z^arity (torsion relations included).
  const std::vector<ZVector>& latticeBasis() const { return basis_; }
  std::string toString() const;

 private:
  ZSubmodule() = default;

  ZModulePtr parent_;
  std::vector<ZVector> generators_;
  std::vector<ZVector> basis_;
};

/// The ideal cZ with canonical generator c >= 0 (c = 0 is the zero ideal).
struct ZIdeal {
  std::int64_t generator = 0;

  bool isProper() const { return generator != 1; }
  std::string toString() const;
  friend bool operator==(const ZIdeal&, const ZIdeal&) = default;
};

struct ZPowerWitness {
  std::int64_t r;
  ZVector m;
  std::uint64_t n;

  friend bool operator==(const ZPowerWitness&, const ZPowerWitness&) = default;
};

/// Row echelon form over Z with positive pivots (Hermite reduction).
std::vector<ZVector> hermiteRows(std::vector<ZVector> rows, std::size_t columns);

bool zMembership(const ZSubmodule& submodule, const ZVector& v);
/// (N :_Z M) = lcm over unit vectors e_j of the smallest c_j > 0 with
/// c_j e_j in N (c_j = 0 when no such multiple exists).
ZIdeal zColonIdeal(const ZSubmodule& submodule);
/// cZ is semiprime iff c = 0 or c >= 2 is squarefree.
bool zIsSemiprimeIdeal(const ZIdeal& ideal);
bool zIsPrimeIdeal(const ZIdeal& ideal);
/// c = 0 or a prime power.
bool zIsPrimaryIdeal(const ZIdeal& ideal);
bool zIsMaximalIdeal(const ZIdeal& ideal);
/// Product of the distinct primes dividing c; 0 and 1 map to themselves.
ZIdeal zRadical(const ZIdeal& ideal);
/// True iff r^n m is in N and r m is not. Throws InvalidArgument if m is not homogeneous.
bool zWitnessNotSemiprime(const ZSubmodule& submodule, std::int64_t r, const ZVector& m, std::uint64_t n);
bool zIsProper(const ZSubmodule& submodule);
/// Full decision for torsion modules: r ranges over residues mod E = lcm(n_i)
/// and n over 1..E. Throws Unsupported when the free rank is positive.
Verdict<ZPowerWitness> zCheckSemiprimeSubmoduleTorsion(const ZSubmodule& submodule);
bool zIsSemiprimeSubmoduleTorsion(const ZSubmodule& submodule);

struct ZSearchBounds {
  std::int64_t maxR = 8;
  std::int64_t maxCoordinate = 8;
  std::uint64_t maxN = 4;
};

/// Bounded refutation search usable with free rank: returns the first
/// witness in (r, m, n) order, or nullopt if none exists within bounds.
std::optional<ZPowerWitness> zSearchNotSemiprimeWitness(const ZSubmodule& submodule, ZSearchBounds bounds = {});

bool zIsSquarefree(std::int64_t c);

}  // namespace gqs
