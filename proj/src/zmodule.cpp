#include "gqs/zmodule.hpp"

#include <cstdlib>
#include <numeric>
#include <set>

#include "gqs/error.hpp"

namespace gqs {

namespace {

std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Unsupported, "integer overflow");
  return out;
}

std::int64_t checkedSub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorKind::Unsupported, "integer overflow");
  return out;
}

std::int64_t floorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void subtractMultiple(ZVector& target, const ZVector& row, std::int64_t q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < target.size(); ++k) target[k] = checkedSub(target[k], checkedMul(q, row[k]));
}

bool isZero(const ZVector& v) {
  for (auto x : v) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<ZVector> latticeRows(const ZModuleInstance& M, const std::vector<ZVector>& generators) {
  std::vector<ZVector> rows = generators;
  for (std::size_t j = M.freeRank(); j < M.arity(); ++j) {
    ZVector rel(M.arity(), 0);
    rel[j] = M.modulus(j);
    rows.push_back(std::move(rel));
  }
  return rows;
}

bool reducesToZero(const std::vector<ZVector>& basis, ZVector v) {
  for (const auto& row : basis) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    if (v[p] % row[p] != 0) return false;
    subtractMultiple(v, row, v[p] / row[p]);
  }
  return isZero(v);
}

std::int64_t checkedPow(std::int64_t r, std::uint64_t n) {
  std::int64_t acc = 1;
  for (std::uint64_t i = 0; i < n; ++i) acc = checkedMul(acc, r);
  return acc;
}

ZVector scale(const ZVector& v, std::int64_t s) {
  ZVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = checkedMul(v[k], s);
  return out;
}

}  // namespace

std::shared_ptr<const ZModuleInstance> ZModuleInstance::create(GradingGroup group, std::uint32_t freeRank,
                                                               std::vector<std::int64_t> torsionOrders,
                                                               std::vector<GroupElem> degrees) {
  for (auto n : torsionOrders) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "torsion orders must be >= 2", std::to_string(n));
  }
  if (degrees.size() != freeRank + torsionOrders.size()) {
    throw Error(ErrorKind::InvalidArgument, "need one degree per factor");
  }
  for (auto g : degrees) {
    if (!group.contains(g)) throw Error(ErrorKind::InvalidArgument, "degree outside the grading group", std::to_string(g));
  }
  auto out = std::shared_ptr<ZModuleInstance>(new ZModuleInstance());
  out->group_ = std::move(group);
  out->freeRank_ = freeRank;
  out->torsion_ = std::move(torsionOrders);
  out->degrees_ = std::move(degrees);
  return out;
}

std::int64_t ZModuleInstance::modulus(std::size_t coordinate) const {
  return coordinate < freeRank_ ? 0 : torsion_[coordinate - freeRank_];
}

ZVector ZModuleInstance::normalize(const ZVector& v) const {
  if (v.size() != arity()) {
    throw Error(ErrorKind::InvalidArgument, "vector arity mismatch",
                "expected " + std::to_string(arity()) + ", got " + std::to_string(v.size()));
  }
  ZVector out = v;
  for (std::size_t j = freeRank_; j < arity(); ++j) {
    const auto n = modulus(j);
    out[j] = ((out[j] % n) + n) % n;
  }
  return out;
}

std::optional<GroupElem> ZModuleInstance::degreeOf(const ZVector& v) const {
  const ZVector w = normalize(v);
  std::optional<GroupElem> degree;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] == 0) continue;
    if (degree && *degree != degrees_[j]) return std::nullopt;
    degree = degrees_[j];
  }
  return degree.value_or(group_.identity());
}

ZVector ZModuleInstance::componentOf(const ZVector& v, GroupElem g) const {
  ZVector out = normalize(v);
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (degrees_[j] != g) out[j] = 0;
  }
  return out;
}

ZVector ZModuleInstance::unitVector(std::size_t coordinate) const {
  ZVector e(arity(), 0);
  e.at(coordinate) = 1;
  return e;
}

std::string ZModuleInstance::label(const ZVector& v) const {
  std::string out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j > 0) out += ",";
    out += std::to_string(v[j]);
  }
  return v.size() == 1 ? out : "(" + out + ")";
}

std::string ZModuleInstance::describe() const {
  std::string out;
  for (std::size_t j = 0; j < arity(); ++j) {
    if (j > 0) out += "x";
    out += j < freeRank_ ? "Z" : "Z" + std::to_string(modulus(j));
    out += "[" + std::to_string(degrees_[j]) + "]";
  }
  if (out.empty()) out = "0";
  return out + " over Z";
}

std::vector<ZVector> hermiteRows(std::vector<ZVector> rows, std::size_t columns) {
  std::size_t top = 0;
  for (std::size_t col = 0; col < columns && top < rows.size(); ++col) {
    bool hasPivot = false;
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i][col] != 0 && (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col]))) {
          best = i;
        }
      }
      if (best == rows.size()) break;
      hasPivot = true;
      std::swap(rows[top], rows[best]);
      bool cleared = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        subtractMultiple(rows[i], rows[top], rows[i][col] / rows[top][col]);
        if (rows[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!hasPivot) continue;
    if (rows[top][col] < 0) {
      for (auto& x : rows[top]) x = checkedSub(0, x);
    }
    for (std::size_t i = 0; i < top; ++i) subtractMultiple(rows[i], rows[top], floorDiv(rows[i][col], rows[top][col]));
    ++top;
  }
  rows.resize(top);
  return rows;
}

ZSubmodule ZSubmodule::create(ZModulePtr parent, std::vector<ZVector> generators) {
  if (!parent) throw Error(ErrorKind::InvalidArgument, "null parent module");
  ZSubmodule out;
  out.parent_ = std::move(parent);
  for (auto& g : generators) out.generators_.push_back(out.parent_->normalize(g));
  out.basis_ = hermiteRows(latticeRows(*out.parent_, out.generators_), out.parent_->arity());

  std::set<GroupElem> degrees(out.parent_->degrees().begin(), out.parent_->degrees().end());
  for (const auto& g : out.generators_) {
    for (GroupElem d : degrees) {
      if (!reducesToZero(out.basis_, out.parent_->componentOf(g, d))) {
        throw Error(ErrorKind::NotGraded, "submodule is not graded",
                    "generator " + out.parent_->label(g) + " has component " +
                        out.parent_->label(out.parent_->componentOf(g, d)) + " outside");
      }
    }
  }
  return out;
}

std::string ZSubmodule::toString() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ",";
    out += parent_->label(generators_[i]);
  }
  return out + ">";
}

std::string ZIdeal::toString() const { return generator == 0 ? "0Z" : std::to_string(generator) + "Z"; }

bool zMembership(const ZSubmodule& submodule, const ZVector& v) {
  return reducesToZero(submodule.latticeBasis(), submodule.parent()->normalize(v));
}

ZIdeal zColonIdeal(const ZSubmodule& submodule) {
  const auto& M = *submodule.parent();
  const std::size_t a = M.arity();
  std::int64_t acc = 1;
  for (std::size_t j = 0; j < a; ++j) {
    // Move column j last; the echelon row with its pivot there spans the
    // multiples of e_j inside the lattice.
    std::vector<ZVector> permuted;
    for (const auto& row : submodule.latticeBasis()) {
      ZVector p;
      for (std::size_t k = 0; k < a; ++k) {
        if (k != j) p.push_back(row[k]);
      }
      p.push_back(row[j]);
      permuted.push_back(std::move(p));
    }
    auto echelon = hermiteRows(std::move(permuted), a);
    std::int64_t cj = 0;
    if (!echelon.empty()) {
      const auto& last = echelon.back();
      bool onlyLast = true;
      for (std::size_t k = 0; k + 1 < a; ++k) {
        if (last[k] != 0) onlyLast = false;
      }
      if (onlyLast) cj = std::llabs(last[a - 1]);
    }
    if (cj == 0) return ZIdeal{0};
    acc = checkedMul(acc / std::gcd(acc, cj), cj);
  }
  return ZIdeal{acc};
}

bool zIsSquarefree(std::int64_t c) {
  c = std::llabs(c);
  for (std::int64_t p = 2; p * p <= c; ++p) {
    if (c % (p * p) == 0) return false;
    if (c % p == 0) c /= p;
  }
  return true;
}

bool zIsSemiprimeIdeal(const ZIdeal& ideal) {
  if (ideal.generator == 0) return true;
  if (ideal.generator == 1) return false;
  return zIsSquarefree(ideal.generator);
}

namespace {

std::vector<std::int64_t> primeDivisors(std::int64_t c) {
  std::vector<std::int64_t> out;
  c = std::llabs(c);
  for (std::int64_t p = 2; p * p <= c; ++p) {
    if (c % p != 0) continue;
    out.push_back(p);
    while (c % p == 0) c /= p;
  }
  if (c > 1) out.push_back(c);
  return out;
}

}  // namespace

bool zIsPrimeIdeal(const ZIdeal& ideal) { return ideal.generator == 0 || zIsMaximalIdeal(ideal); }

bool zIsPrimaryIdeal(const ZIdeal& ideal) {
  return ideal.generator == 0 || (ideal.generator > 1 && primeDivisors(ideal.generator).size() == 1);
}

bool zIsMaximalIdeal(const ZIdeal& ideal) {
  const auto ps = primeDivisors(ideal.generator);
  return ideal.generator > 1 && ps.size() == 1 && ps.front() == ideal.generator;
}

ZIdeal zRadical(const ZIdeal& ideal) {
  if (ideal.generator <= 1) return ideal;
  std::int64_t r = 1;
  for (std::int64_t p : primeDivisors(ideal.generator)) r *= p;
  return {r};
}

bool zWitnessNotSemiprime(const ZSubmodule& submodule, std::int64_t r, const ZVector& m, std::uint64_t n) {
  const auto& M = *submodule.parent();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "exponent must be positive");
  if (!M.degreeOf(m)) throw Error(ErrorKind::InvalidArgument, "m is not homogeneous", M.label(m));
  return zMembership(submodule, scale(m, checkedPow(r, n))) && !zMembership(submodule, scale(m, r));
}

bool zIsProper(const ZSubmodule& submodule) {
  const auto& M = *submodule.parent();
  for (std::size_t j = 0; j < M.arity(); ++j) {
    if (!zMembership(submodule, M.unitVector(j))) return true;
  }
  return false;
}

namespace {

// Calls visit(m) for every homogeneous vector with free coordinates in
// [-bound, bound] and torsion coordinates in [0, n_i), first coordinate
// varying fastest; stops early when visit returns true.
template <class Visit>
bool forEachHomogeneous(const ZModuleInstance& M, std::int64_t bound, Visit visit) {
  const std::size_t a = M.arity();
  std::vector<std::int64_t> lo(a), hi(a);
  for (std::size_t j = 0; j < a; ++j) {
    lo[j] = j < M.freeRank() ? -bound : 0;
    hi[j] = j < M.freeRank() ? bound : M.modulus(j) - 1;
  }
  ZVector m = lo;
  while (true) {
    if (M.degreeOf(m) && visit(m)) return true;
    std::size_t j = 0;
    for (; j < a; ++j) {
      if (++m[j] <= hi[j]) break;
      m[j] = lo[j];
    }
    if (j == a) return false;
  }
}

}  // namespace

Verdict<ZPowerWitness> zCheckSemiprimeSubmoduleTorsion(const ZSubmodule& submodule) {
  const auto& M = *submodule.parent();
  if (!M.isTorsion()) {
    throw Error(ErrorKind::Unsupported, "full semiprime decision needs a torsion module; use witness refutation");
  }
  if (!zIsProper(submodule)) return {};
  std::int64_t exponent = 1;
  for (auto n : M.torsionOrders()) exponent = checkedMul(exponent / std::gcd(exponent, n), n);

  std::optional<ZPowerWitness> found;
  for (std::int64_t r = 0; r < exponent && !found; ++r) {
    forEachHomogeneous(M, 0, [&](const ZVector& m) {
      ZVector rm = M.normalize(scale(m, r));
      if (zMembership(submodule, rm)) return false;
      ZVector v = rm;
      for (std::uint64_t n = 2; n <= static_cast<std::uint64_t>(exponent); ++n) {
        v = M.normalize(scale(v, r));
        if (zMembership(submodule, v)) {
          found = ZPowerWitness{r, m, n};
          return true;
        }
      }
      return false;
    });
  }
  if (found) return {false, found};
  return {true, std::nullopt};
}

bool zIsSemiprimeSubmoduleTorsion(const ZSubmodule& submodule) {
  return zCheckSemiprimeSubmoduleTorsion(submodule).holds;
}

std::optional<ZPowerWitness> zSearchNotSemiprimeWitness(const ZSubmodule& submodule, ZSearchBounds bounds) {
  const auto& M = *submodule.parent();
  std::optional<ZPowerWitness> found;
  for (std::int64_t r = 0; r <= bounds.maxR && !found; ++r) {
    forEachHomogeneous(M, bounds.maxCoordinate, [&](const ZVector& m) {
      for (std::uint64_t n = 2; n <= bounds.maxN; ++n) {
        if (zWitnessNotSemiprime(submodule, r, m, n)) {
          found = ZPowerWitness{r, m, n};
          return true;
        }
      }
      return false;
    });
  }
  return found;
}

}  // namespace gqs
