#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "gqs/element_set.hpp"
#include "gqs/module.hpp"
#include "gqs/ring.hpp"

// Independent arithmetic used as ground truth. Nothing here calls into the
// decision procedures under test.
namespace oracle {

inline std::vector<gqs::Elem> multiplesOf(std::uint32_t d, std::uint32_t n) {
  std::vector<gqs::Elem> out;
  for (std::uint32_t x = 0; x < n; x += d) out.push_back(x);
  return out;
}

/// The ideal dZ_n for d | n.
inline gqs::ElementSet principal(std::uint32_t d, std::uint32_t n) {
  const auto m = multiplesOf(d, n);
  return gqs::ElementSet::fromElements(n, m);
}

inline std::uint32_t divisorCount(std::uint32_t n) {
  std::uint32_t c = 0;
  for (std::uint32_t d = 1; d <= n; ++d) c += n % d == 0 ? 1 : 0;
  return c;
}

/// dZ_n is semiprime in Z_n iff d is proper and every prime dividing d
/// appears once in gcd(d, n) = d. Equivalent: d squarefree, d > 1.
inline bool squarefree(std::int64_t c) {
  for (std::int64_t p = 2; p * p <= c; ++p) {
    if (c % (p * p) == 0) return false;
  }
  return true;
}

/// Bounded residue check of cZ being semiprime: r, s in [0, c), n up to
/// ceil(log2 c) + 1, computed with plain modular arithmetic.
inline bool residueSemiprime(std::int64_t c) {
  if (c == 1) return false;
  std::int64_t maxN = 1;
  while ((std::int64_t{1} << (maxN - 1)) < c) ++maxN;
  for (std::int64_t r = 0; r < c; ++r) {
    for (std::int64_t s = 0; s < c; ++s) {
      std::int64_t power = 1;
      for (std::int64_t n = 1; n <= maxN; ++n) {
        power = power * r % c;
        if (power * s % c == 0 && r * s % c != 0) return false;
      }
    }
  }
  return true;
}

/// Elements of the cyclic submodule generated by g in Z_n.
inline std::set<std::int64_t> cyclicSpan(std::int64_t g, std::int64_t n) {
  std::set<std::int64_t> out;
  for (std::int64_t k = 0; k < n; ++k) out.insert(k * g % n);
  return out;
}

}  // namespace oracle

namespace fixtures {

inline const gqs::GradingGroup& z2() {
  static const gqs::GradingGroup g = gqs::GradingGroup::cyclic(2);
  return g;
}

inline gqs::RingPtr cyclic(std::uint32_t n) { return gqs::makeCyclicRing(n, z2()); }

/// Z_2 x Z_2 over Z_2 with degrees (e, 1); index a + 2b for (a, b).
inline gqs::ModulePtr splitPair() {
  const std::vector<gqs::CyclicFactor> f{{2, 0}, {2, 1}};
  return gqs::productModule(f, cyclic(2));
}

inline gqs::GradedSubmodule sub(const gqs::ModulePtr& m, std::vector<gqs::Elem> gens) {
  return gqs::submoduleClosure(m, gens);
}

inline gqs::GradedIdeal ideal(const gqs::RingPtr& r, std::vector<gqs::Elem> gens) {
  return gqs::idealClosure(r, gens);
}

}  // namespace fixtures
