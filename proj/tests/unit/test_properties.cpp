#include <doctest.h>

#include "gqs/harness.hpp"
#include "gqs/hom.hpp"
#include "gqs/predicates.hpp"

using namespace gqs;

// Structural properties swept over the whole default catalog.

namespace {

const Catalog& catalog() {
  static const Catalog c = buildStandardCatalog("default");
  return c;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("ideal hierarchy: maximal => prime => semiprime and primary") {
    for (const auto& r : catalog().rings) {
      for (const auto& i : enumerateGradedIdeals(r)) {
        if (isGradedMaximalIdeal(i)) CHECK(isGradedPrimeIdeal(i));
        if (isGradedPrimeIdeal(i)) {
          CHECK(isGradedSemiprimeIdeal(i));
          CHECK(isGradedPrimaryIdeal(i));
        }
      }
    }
  }

  TEST_CASE("exponent bounds |R| and 2|R| give identical verdicts") {
    for (const auto& r : catalog().rings) {
      const std::uint64_t n = r->order();
      for (const auto& i : enumerateGradedIdeals(r)) {
        CHECK(isGradedSemiprimeIdeal(i, n) == isGradedSemiprimeIdeal(i, 2 * n));
        CHECK(isGradedPrimaryIdeal(i, n) == isGradedPrimaryIdeal(i, 2 * n));
      }
    }
  }

  TEST_CASE("radical is an idempotent closure and detects semiprime ideals") {
    for (const auto& r : catalog().rings) {
      for (const auto& i : enumerateGradedIdeals(r)) {
        const auto rad = gradedRadical(i);
        CHECK(i.isSubsetOf(rad));
        CHECK(gradedRadical(rad) == rad);
        if (i.isProper()) CHECK(isGradedSemiprimeIdeal(i) == (rad == i));
      }
    }
  }

  TEST_CASE("ideal powers form a descending chain") {
    for (const auto& r : catalog().rings) {
      for (const auto& i : enumerateGradedIdeals(r)) {
        const unsigned s = powerStabilizationIndex(i);
        for (unsigned k = 1; k <= s; ++k) CHECK(idealPower(i, k + 1).isSubsetOf(idealPower(i, k)));
        CHECK(idealPower(i, s + 1) == idealPower(i, s));
      }
    }
  }

  TEST_CASE("colon ideals: properness, monotonicity and (N:M)M inside N") {
    for (const auto& m : catalog().modules) {
      const auto subs = enumerateGradedSubmodules(m);
      for (const auto& n : subs) {
        const auto colon = colonIdeal(n);
        CHECK(colon.isProper() == n.isProper());
        CHECK(idealTimesModule(colon, m).isSubsetOf(n));
        for (const auto& k : subs) {
          if (n.isSubsetOf(k)) CHECK(colon.isSubsetOf(colonIdeal(k)));
        }
      }
    }
  }

  TEST_CASE("envelope contains N and is fixed on semiprime submodules") {
    for (const auto& m : catalog().modules) {
      for (const auto& n : enumerateGradedSubmodules(m)) {
        const auto env = gradedEnvelope(n).submodule;
        CHECK(n.isSubsetOf(env));
        if (isGradedSemiprimeSubmodule(n)) CHECK(env == n);
      }
    }
  }

  TEST_CASE("quotient projections are epimorphisms with the expected kernel") {
    for (const auto& m : catalog().modules) {
      if (m->order() > 8) continue;
      for (const auto& k : enumerateGradedSubmodules(m)) {
        const auto p = quotientProjection(k);
        CHECK(isEpimorphism(p));
        CHECK(kernel(p) == k);
        CHECK(p.target()->order() * k.size() == m->order());
      }
    }
  }

  TEST_CASE("semiprime submodules are quasi-semiprime") {
    for (const auto& m : catalog().modules) {
      for (const auto& n : enumerateGradedSubmodules(m)) {
        if (isGradedSemiprimeSubmodule(n)) CHECK(isGradedQuasiSemiprimeSubmodule(n));
      }
    }
  }
}
