#include <doctest.h>

#include "gqs/error.hpp"
#include "gqs/predicates.hpp"
#include "support.hpp"

using namespace gqs;
using fixtures::cyclic;
using fixtures::splitPair;
using fixtures::sub;

namespace {

ModulePtr z8() { return ringAsModule(cyclic(8)); }

}  // namespace

TEST_SUITE("predicates") {
  TEST_CASE("semiprime submodules of Z8") {
    const auto m = z8();
    CHECK(isGradedSemiprimeSubmodule(sub(m, {2})));
    const auto v = checkGradedSemiprimeSubmodule(sub(m, {4}));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(v.witness->r == 2);
    CHECK(v.witness->x == 1);
    CHECK(v.witness->n == 2);
    CHECK_FALSE(isGradedSemiprimeSubmodule(wholeModule(m)));
  }

  TEST_CASE("every proper submodule over a field is semiprime") {
    const auto z3 = ringAsModule(cyclic(3));
    const std::vector<CyclicFactor> f{{3, 0}, {3, 1}};
    for (const auto& m : {z3, productModule(f, cyclic(3))}) {
      for (const auto& n : enumerateGradedSubmodules(m)) {
        if (n.isProper()) CHECK(isGradedSemiprimeSubmodule(n));
      }
    }
  }

  TEST_CASE("quasi-semiprime submodules of Z8") {
    const auto m = z8();
    CHECK(isGradedQuasiSemiprimeSubmodule(sub(m, {2})));
    CHECK_FALSE(isGradedQuasiSemiprimeSubmodule(sub(m, {4})));
    CHECK_FALSE(isGradedQuasiSemiprimeSubmodule(wholeModule(m)));
  }

  TEST_CASE("multiplication modules") {
    CHECK(isGradedMultiplicationModule(z8()));
    CHECK(isGradedMultiplicationModule(ringAsModule(cyclic(6))));
    const auto v = checkGradedMultiplicationModule(splitPair());
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(v.witness->elements().elements() == std::vector<Elem>{0, 1});
  }

  TEST_CASE("ideal-power criterion") {
    const auto m = z8();
    CHECK(idealPowerCriterion(sub(m, {2})));
    const auto v = checkIdealPowerCriterion(sub(m, {4}));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(v.witness->ideal.elements() == oracle::principal(2, 8));
    CHECK(v.witness->k == 2);
    const auto z3 = ringAsModule(cyclic(3));
    CHECK(idealPowerCriterion(zeroSubmodule(z3)));
  }

  TEST_CASE("graded envelope") {
    const auto m = z8();
    const auto two = gradedEnvelope(sub(m, {2}));
    CHECK(two.submodule.elements() == oracle::principal(2, 8));
    const auto four = gradedEnvelope(sub(m, {4}));
    CHECK(four.submodule.elements() == oracle::principal(2, 8));
    CHECK(four.generatorSet.contains(2));
    const auto& w = four.witnesses.at(2);
    CHECK(m->act(w.r, w.x) == 2);
    CHECK(sub(m, {4}).contains(m->act(m->ring()->pow(w.r, w.n), w.x)));
    CHECK(gradedEnvelope(zeroSubmodule(ringAsModule(cyclic(6)))).submodule.size() == 1);
  }

  TEST_CASE("envelope witnesses certify every generator") {
    const std::vector<CyclicFactor> f{{4, 0}, {2, 1}};
    const auto m = productModule(f, cyclic(4));
    for (const auto& n : enumerateGradedSubmodules(m)) {
      const auto env = gradedEnvelope(n);
      CHECK(n.isSubsetOf(env.submodule));
      for (Elem x : env.generatorSet) {
        const auto& w = env.witnesses.at(x);
        CHECK(m->act(w.r, w.x) == x);
        CHECK(n.contains(m->act(m->ring()->pow(w.r, w.n), w.x)));
      }
    }
  }

  TEST_CASE("semiprime modules") {
    CHECK(isGradedSemiprimeModule(ringAsModule(cyclic(6))));
    CHECK(isGradedSemiprimeModule(ringAsModule(cyclic(3))));
    const auto v = checkGradedSemiprimeModule(z8());
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    // The minimal witness in (r, m, n) order; 2^3 * 1 = 0 while 2 * 1 != 0.
    CHECK(v.witness->r == 2);
    CHECK(v.witness->x == 1);
    CHECK(v.witness->n == 3);
    // The textbook witness r = 2, m = 2, n = 2 is also valid.
    const auto m = z8();
    CHECK(m->act(m->ring()->pow(2, 2), 2) == 0);
    CHECK(m->act(2, 2) != 0);
  }

  TEST_CASE("quasi-semiprime modules") {
    CHECK(isGradedQuasiSemiprimeModule(ringAsModule(cyclic(6))));
    CHECK(isGradedQuasiSemiprimeModule(ringAsModule(cyclic(3))));
    const auto v = checkGradedQuasiSemiprimeModule(z8());
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(v.witness->elements() == oracle::principal(2, 8));
  }

  TEST_CASE("module-level predicates reject the zero module") {
    const auto m = ringAsModule(cyclic(4));
    const auto zero = quotientModule(m, wholeModule(m)).module;
    CHECK_THROWS_AS(isGradedSemiprimeModule(zero), Error);
    CHECK_THROWS_AS(isGradedQuasiSemiprimeModule(zero), Error);
  }

  TEST_CASE("exponent bound override") {
    const auto n = sub(z8(), {4});
    CHECK(checkGradedSemiprimeSubmodule(n, 1).holds);  // n = 1 alone never refutes
    CHECK_FALSE(checkGradedSemiprimeSubmodule(n, 2).holds);
  }
}
