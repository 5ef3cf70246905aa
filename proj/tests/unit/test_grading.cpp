#include <doctest.h>

#include "gqs/error.hpp"
#include "gqs/ideal.hpp"
#include "gqs/oracle.hpp"
#include "support.hpp"

using namespace gqs;
using fixtures::cyclic;
using fixtures::ideal;
using fixtures::z2;

namespace {

std::set<Elem> asSet(const ElementSet& s) { return {s.begin(), s.end()}; }

RingPtr dualNumbersZ2() { return makeQuotientPolyRing(2, 0, 1, z2()); }

}  // namespace

TEST_SUITE("grading") {
  TEST_CASE("cyclic grading group tables") {
    const auto g = GradingGroup::cyclic(4);
    CHECK(g.order() == 4);
    CHECK(g.compose(3, 2) == 1);
    CHECK(g.inverse(1) == 3);
    CHECK(g.identity() == 0);
    CHECK_THROWS_AS(GradingGroup::cyclic(0), Error);
  }

  TEST_CASE("group table validation rejects bad tables") {
    // 0 is not an identity: row 0 is constant.
    CHECK_THROWS_AS(GradingGroup::fromTable(2, {0, 0, 1, 1}), Error);
    // Not associative: a 3-element loop with identity 0 but 1*1=1, 1*2=0, 2*2=1.
    try {
      GradingGroup::fromTable(3, {0, 1, 2, 1, 1, 0, 2, 0, 1});
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::AxiomViolation);
      CHECK_FALSE(e.witness().empty());
    }
    const auto klein = GradingGroup::fromTable(4, {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0}, "V4");
    CHECK(klein.inverse(3) == 3);
  }

  TEST_CASE("cyclic rings are trivially graded") {
    const auto r8 = cyclic(8);
    CHECK(r8->order() == 8);
    CHECK(r8->component(0).size() == 8);
    CHECK(asSet(r8->component(1)) == std::set<Elem>{0});
    CHECK(r8->homogeneous().size() == 8);
    CHECK(cyclic(6)->homogeneous().size() == 6);
    try {
      makeCyclicRing(1, z2());
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
  }

  TEST_CASE("quotient polynomial rings") {
    const auto r = dualNumbersZ2();
    CHECK(r->order() == 4);
    // index a + 2b for a + b x
    const Elem one = 1, x = 2, onePlusX = 3;
    std::set<Elem> h(r->homogeneous().begin(), r->homogeneous().end());
    CHECK(h == std::set<Elem>{0, one, x});
    CHECK_FALSE(r->isHomogeneous(onePlusX));
    CHECK(r->degreeOf(x) == 1u);
    CHECK(r->mul(x, x) == 0);
    CHECK(r->label(onePlusX) == "1+x");

    const auto group3 = makeQuotientPolyRing(3, 1, 1, z2());
    CHECK(group3->order() == 9);
    CHECK(group3->mul(3, 3) == 1);  // x * x = 1

    const auto trivial = makeQuotientPolyRing(2, 0, 0, z2());
    CHECK(trivial->homogeneous().size() == 4);

    try {
      makeQuotientPolyRing(2, 0, 1, GradingGroup::cyclic(3));
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::GradingInconsistent);
    }
  }

  TEST_CASE("homogeneous elements carry a degree and zero has the identity degree") {
    const auto hs = homogeneousElements(*dualNumbersZ2());
    CHECK(hs.size() == 3);
    for (const auto& h : hs) {
      CHECK(dualNumbersZ2()->component(h.degree).contains(h.value));
      if (h.value == 0) CHECK(h.degree == 0u);
    }
  }

  TEST_CASE("ring construction rejects broken tables with witnesses") {
    const auto base = cyclic(3);
    auto add = base->additive();
    std::vector<Elem> mul(9);
    for (Elem a = 0; a < 3; ++a) {
      for (Elem b = 0; b < 3; ++b) mul[a * 3 + b] = (a * b) % 3;
    }
    auto broken = mul;
    broken[1 * 3 + 2] = 0;  // 1*2 = 0 but 2*1 = 2
    try {
      FiniteGradedRing::create(add, broken, 1);
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::AxiomViolation);
      CHECK_FALSE(e.witness().empty());
    }
    CHECK_NOTHROW(FiniteGradedRing::create(add, mul, 1));
  }

  TEST_CASE("ideal closure") {
    const auto r8 = cyclic(8);
    CHECK(ideal(r8, {2}).elements() == oracle::principal(2, 8));
    CHECK(ideal(cyclic(6), {}).size() == 1);
    const auto d = dualNumbersZ2();
    CHECK(asSet(ideal(d, {2}).elements()) == std::set<Elem>{0, 2});
    CHECK(ideal(d, {3}).size() == 4);  // 1 + x is a unit
  }

  TEST_CASE("ideal closure of a non-graded ideal reports not-graded") {
    // In Z_4[x]/(x^2), (2 + x) = {0, 2+x, 2x, 2+3x} misses the component 2.
    const auto r = makeQuotientPolyRing(4, 0, 1, z2());
    const Elem twoPlusX = 2 + 4 * 1;
    try {
      idealClosure(r, std::vector<Elem>{twoPlusX});
      FAIL("expected not-graded");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotGraded);
      CHECK_FALSE(e.witness().empty());
    }
  }

  TEST_CASE("graded ideal enumeration matches divisor counts and brute force") {
    for (std::uint32_t n : {2u, 3u, 4u, 6u, 8u, 9u, 12u}) {
      const auto r = cyclic(n);
      const auto ideals = enumerateGradedIdeals(r);
      CHECK(ideals.size() == oracle::divisorCount(n));
      const auto brute = bruteForceGradedIdeals(*r);
      REQUIRE(brute.size() == ideals.size());
      for (std::size_t i = 0; i < brute.size(); ++i) CHECK(brute[i] == ideals[i].elements());
    }
    const auto ideals8 = enumerateGradedIdeals(cyclic(8));
    CHECK(ideals8[0].elements() == oracle::principal(8, 8));
    CHECK(ideals8[1].elements() == oracle::principal(4, 8));
    CHECK(ideals8[2].elements() == oracle::principal(2, 8));
    CHECK(ideals8[3].elements() == oracle::principal(1, 8));
    CHECK(enumerateGradedIdeals(cyclic(3)).size() == 2);
  }

  TEST_CASE("ideal powers") {
    const auto r8 = cyclic(8);
    const auto two = ideal(r8, {2});
    CHECK(idealPower(two, 1) == two);
    CHECK(idealPower(two, 2).elements() == oracle::principal(4, 8));
    CHECK(idealPower(two, 3).size() == 1);
    CHECK(idealPower(two, 7).size() == 1);
    CHECK(powerStabilizationIndex(two) == 3);
    CHECK_THROWS_AS(idealPower(two, 0), Error);
    CHECK(idealProduct(two, ideal(r8, {4})).size() == 1);
    CHECK(idealSum(ideal(r8, {4}), two) == two);
  }

  TEST_CASE("prime ideals") {
    const auto r8 = cyclic(8), r6 = cyclic(6);
    CHECK(isGradedPrimeIdeal(ideal(r8, {2})));
    const auto zero6 = checkGradedPrimeIdeal(ideal(r6, {}));
    CHECK_FALSE(zero6.holds);
    REQUIRE(zero6.witness);
    CHECK((zero6.witness->r * zero6.witness->s) % 6 == 0);
    CHECK(zero6.witness->r % 6 != 0);
    CHECK(zero6.witness->s % 6 != 0);
    CHECK_FALSE(isGradedPrimeIdeal(ideal(r8, {1})));
  }

  TEST_CASE("semiprime ideals") {
    const auto r8 = cyclic(8);
    CHECK(isGradedSemiprimeIdeal(ideal(r8, {2})));
    const auto four = checkGradedSemiprimeIdeal(ideal(r8, {4}));
    CHECK_FALSE(four.holds);
    REQUIRE(four.witness);
    CHECK(four.witness->r == 2);
    CHECK(four.witness->x == 1);
    CHECK(four.witness->n == 2);
    CHECK(isGradedSemiprimeIdeal(ideal(cyclic(6), {})));
    CHECK_FALSE(isGradedSemiprimeIdeal(ideal(r8, {1})));
  }

  TEST_CASE("semiprime ideals of Z_n agree with squarefree arithmetic") {
    for (std::uint32_t n = 2; n <= 16; ++n) {
      const auto r = cyclic(n);
      for (std::uint32_t d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        // dZ_n is semiprime iff d is squarefree (d | n, d > 1).
        CHECK_MESSAGE(isGradedSemiprimeIdeal(ideal(r, {d % n})) == oracle::squarefree(d), "n=" << n << " d=" << d);
      }
    }
  }

  TEST_CASE("primary ideals") {
    const auto r8 = cyclic(8), r6 = cyclic(6);
    CHECK(isGradedPrimaryIdeal(ideal(r8, {4})));
    CHECK(isGradedPrimaryIdeal(ideal(r8, {})));
    const auto v = checkGradedPrimaryIdeal(ideal(r6, {}));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK((v.witness->r * v.witness->s) % 6 == 0);
  }

  TEST_CASE("maximal ideals") {
    const auto r8 = cyclic(8);
    CHECK(isGradedMaximalIdeal(ideal(r8, {2})));
    const auto v = checkGradedMaximalIdeal(ideal(r8, {4}));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(v.witness->elements() == oracle::principal(2, 8));
    CHECK(isGradedMaximalIdeal(ideal(cyclic(3), {})));
    CHECK_FALSE(isGradedMaximalIdeal(ideal(r8, {1})));
  }

  TEST_CASE("graded radical") {
    const auto r8 = cyclic(8);
    CHECK(gradedRadical(ideal(r8, {4})).elements() == oracle::principal(2, 8));
    CHECK(gradedRadical(ideal(r8, {2})).elements() == oracle::principal(2, 8));
    CHECK(gradedRadical(ideal(cyclic(6), {})).size() == 1);
    const auto d = dualNumbersZ2();
    // x^2 = 0, so x lies in the radical of {0}.
    CHECK(asSet(gradedRadical(ideal(d, {})).elements()) == std::set<Elem>{0, 2});
  }

  TEST_CASE("exponent bound is the ring order") {
    CHECK(exponentBound(*cyclic(12)) == 12);
    CHECK(exponentBound(*dualNumbersZ2()) == 4);
  }
}
