#include <doctest.h>

#include <numeric>

#include "gqs/error.hpp"
#include "gqs/hom.hpp"
#include "support.hpp"

using namespace gqs;
using fixtures::cyclic;
using fixtures::splitPair;
using fixtures::sub;

namespace {

std::vector<Elem> identityTable(std::uint32_t n) {
  std::vector<Elem> t(n);
  std::iota(t.begin(), t.end(), 0);
  return t;
}

}  // namespace

TEST_SUITE("hom") {
  TEST_CASE("identity and projections are graded homomorphisms") {
    const auto z8 = ringAsModule(cyclic(8));
    const auto id = GradedHomomorphism::make(z8, z8, identityTable(8));
    CHECK(kernel(id).size() == 1);
    CHECK(isEpimorphism(id));

    const auto p = quotientProjection(sub(z8, {4}));
    CHECK(isEpimorphism(p));
    CHECK(kernel(p).elements() == oracle::principal(4, 8));
    const auto img = image(p, sub(z8, {2}));
    CHECK(img.size() == 2);
    CHECK(preimage(p, img).elements() == oracle::principal(2, 8));
    CHECK(preimage(p, wholeModule(p.target())).size() == 8);
  }

  TEST_CASE("image and preimage under the identity") {
    const auto z8 = ringAsModule(cyclic(8));
    const auto id = GradedHomomorphism::make(z8, z8, identityTable(8));
    for (const auto& n : enumerateGradedSubmodules(z8)) {
      CHECK(image(id, n) == n);
      CHECK(preimage(id, n) == n);
    }
    CHECK(image(id, zeroSubmodule(z8)).size() == 1);
  }

  TEST_CASE("rejections name the violated axiom") {
    const auto m = splitPair();
    // (a, b) -> (b, a) is additive and linear but swaps degrees.
    try {
      GradedHomomorphism::make(m, m, {0, 2, 1, 3});
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotGradedHom);
    }
    const auto z4 = ringAsModule(cyclic(4));
    try {
      GradedHomomorphism::make(z4, z4, {0, 1, 1, 0});
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotAdditive);
    }
    CHECK_THROWS_AS(GradedHomomorphism::make(z4, ringAsModule(cyclic(4)), identityTable(4)), Error);
  }

  TEST_CASE("non-linear additive maps are rejected") {
    // Over Z_2[x]/(x^2) with trivial grading, a + b x -> b + a x is additive
    // but f(x * 1) = 1 while x * f(1) = 0.
    const auto r = makeQuotientPolyRing(2, 0, 0, fixtures::z2());
    const auto m = ringAsModule(r);
    try {
      GradedHomomorphism::make(m, m, {0, 2, 1, 3});
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotLinear);
    }
  }

  TEST_CASE("zero maps and inclusions") {
    const auto r8 = cyclic(8);
    const auto z8 = ringAsModule(r8);
    const auto zero = GradedHomomorphism::make(z8, z8, std::vector<Elem>(8, 0));
    CHECK(kernel(zero).size() == 8);
    CHECK_FALSE(isEpimorphism(zero));

    const std::vector<CyclicFactor> f{{2, 0}};
    const auto small = productModule(f, r8);
    const auto inclusion = linearExtension(small, z8, {1}, {4});
    CHECK(inclusion(1) == 4);
    CHECK_FALSE(isEpimorphism(inclusion));
    CHECK(kernel(inclusion).size() == 1);
  }

  TEST_CASE("linear extension rejects conflicting images") {
    const auto z8 = ringAsModule(cyclic(8));
    CHECK_THROWS_AS(linearExtension(z8, z8, {1, 2}, {1, 3}), Error);
  }

  TEST_CASE("first isomorphism sanity: preimage of image is N + ker") {
    const std::vector<CyclicFactor> f{{4, 0}, {2, 1}};
    const auto m = productModule(f, cyclic(4));
    const auto subs = enumerateGradedSubmodules(m);
    for (const auto& k : subs) {
      const auto p = quotientProjection(k);
      for (const auto& n : subs) CHECK(preimage(p, image(p, n)) == submoduleSum(n, k));
    }
  }

  TEST_CASE("graded endomorphisms of small modules") {
    // End(Z_n) as a Z_n-module has n elements (multiplication by a scalar).
    CHECK(gradedEndomorphisms(ringAsModule(cyclic(6))).size() == 6);
    // Split Z_2 x Z_2 over Z_2: each factor maps into its own degree.
    CHECK(gradedEndomorphisms(splitPair()).size() == 4);
    // Trivially graded Z_2 x Z_2: all 2x2 matrices over Z_2.
    const std::vector<CyclicFactor> f{{2, 0}, {2, 0}};
    CHECK(gradedEndomorphisms(productModule(f, cyclic(2))).size() == 16);
  }
}
