#include "doctest.h"
#include "mixbraid/garside.hpp"
#include "mixbraid/manifold.hpp"
#include "mixbraid/mixed_word.hpp"
#include "support.hpp"

using namespace mixbraid;
using namespace testing_support;

TEST_SUITE("mixed-braid") {

TEST_CASE("embedding examples") {
  CHECK(embed(W("S1", 2, 2)) == B("s1", 4));
  CHECK(embed(W("s1", 2, 2)) == B("s3", 4));
  CHECK(embed(W("a2", 2, 1)) == B("s2 s2", 3));
  CHECK(embed(W("a1", 2, 1)) == B("s2 s1 s1 s2^-1", 3));
  CHECK(embed(W("a1^-1", 3, 1)) == B("s3 s2 s1^-1 s1^-1 s2^-1 s3^-1", 4));
}

TEST_CASE("word validation") {
  CHECK_THROWS_AS(MixedBraidWord(2, 0), RangeError);
  CHECK_THROWS_AS(MixedBraidWord(2, 1, {MixedLetter::moving(1)}), RangeError);
  CHECK_THROWS_AS(MixedBraidWord(2, 2, {MixedLetter::fixed(2)}), RangeError);
  CHECK_THROWS_AS(MixedBraidWord(2, 2, {MixedLetter::loop(3)}), RangeError);
  CHECK(W("a1 s1", 1, 2).is_algebraic());
  CHECK_FALSE(W("a1 S1", 2, 1).is_algebraic());
}

TEST_CASE("winding vectors") {
  CHECK(winding_vector(W("a1 a2^-1 a1 s1", 2, 2)) == WindingVector{2, -1});
  CHECK(winding_vector(MixedBraidWord(3, 1)) == WindingVector{0, 0, 0});
  CHECK(winding_vector(W("a2^-1 a1 a2", 2, 1)) == WindingVector{1, 0});

  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const int m = uniform(rng, 1, 4);
    const int n = uniform(rng, 1, 3);
    const MixedBraidWord u = random_mixed(rng, m, n, 12, true);
    const MixedBraidWord v = random_mixed(rng, m, n, 12, true);
    WindingVector sum = winding_vector(u);
    const WindingVector wv = winding_vector(v);
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] += wv[i];
    }
    CHECK(winding_vector(multiply(u, v)) == sum);
  }
}

TEST_CASE("embedding is letterwise multiplicative") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const int m = uniform(rng, 1, 4);
    const int n = uniform(rng, 1, 3);
    const MixedBraidWord u = random_mixed(rng, m, n, 10, true);
    const MixedBraidWord v = random_mixed(rng, m, n, 10, true);
    CHECK(embed(multiply(u, v)) == multiply(embed(u), embed(v)));
    CHECK(embed(invert(u)) == invert(embed(u)));
  }
}

TEST_CASE("embedding is injective on the free group B_{m,1}") {
  // B_{m,1} is free on a_1..a_m: distinct reduced words are distinct elements.
  Rng rng(12);
  int compared = 0;
  for (int t = 0; t < 400 && compared < 200; ++t) {
    const int m = uniform(rng, 1, 3);
    const MixedBraidWord u = free_reduce(random_mixed(rng, m, 1, 12));
    const MixedBraidWord v = free_reduce(random_mixed(rng, m, 1, 12));
    if (u == v) {
      continue;
    }
    ++compared;
    CHECK_FALSE(mixed_equal(u, v));
  }
  CHECK(compared == 200);
}

TEST_CASE("relator rewrites are the only coincidences for n > 1") {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const int m = uniform(rng, 1, 3);
    const int n = uniform(rng, 2, 3);
    const MixedBraidWord u = random_mixed(rng, m, n, 12);
    const int i = uniform(rng, 1, m);
    // a_i s1 a_i s1 (s1 a_i s1 a_i)^-1 is a defining relator.
    const MixedBraidWord rel = W("a" + std::to_string(i) + " s1 a" + std::to_string(i) +
                                    " s1 a" + std::to_string(i) + "^-1 s1^-1 a" +
                                    std::to_string(i) + "^-1 s1^-1",
                                m, n);
    const MixedBraidWord v = multiply(u, rel);
    CHECK(mixed_equal(u, v));
    const MixedBraidWord w = multiply(u, W("a" + std::to_string(i), m, n));
    CHECK_FALSE(mixed_equal(u, w));
  }
}

TEST_CASE("presentation holds for m, n <= 4") {
  const PresentationReport trivial = check_presentation(1, 1);
  CHECK(trivial.instances.empty());
  CHECK(trivial.all_hold());

  const PresentationReport three = check_presentation(3, 3);
  int commutations = 0;
  for (const auto& inst : three.instances) {
    commutations += inst.family == "loop commutation" ? 1 : 0;
  }
  CHECK(commutations == 3);

  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const PresentationReport report = check_presentation(m, n);
      for (const auto& inst : report.instances) {
        CHECK_MESSAGE(inst.holds, "m=" << m << " n=" << n << " " << inst.family
                                       << ": " << inst.lhs << " = " << inst.rhs);
      }
    }
  }
}

TEST_CASE("strand permutation of fixed braids") {
  CHECK(strand_permutation(preset("hopf")).is_identity());
  CHECK(strand_permutation(preset("trefoil")) == Permutation({1, 0}));
  for (int m = 2; m <= 8; ++m) {
    CHECK(strand_permutation(preset("dc:" + std::to_string(m))).is_identity());
  }
}

}  // TEST_SUITE
