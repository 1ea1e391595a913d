#include "doctest.h"
#include "mixbraid/combing.hpp"
#include "mixbraid/errors.hpp"
#include "mixbraid/ground_truth.hpp"
#include "mixbraid/manifold.hpp"
#include "support.hpp"

using namespace mixbraid;
using namespace testing_support;

TEST_SUITE("manifolds") {

TEST_CASE("presets") {
  const ManifoldSpec hopf = preset("hopf");
  CHECK(hopf.m == 2);
  CHECK(hopf.fixed_word == B("s1^2", 2));
  CHECK(hopf.is_pure());
  CHECK(hopf.component_count() == 2);
  CHECK(hopf.kind == ManifoldKind::complement);

  const ManifoldSpec tref = preset("preset:trefoil");
  CHECK(tref.fixed_word == B("s1^3", 2));
  CHECK_FALSE(tref.is_pure());
  CHECK(tref.components == std::vector<std::vector<int>>{{1, 2}});
  CHECK(tref.component_of(2) == 1);

  const ManifoldSpec br = preset("borromean");
  CHECK(br.m == 3);
  CHECK(br.is_pure());
  CHECK(br.fixed_word == B("s1^-1 s2 s1^-1 s2 s1^-1 s2", 3));

  CHECK(preset("identity:4").fixed_word.empty());
  CHECK(preset("unknot").m == 1);

  const ManifoldSpec lens = preset("hopf/2,-3");
  CHECK(lens.kind == ManifoldKind::surgery);
  CHECK(lens.framing(1) == 2);
  CHECK(lens.framing(2) == -3);
  CHECK_THROWS_AS(hopf.framing(1), MoveError);

  CHECK_THROWS_AS(preset("nope"), SpecError);
  CHECK_THROWS_AS(preset("dc:1"), SpecError);
  CHECK_THROWS_AS(preset("hopf/1"), SpecError);
  CHECK_THROWS_AS(preset("identity:0"), SpecError);
}

TEST_CASE("daisy chains are pure") {
  for (int m = 2; m <= 8; ++m) {
    const ManifoldSpec dc = preset("dc:" + std::to_string(m));
    CHECK(dc.m == m);
    CHECK(strand_permutation(dc).is_identity());
    CHECK(dc.component_count() == m);
  }
}

TEST_CASE("validation") {
  ManifoldSpec spec = preset("hopf");
  spec.components = {{1, 2}};
  CHECK_THROWS_AS(validate(spec), SpecError);
  spec = preset("hopf");
  spec.framings = {1, 1};
  CHECK_THROWS_AS(validate(spec), SpecError);
  CHECK_NOTHROW(validate(preset("dc:5/0,0,0,0,1")));
}

TEST_CASE("JSON round trip") {
  for (const char* name : {"unknot", "hopf/1,-1", "trefoil", "borromean/0,2,-1", "dc:5"}) {
    const ManifoldSpec spec = preset(name);
    const ManifoldSpec back = spec_from_json(spec_to_json(spec));
    CHECK(back.m == spec.m);
    CHECK(back.fixed_word == spec.fixed_word);
    CHECK(back.components == spec.components);
    CHECK(back.framings == spec.framings);
    CHECK(back.kind == spec.kind);
  }
  const ManifoldSpec parsed =
      spec_from_json(R"({"m": 2, "fixed_word": "S1^2", "kind": "surgery", "framings": [1, 0]})");
  CHECK(parsed.fixed_word == B("s1^2", 2));
  CHECK(parsed.framing(2) == 0);
  CHECK_THROWS_AS(spec_from_json(R"({"m": 2, "fixed_word": "S3"})"), Error);
  CHECK_THROWS_AS(spec_from_json("{"), Error);
  CHECK_THROWS_AS(spec_from_json(R"({"m": 2, "fixed_word": "S1", "components": [[1], [2]]})"),
                  SpecError);
}

TEST_CASE("linking numbers") {
  CHECK(linking_number(preset("hopf"), 1, 2) == 1);
  CHECK(linking_number(preset("identity:3"), 1, 3) == 0);
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      if (j != k) {
        CHECK(linking_number(preset("borromean"), j, k) == 0);
      }
    }
  }
  // Daisy chain: consecutive components link once, m - 1 links in all.
  for (int m = 3; m <= 6; ++m) {
    const ManifoldSpec dc = preset("dc:" + std::to_string(m));
    long long total = 0;
    for (int j = 1; j <= m; ++j) {
      for (int k = j + 1; k <= m; ++k) {
        total += std::llabs(linking_number(dc, j, k));
      }
    }
    CHECK(total == m - 1);
  }
}

TEST_CASE("closed forms") {
  CHECK(expected(preset("hopf"), {TruthKind::rho, 1, 1, 1}) == W("a2^-1 a1 a2", 2, 1));
  CHECK(expected(preset("hopf"), {TruthKind::r, 1, 1, 1}) == W("s1 a2 s1^-1", 2, 2));
  CHECK(mixed_equal(expected(preset("trefoil"), {TruthKind::rho, 1, 1, 1}),
                    W("a2^-1 a1^-1 a2 a1 a2", 2, 1)));
  CHECK_THROWS_AS(expected(preset("identity:2"), {TruthKind::trefoil_r, 0, 1, 1}), SpecError);
}

TEST_CASE("every preset reproduces its closed forms") {
  for (const char* name :
       {"identity:3", "hopf", "dc:3", "dc:4", "dc:5", "dc:6", "borromean", "trefoil"}) {
    const VerifyReport report = verify_preset(name, 3);
    CHECK_FALSE(report.entries.empty());
    for (const VerifyEntry& e : report.entries) {
      CHECK_MESSAGE(e.pass, name << " " << e.item << ": " << e.computed << " vs " << e.expected);
    }
  }
}

TEST_CASE("loop words of pure specs wind once around their own loop") {
  for (const char* name : {"hopf", "borromean", "dc:4", "dc:5", "dc:6"}) {
    const ManifoldSpec spec = preset(name);
    for (int n = 1; n <= 2; ++n) {
      for (int i = 1; i <= spec.m; ++i) {
        WindingVector unit(static_cast<std::size_t>(spec.m), 0);
        unit[static_cast<std::size_t>(i - 1)] = 1;
        CHECK(winding_vector(compute_rho(spec, i, n)) == unit);
      }
    }
  }
}

}  // TEST_SUITE
