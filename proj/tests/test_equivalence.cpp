#include "doctest.h"
#include "mixbraid/equivalence.hpp"
#include "mixbraid/errors.hpp"
#include "support.hpp"

using namespace mixbraid;
using namespace testing_support;

TEST_SUITE("equivalence") {

TEST_CASE("canonical keys") {
  CHECK(canonical_key(W("a1 a1^-1", 2, 1)) == canonical_key(MixedBraidWord(2, 1)));
  CHECK(canonical_key(W("s1 s2 s1", 1, 3)) == canonical_key(W("s2 s1 s2", 1, 3)));
  CHECK_FALSE(canonical_key(W("a1 a2", 2, 1)) == canonical_key(W("a2 a1", 2, 1)));
  CHECK_FALSE(canonical_key(MixedBraidWord(1, 2)) == canonical_key(MixedBraidWord(2, 1)));
  CHECK(canonical_key(W("a1", 2, 1)).to_string() != canonical_key(W("a2", 2, 1)).to_string());
}

TEST_CASE("one-step searches") {
  const ManifoldSpec hopf = preset("hopf");
  const SearchResult twist =
      bounded_search(W("a1", 2, 1), W("a2^-1 a1 a2", 2, 1), hopf, SearchBudget{});
  REQUIRE(twist.certificate.has_value());
  CHECK(twist.certificate->moves.size() == 1);
  CHECK(move_type(twist.certificate->moves.front()) == "twist");
  CHECK(replays(*twist.certificate, hopf));

  const SearchResult same = bounded_search(W("a1 a1^-1 a2", 2, 1), W("a2", 2, 1), hopf, {});
  REQUIRE(same.certificate.has_value());
  CHECK(same.certificate->moves.empty());

  const SearchResult stab = bounded_search(W("a1", 2, 1), W("a1 s1", 2, 2), hopf, {});
  REQUIRE(stab.certificate.has_value());
  CHECK(replays(*stab.certificate, hopf));
}

TEST_CASE("winding pruning") {
  const ManifoldSpec hopf = preset("hopf");
  SearchBudget budget;
  budget.max_depth = 2;
  const SearchResult r = bounded_search(W("a1", 2, 1), W("a1^2", 2, 1), hopf, budget);
  CHECK_FALSE(r.certificate.has_value());
  CHECK(r.stats.pruned_by_winding);
  CHECK(r.stats.expanded == 0);

  // The trefoil is a knot: a1 and a2 sit on the same component.
  const SearchResult t = bounded_search(W("a1", 2, 1), W("a2", 2, 1), preset("trefoil"), budget);
  CHECK_FALSE(t.stats.pruned_by_winding);
  CHECK(t.stats.expanded > 0);
}

TEST_CASE("surgery searches use band moves") {
  const ManifoldSpec lens = preset("unknot/0");
  const SearchResult r = bounded_search(MixedBraidWord(1, 1), W("s1", 1, 2), lens, {});
  REQUIRE(r.certificate.has_value());
  CHECK(replays(*r.certificate, lens));
}

TEST_CASE("candidate moves") {
  const auto moves = candidate_moves(W("a1 s1", 2, 2), preset("hopf"), 3, true);
  REQUIRE(moves.size() >= 4);
  CHECK(std::holds_alternative<MarkovConj>(moves.front()));
  bool destab = false;
  for (const auto& m : moves) {
    if (const auto* mm = std::get_if<MMove>(&m)) {
      destab = destab || mm->destabilize;
    }
    CHECK(move_type(m) != "band");
  }
  CHECK(destab);
  for (const auto& m : candidate_moves(W("a1", 2, 3), preset("hopf"), 3, true)) {
    if (const auto* mm = std::get_if<MMove>(&m)) {
      CHECK(mm->destabilize);
    }
  }
}

TEST_CASE("random walks") {
  const ManifoldSpec spec = preset("borromean");
  const MixedBraidWord start = W("a1 a2^-1 a3", 3, 1);
  const RandomWalk a = random_walk(start, spec, 6, 42);
  const RandomWalk b = random_walk(start, spec, 6, 42);
  CHECK(a.word == b.word);
  CHECK(a.certificate.moves.size() == 6);
  CHECK(replays(a.certificate, spec));
  CHECK(component_winding(a.word, spec) == component_winding(start, spec));

  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const MixedBraidWord w = random_mixed(rng, 3, uniform(rng, 1, 2), 6);
    const RandomWalk walk = random_walk(w, preset("dc:3/1,0,-1"), 4, 1000 + t);
    CHECK(replays(walk.certificate, preset("dc:3/1,0,-1")));
    CHECK(walk.certificate.end == walk.word);
  }
}

TEST_CASE("searches recover short invertible walks") {
  Rng rng(77);
  RandomWalkOptions opts;
  opts.invertible_only = true;
  for (int t = 0; t < 10; ++t) {
    const ManifoldSpec spec = preset(t % 2 == 0 ? "hopf" : "trefoil");
    const MixedBraidWord w = random_mixed(rng, 2, uniform(rng, 1, 2), 5);
    const RandomWalk walk = random_walk(w, spec, 2, 500 + t, opts);
    SearchBudget budget;
    budget.max_depth = 2;
    const SearchResult r = bounded_search(w, walk.word, spec, budget);
    REQUIRE(r.certificate.has_value());
    CHECK(replays(*r.certificate, spec));
  }
}

TEST_CASE("certificate JSON") {
  const ManifoldSpec spec = preset("hopf/1,1");
  const RandomWalk walk = random_walk(W("a1 a2", 2, 1), spec, 5, 9);
  const std::string text = certificate_to_json(walk.certificate);
  const Certificate back = certificate_from_json(text);
  CHECK(back.start == walk.certificate.start);
  CHECK(back.end == walk.certificate.end);
  CHECK(back.moves == walk.certificate.moves);
  CHECK(certificate_to_json(back) == text);
  CHECK_THROWS_AS(certificate_from_json("[]"), Error);
  CHECK_THROWS_AS(
      certificate_from_json(R"({"start":"","m":1,"n":1,"moves":[{"type":"warp","params":{}}],"end":"","end_n":1})"),
      Error);
}

}  // TEST_SUITE
