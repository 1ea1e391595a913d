#include <thread>

#include "doctest.h"
#include "mixbraid/cabling.hpp"
#include "mixbraid/combing.hpp"
#include "mixbraid/ground_truth.hpp"
#include "mixbraid/manifold.hpp"
#include "mixbraid/moves.hpp"
#include "support.hpp"

using namespace mixbraid;
using namespace testing_support;

namespace {

WindingVector plus(WindingVector a, const WindingVector& b, long long scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] += scale * b[i];
  }
  return a;
}

WindingVector unit(int m, int k, long long scale = 1) {
  WindingVector v(static_cast<std::size_t>(m), 0);
  v[static_cast<std::size_t>(k - 1)] = scale;
  return v;
}

MixedBraidWord replay_sequence(const MoveSequence& seq) {
  const ManifoldSpec none = make_spec("identity", BraidWord(seq.start.m()));
  MixedBraidWord w = seq.start;
  for (const MoveRecord& move : seq.moves) {
    w = apply_move(w, move, none);
  }
  return w;
}

}  // namespace

TEST_SUITE("moves") {

TEST_CASE("M-moves") {
  CHECK(m_move(W("a1", 1, 1), MixedBraidWord(1, 1), 1) == W("a1 s1", 1, 2));
  CHECK(m_move(MixedBraidWord(2, 1), MixedBraidWord(2, 1), -1) == W("s1^-1", 2, 2));
  CHECK(m_move(W("a1", 2, 1), W("a2", 2, 1), 1) == W("a1 s1 a2", 2, 2));
  CHECK_THROWS_AS(m_move(W("S1", 2, 1), MixedBraidWord(2, 1), 1), MoveError);

  CHECK(m_destabilize(W("a1 s2 s1", 2, 3), 1) == W("a1 s1", 2, 2));
  CHECK_THROWS_AS(m_destabilize(W("s2 a1 s2", 2, 3), 0), MoveError);
  CHECK_THROWS_AS(m_destabilize(W("a1", 2, 1), 0), MoveError);
}

TEST_CASE("Markov conjugation") {
  CHECK(markov_conjugate(W("s1", 1, 2), 1, 1) == W("s1", 1, 2));
  CHECK(markov_conjugate(W("a1", 1, 2), 1, 1) == W("s1 a1 s1^-1", 1, 2));
  CHECK_THROWS_AS(markov_conjugate(W("a1", 1, 2), 2, 1), RangeError);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const MixedBraidWord beta = free_reduce(random_mixed(rng, 2, 3, 10));
    CHECK(markov_conjugate(markov_conjugate(beta, 2, 1), 2, -1) == beta);
  }
}

TEST_CASE("twisted conjugation") {
  const ManifoldSpec hopf = preset("hopf");
  CHECK(mixed_equal(twisted_conjugate(W("a1", 2, 1), 1, 1, hopf), W("a2^-1 a1 a2", 2, 1)));

  Rng rng(4);
  const ManifoldSpec id = preset("identity:3");
  for (int t = 0; t < 30; ++t) {
    const MixedBraidWord beta = random_mixed(rng, 3, 2, 8);
    const int i = uniform(rng, 1, 3);
    const std::string ai = "a" + std::to_string(i);
    CHECK(twisted_conjugate(beta, i, 1, id) ==
          free_reduce(multiply({W(ai + "^-1", 3, 2), beta, W(ai, 3, 2)})));
    CHECK(twisted_conjugate(beta, i, -1, id) ==
          free_reduce(multiply({W(ai, 3, 2), beta, W(ai + "^-1", 3, 2)})));
  }

  const MixedBraidWord tw = twisted_conjugate(MixedBraidWord(2, 1), 1, 1, preset("trefoil"));
  CHECK(winding_vector(tw) == WindingVector{-1, 1});
  CHECK(mixed_equal(tw, multiply(W("a1^-1", 2, 1), compute_rho(preset("trefoil"), 1))));
}

TEST_CASE("L-moves") {
  CHECK(l_move(MixedBraidWord(3, 1), MixedBraidWord(3, 1), LMoveKind::over, 1, 1) ==
        W("s1", 3, 2));
  CHECK(l_move(W("a1", 2, 2), MixedBraidWord(2, 2), LMoveKind::over, 1, 1) ==
        W("s1^-1 s2^-1 a1 s1^-1 s2 s1 s2 s1", 2, 3));
  CHECK_THROWS_AS(l_move(W("a1", 2, 2), MixedBraidWord(2, 2), LMoveKind::over, 3, 1),
                  RangeError);
}

TEST_CASE("L-moves factor into an M-move and Markov conjugations") {
  Rng rng(100);
  for (int t = 0; t < 100; ++t) {
    const int m = uniform(rng, 1, 3);
    const int n = uniform(rng, 1, 3);
    const MixedBraidWord b1 = random_mixed(rng, m, n, 8);
    const MixedBraidWord b2 = random_mixed(rng, m, n, 8);
    const int i = uniform(rng, 1, n);
    const int sign = random_sign(rng);
    for (LMoveKind kind : {LMoveKind::over, LMoveKind::under}) {
      const MoveSequence seq = l_move_factorization(b1, b2, kind, i, sign);
      CHECK(mixed_equal(seq.start, multiply(b1, b2)));
      CHECK(mixed_equal(replay_sequence(seq), l_move(b1, b2, kind, i, sign)));
    }
  }
}

TEST_CASE("lambda and framing loops") {
  CHECK(framing_loop(1, 1, 1) == W("s1 a1 s1^-1", 1, 2));
  CHECK(framing_loop(3, 2, 0) == W("a2", 3, 1));
  CHECK(lambda(1, 2) == W("s2 s1", 1, 3));
  CHECK(lambda(2, 0).empty());
}

TEST_CASE("band substitution") {
  CHECK(band_substitute(W("a2", 2, 1), 2) == W("s1^2 a2", 2, 2));
  CHECK(band_substitute(W("a1", 2, 1), 2) == W("s1^2 a1 s1^-2", 2, 2));
  CHECK(band_substitute(W("a2", 2, 1), 1) == W("a2", 2, 2));
  CHECK(band_substitute(W("a1^-1", 1, 2), 1) ==
        W("a1^-1 s1^-1 s2^-2 s1", 1, 3));

  Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    const int m = uniform(rng, 1, 4);
    const int n = uniform(rng, 1, 3);
    const MixedBraidWord beta = random_mixed(rng, m, n, 12);
    const int k = uniform(rng, 1, m);
    CHECK(winding_vector(band_substitute(beta, k)) == winding_vector(beta));
  }
}

TEST_CASE("algebraic band moves") {
  for (int p : {-2, 0, 1, 3}) {
    const ManifoldSpec lens = preset("unknot/" + std::to_string(p));
    const MixedBraidWord expected = free_reduce(multiply(
        {W("s1^2 a1", 1, 2), power(W("s1 a1 s1^-1", 1, 2), p), W("s1", 1, 2)}));
    CHECK(algebraic_band_move(W("a1", 1, 1), MixedBraidWord(1, 1), 1, 1, lens) == expected);
  }
  const MixedBraidWord e(1, 1);
  CHECK(algebraic_band_move(e, e, 1, 1, preset("unknot/0")) == W("s1", 1, 2));
  CHECK(algebraic_band_move(e, e, 1, 1, preset("unknot/1")) == W("s1 a1", 1, 2));
  CHECK_THROWS_AS(algebraic_band_move(W("a1", 2, 1), MixedBraidWord(2, 1), 1, 1,
                                      preset("trefoil/1")),
                  MoveError);
  CHECK_THROWS_AS(algebraic_band_move(e, e, 1, 1, preset("unknot")), MoveError);
}

TEST_CASE("r words") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 3; ++k) {
      CHECK(compute_r(preset("identity:3"), k, n).empty());
    }
  }
  CHECK(mixed_equal(compute_r(preset("hopf"), 1, 1), W("s1 a2 s1^-1", 2, 2)));
  CHECK(mixed_equal(compute_r(preset("borromean"), 2, 1),
                    W("s1 a1^-1 a3^-1 a1 a3 s1^-1", 3, 2)));
  CHECK_THROWS_AS(compute_r(preset("trefoil"), 1, 1), MoveError);
}

TEST_CASE("r through parallel cabling agrees with the lambda placement") {
  for (const char* name : {"hopf", "borromean", "dc:4", "dc:5"}) {
    const ManifoldSpec spec = preset(name);
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= spec.m; ++k) {
        CHECK_MESSAGE(mixed_equal(compute_r(spec, k, n), compute_parallel_r(spec, k, n)),
                      name << " k=" << k << " n=" << n);
      }
    }
  }
}

TEST_CASE("cabled substitution reproduces the pure substitution") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= m; ++k) {
        for (int i = 1; i <= m; ++i) {
          for (int sign : {1, -1}) {
            const MixedBraidWord letter(m, n, {MixedLetter::loop(i, sign)});
            CHECK(mixed_equal(cabled_loop_substitute(m, n, {k}, i, sign),
                              band_substitute(letter, k)));
          }
        }
      }
    }
  }
}

TEST_CASE("combed band moves") {
  const ManifoldSpec lens = preset("identity:2/3,-1");
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const MixedBraidWord b1 = random_mixed(rng, 2, 2, 6);
    const MixedBraidWord b2 = random_mixed(rng, 2, 2, 6);
    for (int k = 1; k <= 2; ++k) {
      const MixedBraidWord combed = combed_band_move(b1, b2, k, 1, lens);
      CHECK(combed == algebraic_band_move(b1, b2, k, 1, lens));
      // Connected sum of lens spaces: beta ~ t^{p_k} s_n^+-1 beta'.
      const MixedBraidWord direct = free_reduce(multiply(
          {band_substitute(b1, k), power(framing_loop(2, k, 2), lens.framing(k)),
           W("s2", 2, 3), band_substitute(b2, k)}));
      CHECK(combed == direct);
    }
  }
  const MixedBraidWord e(2, 1);
  CHECK(combed_band_move(e, e, 1, 1, preset("hopf/0,5")) == W("s1 s1 a2 s1^-1", 2, 2));
}

TEST_CASE("non-pure band moves") {
  const ManifoldSpec hopf = preset("hopf/2,-1");
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    const int n = uniform(rng, 1, 3);
    const MixedBraidWord b1 = random_mixed(rng, 2, n, 6);
    const MixedBraidWord b2 = random_mixed(rng, 2, n, 6);
    const int k = uniform(rng, 1, 2);
    const int sign = random_sign(rng);
    CHECK(nonpure_band_move(b1, b2, k, sign, hopf) ==
          combed_band_move(b1, b2, k, sign, hopf));
  }

  for (long long p : {-1LL, 0LL, 2LL}) {
    const ManifoldSpec tref = preset("trefoil/" + std::to_string(p));
    for (int n = 1; n <= 2; ++n) {
      const MixedBraidWord e(2, n);
      for (int sign : {1, -1}) {
        CHECK(mixed_equal(nonpure_band_move(e, e, 1, sign, tref),
                          trefoil_band(e, e, sign, p)));
      }
      for (int t = 0; t < 5; ++t) {
        const MixedBraidWord b1 = random_mixed(rng, 2, n, 5);
        const MixedBraidWord b2 = random_mixed(rng, 2, n, 5);
        CHECK(mixed_equal(nonpure_band_move(b1, b2, 1, 1, tref),
                          trefoil_band(b1, b2, 1, p)));
      }
    }
  }
}

TEST_CASE("winding laws") {
  Rng rng(10);
  const std::vector<ManifoldSpec> specs{preset("hopf/1,2"), preset("borromean/1,1,-1"),
                                        preset("identity:4/2,0,-3,1"), preset("dc:4/1,1,1,1")};
  for (int t = 0; t < 200; ++t) {
    const ManifoldSpec& spec = specs[static_cast<std::size_t>(t) % specs.size()];
    const int m = spec.m;
    const int n = uniform(rng, 1, 4);
    const MixedBraidWord b1 = random_mixed(rng, m, n, 8);
    const MixedBraidWord b2 = random_mixed(rng, m, n, 8);
    const MixedBraidWord beta = multiply(b1, b2);
    const WindingVector w = winding_vector(beta);
    const int sign = random_sign(rng);

    CHECK(winding_vector(m_move(b1, b2, sign)) == w);
    if (n > 1) {
      CHECK(winding_vector(markov_conjugate(beta, uniform(rng, 1, n - 1), sign)) == w);
    }
    CHECK(winding_vector(l_move(b1, b2, LMoveKind::over, uniform(rng, 1, n), sign)) == w);
    CHECK(winding_vector(l_move(b1, b2, LMoveKind::under, uniform(rng, 1, n), sign)) == w);

    const int i = uniform(rng, 1, m);
    CHECK(winding_vector(twisted_conjugate(beta, i, sign, spec)) ==
          plus(plus(w, unit(m, i), -sign), winding_vector(compute_rho(spec, i, n)), sign));

    const int k = uniform(rng, 1, m);
    const WindingVector band = plus(w, unit(m, k, spec.framing(k)));
    CHECK(winding_vector(algebraic_band_move(b1, b2, k, sign, spec)) == band);
    CHECK(winding_vector(combed_band_move(b1, b2, k, sign, spec)) ==
          plus(band, winding_vector(compute_r(spec, k, n))));
  }
}

TEST_CASE("linking numbers match r windings") {
  for (const char* name : {"hopf", "borromean", "dc:2", "dc:3", "dc:4", "dc:5", "dc:6"}) {
    const ManifoldSpec spec = preset(name);
    for (int k = 1; k <= spec.m; ++k) {
      const WindingVector w = winding_vector(compute_r(spec, k, 1));
      for (int j = 1; j <= spec.m; ++j) {
        const long long lk = j == k ? 0 : linking_number(spec, k, j);
        CHECK_MESSAGE(w[static_cast<std::size_t>(j - 1)] == lk,
                      name << " k=" << k << " j=" << j);
      }
    }
  }
  const ManifoldSpec br = preset("borromean");
  for (int j = 1; j <= 3; ++j) {
    for (int k = j + 1; k <= 3; ++k) {
      CHECK(linking_number(br, j, k) == 0);
    }
  }
  CHECK(linking_number(preset("hopf"), 1, 2) == 1);
}

TEST_CASE("inverse moves") {
  Rng rng(12);
  const ManifoldSpec spec = preset("borromean");
  for (int t = 0; t < 100; ++t) {
    const int n = uniform(rng, 1, 3);
    const MixedBraidWord beta = random_mixed(rng, 3, n, 8);
    std::vector<MoveRecord> moves{TwistedConj{uniform(rng, 1, 3), random_sign(rng)},
                                  MMove{random_sign(rng), static_cast<std::size_t>(uniform(
                                                              rng, 0, static_cast<int>(beta.size()))),
                                        false}};
    if (n > 1) {
      moves.push_back(MarkovConj{uniform(rng, 1, n - 1), random_sign(rng)});
    }
    for (const MoveRecord& move : moves) {
      const auto back = inverse(move);
      REQUIRE(back.has_value());
      const MixedBraidWord there = apply_move(beta, move, spec);
      const MixedBraidWord again = apply_move(there, *back, spec);
      CHECK(mixed_equal(again, beta));
    }
  }
  CHECK_FALSE(inverse(BandMove{1, 1, 0}).has_value());
  CHECK_FALSE(inverse(LMove{}).has_value());
}

TEST_CASE("loop word cache") {
  LoopWordCache cache;
  const ManifoldSpec spec = preset("dc:5");
  std::vector<MixedBraidWord> seen(8, MixedBraidWord(5, 1));
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < seen.size(); ++t) {
    threads.emplace_back([&, t] { seen[t] = cache.r(spec, 3, 2); });
  }
  for (auto& th : threads) {
    th.join();
  }
  for (const auto& w : seen) {
    CHECK(w == seen.front());
  }
  CHECK(cache.size() == 1);
  CHECK(cache.rho(spec, 2, 1) == compute_rho(spec, 2, 1));
  CHECK(cache.size() == 2);
}

}  // TEST_SUITE
