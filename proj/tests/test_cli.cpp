#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "mixbraid/word_text.hpp"
#include "support.hpp"

using namespace mixbraid;
using namespace testing_support;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("normal forms") {
  const Outcome r = run_cli({"nf", "--strands", "3", "s1^-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("infimum -1") != std::string::npos);
  CHECK(r.out.find("[3 1 2]") != std::string::npos);
}

TEST_CASE("equality") {
  CHECK(run_cli({"eq", "--m", "2", "--n", "1", "a1 a2", "a2 a1"}).code == 1);
  CHECK(run_cli({"eq", "--m", "1", "--n", "3", "s1 s2 s1", "s2 s1 s2"}).code == 0);
  const Outcome r = run_cli({"eq", "--m", "1", "--n", "1", "a1", "a1"});
  CHECK(r.out == "true\n");
}

TEST_CASE("embedding, combing and loop words") {
  CHECK(run_cli({"embed", "--m", "2", "--n", "1", "a1"}).out == "s2 s1^2 s2^-1\n");
  CHECK(run_cli({"comb", "--m", "2", "--n", "1", "S1^-1 a1"}).out.find("a1 a2 a1^-1") !=
        std::string::npos);
  const Outcome rho = run_cli({"rho", "--preset", "trefoil", "--i", "1"});
  CHECK(rho.code == 0);
  CHECK(rho.out.find("a2^-1 a1^-1 a2 a1 a2") != std::string::npos);
  CHECK(run_cli({"r", "--preset", "hopf", "--k", "1", "--n", "1"}).out.find("s1 a2 s1^-1") !=
        std::string::npos);
  CHECK(run_cli({"r", "--preset", "trefoil", "--k", "1", "--n", "1"}).code == 0);
}

TEST_CASE("moves") {
  const Outcome l = run_cli({"move", "--m", "2", "--n", "2", "--type", "l", "--kind", "over",
                             "--i", "1", "--sign", "+", "a1", ""});
  CHECK(l.code == 0);
  CHECK(parse_word(l.out.substr(0, l.out.find('\n')), 2, 3) ==
        W("s1^-1 s2^-1 a1 s1^-1 s2 s1 s2 s1", 2, 3));
  CHECK(run_cli({"move", "--m", "2", "--n", "1", "--type", "warp", "a1"}).code == 2);
}

TEST_CASE("verify") {
  for (const char* name :
       {"identity:3", "hopf", "dc:4", "dc:5", "dc:6", "borromean", "trefoil"}) {
    const Outcome r = run_cli({"verify", "--preset", name});
    CHECK_MESSAGE(r.code == 0, name << "\n" << r.out << r.err);
  }
  CHECK(run_cli({"verify", "--preset", "nothing"}).code == 2);
}

TEST_CASE("search") {
  const Outcome r = run_cli({"search", "--preset", "hopf", "a1", "a2^-1 a1 a2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"twist\"") != std::string::npos);
  CHECK(run_cli({"search", "--preset", "hopf", "--depth", "1", "a1", "a1^2"}).code == 1);
}

TEST_CASE("parse errors are usage errors") {
  const Outcome zero = run_cli({"nf", "--strands", "3", "s0"});
  CHECK(zero.code == 2);
  CHECK(zero.err.find("byte 1") != std::string::npos);
  CHECK(run_cli({"eq", "--m", "1", "--n", "1", "a1^", "a1"}).code == 2);
  CHECK(run_cli({"eq", "--m", "1", "--n", "1", "a2", "a1"}).code == 2);
  CHECK(run_cli({"eq", "--m", "1", "--n", "1", "a1 ^0", "a1"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
}

TEST_CASE("grammar round trip") {
  Rng rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const int m = uniform(rng, 1, 4);
    const int n = uniform(rng, 1, 4);
    const MixedBraidWord w = random_mixed(rng, m, n, 30, true);
    CHECK(parse_word(format_word(w), m, n) == w);
    CHECK(parse_word(format_word(w, true), m, n) == w);
  }
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"random-check", "--iters", "20", "--seed", "3"};
  const Outcome a = run_cli(args);
  const Outcome b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

}  // TEST_SUITE
