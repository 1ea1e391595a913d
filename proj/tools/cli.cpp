#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "mixbraid/cabling.hpp"
#include "mixbraid/combing.hpp"
#include "mixbraid/equivalence.hpp"
#include "mixbraid/errors.hpp"
#include "mixbraid/garside.hpp"
#include "mixbraid/ground_truth.hpp"
#include "mixbraid/manifold.hpp"
#include "mixbraid/moves.hpp"
#include "mixbraid/word_text.hpp"

namespace mixbraid::cli {
namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  bool raw = false;
  int strands = 0;
  int m = 0;
  int n = 0;
  std::string preset;
  std::string spec_file;
  int i = 0;
  int j = 0;
  int k = 0;
  std::string sign = "+";
  std::optional<std::size_t> split;
  std::string type;
  std::string kind = "over";
  int n_max = 3;
  int depth = 3;
  int iters = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> words;
};

int parse_sign(const std::string& s) {
  if (s == "+" || s == "1" || s == "+1") {
    return 1;
  }
  if (s == "-" || s == "-1") {
    return -1;
  }
  throw UsageError("--sign must be + or -");
}

ManifoldSpec spec_from(const Options& o) {
  if (!o.preset.empty() && !o.spec_file.empty()) {
    throw UsageError("give either --preset or --spec, not both");
  }
  if (!o.preset.empty()) {
    return preset(o.preset);
  }
  if (!o.spec_file.empty()) {
    return resolve_spec(o.spec_file);
  }
  throw UsageError("a manifold is required: --preset NAME or --spec FILE");
}

std::string show(const MixedBraidWord& w, const Options& o) {
  return format_word(free_reduce(w), o.raw);
}

// Smallest n that fits the moving crossings of `text`.
int infer_n(const std::string& text, int m) {
  const MixedBraidWord probe = parse_word(text, m, 1 << 20);
  int n = 1;
  for (const MixedLetter& x : probe.letters()) {
    if (x.kind == LetterKind::moving_crossing) {
      n = std::max(n, x.index + 1);
    }
  }
  return n;
}

void require_words(const Options& o, std::size_t count) {
  if (o.words.size() != count) {
    throw UsageError("expected " + std::to_string(count) + " word argument(s), got " +
                     std::to_string(o.words.size()));
  }
}

void require_mn(const Options& o) {
  if (o.m < 1 || o.n < 1) {
    throw UsageError("--m and --n must be given and >= 1");
  }
}

std::string nf_text(const NormalForm& nf) {
  std::ostringstream s;
  s << "infimum " << nf.infimum << "\nfactors";
  for (const Permutation& f : nf.factors) {
    s << ' ' << f.to_string();
  }
  return s.str();
}

int cmd_nf(const Options& o, std::ostream& out) {
  require_words(o, 1);
  if (o.strands < 1) {
    throw UsageError("--strands must be >= 1");
  }
  const NormalForm nf = normal_form(parse_braid_word(o.words[0], o.strands));
  out << nf_text(nf) << "\nword " << format_braid_word(to_word(nf), o.raw) << '\n';
  return kOk;
}

int cmd_eq(const Options& o, std::ostream& out) {
  require_words(o, 2);
  require_mn(o);
  const bool same = mixed_equal(parse_word(o.words[0], o.m, o.n),
                                parse_word(o.words[1], o.m, o.n));
  out << (same ? "true" : "false") << '\n';
  return same ? kOk : kFalse;
}

int cmd_embed(const Options& o, std::ostream& out) {
  require_words(o, 1);
  require_mn(o);
  out << format_braid_word(embed(parse_word(o.words[0], o.m, o.n)), o.raw) << '\n';
  return kOk;
}

int cmd_comb(const Options& o, std::ostream& out) {
  require_words(o, 1);
  require_mn(o);
  const CombedPair pair = comb(parse_word(o.words[0], o.m, o.n));
  out << "algebraic " << show(pair.algebraic, o) << "\ncoset "
      << format_fixed_word(pair.coset, o.raw) << '\n';
  return kOk;
}

int cmd_rho(const Options& o, std::ostream& out) {
  const ManifoldSpec spec = spec_from(o);
  out << show(compute_rho(spec, o.i, std::max(o.n, 1)), o) << '\n';
  return kOk;
}

int cmd_r(const Options& o, std::ostream& out) {
  const ManifoldSpec spec = spec_from(o);
  if (o.n < 1) {
    throw UsageError("--n must be >= 1");
  }
  const auto& comp = spec.component(o.k);
  const MixedBraidWord r = comp.size() == 1 ? compute_r(spec, o.k, o.n)
                                            : compute_parallel_r(spec, o.k, o.n);
  out << show(r, o) << '\n';
  return kOk;
}

int cmd_move(const Options& o, std::ostream& out) {
  require_mn(o);
  if (o.words.empty() || o.words.size() > 2) {
    throw UsageError("move takes WORD or BETA1 BETA2");
  }
  MixedBraidWord beta = parse_word(o.words[0], o.m, o.n);
  std::size_t split = o.split.value_or(beta.size());
  if (o.words.size() == 2) {
    if (o.split) {
      throw UsageError("--split conflicts with two word arguments");
    }
    split = beta.size();
    beta = multiply(beta, parse_word(o.words[1], o.m, o.n));
  }
  const int sign = parse_sign(o.sign);
  MoveRecord move;
  const std::string& t = o.type;
  if (t == "m") {
    move = MMove{sign, split, false};
  } else if (t == "conj") {
    move = MarkovConj{o.j, sign};
  } else if (t == "twist") {
    move = TwistedConj{o.i, sign};
  } else if (t == "l") {
    if (o.kind != "over" && o.kind != "under") {
      throw UsageError("--kind must be over or under");
    }
    move = LMove{o.kind == "over" ? LMoveKind::over : LMoveKind::under, o.i,
                 sign, split};
  } else if (t == "band") {
    move = BandMove{o.k, sign, split};
  } else if (t == "combed-band") {
    move = CombedBandMove{o.k, sign, split};
  } else if (t == "nonpure-band") {
    move = NonPureBandMove{o.k, sign, split};
  } else {
    throw UsageError("unknown move type '" + t + "'");
  }
  const bool needs_spec = t == "twist" || t == "band" || t == "combed-band" ||
                          t == "nonpure-band";
  ManifoldSpec spec = needs_spec ? spec_from(o) : make_spec("identity", BraidWord(o.m));
  if (needs_spec && spec.m != o.m) {
    throw UsageError("--m does not match the manifold");
  }
  const MixedBraidWord result = apply_move(beta, move, spec);
  out << show(result, o) << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.preset.empty()) {
    throw UsageError("verify needs --preset");
  }
  if (o.n_max < 1) {
    throw UsageError("--n-max must be >= 1");
  }
  const VerifyReport report = verify_preset(o.preset, o.n_max);
  out << "preset " << report.preset << '\n';
  std::size_t passed = 0;
  for (const VerifyEntry& e : report.entries) {
    out << (e.pass ? "PASS " : "FAIL ") << e.item << "  [" << e.citation << "]\n";
    if (!e.pass) {
      out << "  computed " << e.computed << "\n  expected " << e.expected
          << "\n  computed nf " << e.computed_nf << "\n  expected nf "
          << e.expected_nf << '\n';
    } else {
      ++passed;
    }
  }
  for (const std::string& note : report.notes) {
    out << "note: " << note << '\n';
  }
  out << passed << "/" << report.entries.size() << " passed\n";
  return report.all_pass() ? kOk : kFalse;
}

int cmd_search(const Options& o, std::ostream& out) {
  require_words(o, 2);
  const ManifoldSpec spec = spec_from(o);
  const int n1 = o.n > 0 ? o.n : infer_n(o.words[0], spec.m);
  const int n2 = o.n > 0 ? o.n : infer_n(o.words[1], spec.m);
  SearchBudget budget;
  budget.max_depth = o.depth;
  budget.n_max = std::max({o.n_max, n1, n2});
  LoopWordCache cache;
  const SearchResult result =
      bounded_search(parse_word(o.words[0], spec.m, n1),
                     parse_word(o.words[1], spec.m, n2), spec, budget, &cache);
  if (result.certificate) {
    out << certificate_to_json(*result.certificate) << '\n';
    return kOk;
  }
  out << "not found";
  if (result.stats.pruned_by_winding) {
    out << " (winding vectors differ on a component)";
  }
  out << "\nexpanded " << result.stats.expanded << ", generated "
      << result.stats.generated << ", depth " << result.stats.depth_reached
      << (result.stats.budget_exhausted ? ", budget exhausted" : "") << '\n';
  return kFalse;
}

// ---- random-check -------------------------------------------------------

struct Failure {
  std::string suite;
  std::string detail;
};

template <typename Rng>
MixedBraidWord random_mixed(Rng& rng, int m, int n, int max_len, bool with_fixed) {
  std::uniform_int_distribution<int> len_d(0, max_len);
  std::vector<MixedLetter> letters;
  const int len = len_d(rng);
  std::vector<LetterKind> kinds{LetterKind::loop};
  if (n > 1) {
    kinds.push_back(LetterKind::moving_crossing);
  }
  if (with_fixed && m > 1) {
    kinds.push_back(LetterKind::fixed_crossing);
  }
  std::uniform_int_distribution<std::size_t> kind_d(0, kinds.size() - 1);
  std::uniform_int_distribution<int> sign_d(0, 1);
  for (int t = 0; t < len; ++t) {
    const LetterKind kind = kinds[kind_d(rng)];
    const int hi = kind == LetterKind::loop ? m
                   : kind == LetterKind::fixed_crossing ? m - 1
                                                        : n - 1;
    std::uniform_int_distribution<int> idx(1, hi);
    letters.push_back({kind, idx(rng), sign_d(rng) != 0 ? 1 : -1});
  }
  return MixedBraidWord(m, n, std::move(letters));
}

template <typename Rng>
std::optional<Failure> check_once(Rng& rng, const std::vector<ManifoldSpec>& specs,
                                  LoopWordCache& cache) {
  std::uniform_int_distribution<int> small(1, 3);
  std::uniform_int_distribution<int> strands_d(2, 8);
  std::uniform_int_distribution<int> len_d(0, 40);
  std::uniform_int_distribution<int> sign_d(0, 1);

  {
    const int strands = strands_d(rng);
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::vector<Generator> letters;
    const int len = len_d(rng);
    for (int t = 0; t < len; ++t) {
      letters.push_back({gen(rng), sign_d(rng) != 0 ? 1 : -1});
    }
    const BraidWord u(strands, letters);
    const NormalForm nf = normal_form(u);
    if (!normal_form(multiply(u, invert(u))).is_identity() ||
        normal_form(to_word(nf)) != nf ||
        permutation_of(to_word(nf)) != permutation_of(u)) {
      return Failure{"normal form", format_braid_word(u, true) + " on " +
                                        std::to_string(strands) + " strands"};
    }
  }
  {
    std::uniform_int_distribution<int> m_d(1, 5);
    const int m = m_d(rng);
    const int n = small(rng);
    const MixedBraidWord w = random_mixed(rng, m, n, 25, true);
    const std::string text = format_word(w);
    if (parse_word(text, m, n) != w) {
      return Failure{"grammar round trip", text};
    }
    const CombedPair pair = comb(w);
    const BraidWord lhs = embed(w);
    const BraidWord rhs = multiply(embed(pair.algebraic), embed_fixed(pair.coset, n));
    if (!pair.algebraic.is_algebraic() || !equal(lhs, rhs)) {
      return Failure{"combing", text + " (m=" + std::to_string(m) +
                                    ", n=" + std::to_string(n) + ")"};
    }
  }
  {
    std::uniform_int_distribution<std::size_t> spec_d(0, specs.size() - 1);
    const ManifoldSpec& spec = specs[spec_d(rng)];
    const int n = small(rng);
    const MixedBraidWord beta = random_mixed(rng, spec.m, n, 10, false);
    std::uniform_int_distribution<int> i_d(1, spec.m);
    const int i = i_d(rng);
    const int sign = sign_d(rng) != 0 ? 1 : -1;
    WindingVector want = winding_vector(beta);
    const WindingVector rho_w = winding_vector(cache.rho(spec, i, n));
    for (std::size_t t = 0; t < want.size(); ++t) {
      want[t] += sign * (rho_w[t] - (static_cast<int>(t) + 1 == i ? 1 : 0));
    }
    if (winding_vector(twisted_conjugate(beta, i, sign, spec, &cache)) != want) {
      return Failure{"twisted conjugation winding",
                     format_word(beta) + " on " + spec.name};
    }
    std::uniform_int_distribution<std::uint64_t> seed_d;
    const RandomWalk walk = random_walk(beta, spec, 3, seed_d(rng), {}, &cache);
    if (!replays(walk.certificate, spec, &cache)) {
      return Failure{"random walk replay", certificate_to_json(walk.certificate)};
    }
  }
  return std::nullopt;
}

int cmd_random_check(const Options& o, std::ostream& out) {
  if (o.iters < 0) {
    throw UsageError("--iters must be >= 0");
  }
  std::mt19937_64 rng(o.seed);
  const std::vector<ManifoldSpec> specs{
      preset("identity:2"), preset("hopf"),      preset("borromean"),
      preset("dc:4"),       preset("trefoil"),   preset("hopf/1,-2"),
      preset("trefoil/-1"), preset("unknot/3")};
  LoopWordCache cache;
  for (int it = 0; it < o.iters; ++it) {
    if (auto failure = check_once(rng, specs, cache)) {
      out << "FAIL " << failure->suite << " (iteration " << it << ")\n"
          << failure->detail << '\n';
      return kFalse;
    }
  }
  out << "random-check: " << o.iters << " iterations, seed " << o.seed
      << ", all properties hold\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Mixed braid calculus for links in 3-manifolds", "mixbraid"};
  app.require_subcommand(1);
  app.add_flag("--raw", o.raw, "print words without power compression");

  auto words = [&](CLI::App* sub, const char* what) {
    sub->add_option("words", o.words, what);
  };
  auto mn = [&](CLI::App* sub) {
    sub->add_option("--m", o.m, "fixed strands")->required();
    sub->add_option("--n", o.n, "moving strands")->required();
  };
  auto manifold = [&](CLI::App* sub) {
    sub->add_option("--preset", o.preset, "preset name, e.g. hopf or dc:4");
    sub->add_option("--spec", o.spec_file, "manifold spec JSON file or preset:NAME");
  };

  auto* nf = app.add_subcommand("nf", "Garside normal form of a classical word");
  nf->add_option("--strands", o.strands, "strand count")->required();
  words(nf, "WORD");

  auto* eq = app.add_subcommand("eq", "decide equality of two mixed words");
  mn(eq);
  words(eq, "W1 W2");

  auto* emb = app.add_subcommand("embed", "classical image of a mixed word");
  mn(emb);
  words(emb, "WORD");

  auto* cb = app.add_subcommand("comb", "comb fixed crossings to the bottom");
  mn(cb);
  words(cb, "WORD");

  auto* rho = app.add_subcommand("rho", "twisted conjugation word rho_i");
  manifold(rho);
  rho->add_option("--i", o.i, "loop index")->required();
  rho->add_option("--n", o.n, "moving strands (default 1)");

  auto* r = app.add_subcommand("r", "combed parallel strand r_k");
  manifold(r);
  r->add_option("--k", o.k, "component")->required();
  r->add_option("--n", o.n, "moving strands before the band move")->required();

  auto* mv = app.add_subcommand("move", "apply one move");
  mv->add_option("--type", o.type, "m|conj|twist|l|band|combed-band|nonpure-band")
      ->required();
  mn(mv);
  manifold(mv);
  mv->add_option("--i", o.i, "loop index (twist) or position (l)");
  mv->add_option("--j", o.j, "Markov conjugation index");
  mv->add_option("--k", o.k, "band component");
  mv->add_option("--sign", o.sign, "+ or -");
  mv->add_option("--split", o.split, "letters in beta1");
  mv->add_option("--kind", o.kind, "L-move kind: over|under");
  words(mv, "WORD or BETA1 BETA2");

  auto* vf = app.add_subcommand("verify", "check a preset against its closed forms");
  vf->add_option("--preset", o.preset, "preset name")->required();
  vf->add_option("--n-max", o.n_max, "largest n for n-indexed entries");

  auto* se = app.add_subcommand("search", "bounded search for a move sequence");
  manifold(se);
  se->add_option("--depth", o.depth, "maximum number of moves");
  se->add_option("--nmax", o.n_max, "maximum moving strands");
  se->add_option("--n", o.n, "moving strands of both words (default: inferred)");
  words(se, "W1 W2");

  auto* rc = app.add_subcommand("random-check", "seeded cross-module property checks");
  rc->add_option("--iters", o.iters, "iterations");
  rc->add_option("--seed", o.seed, "seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (nf->parsed()) return cmd_nf(o, out);
    if (eq->parsed()) return cmd_eq(o, out);
    if (emb->parsed()) return cmd_embed(o, out);
    if (cb->parsed()) return cmd_comb(o, out);
    if (rho->parsed()) return cmd_rho(o, out);
    if (r->parsed()) return cmd_r(o, out);
    if (mv->parsed()) return cmd_move(o, out);
    if (vf->parsed()) return cmd_verify(o, out);
    if (se->parsed()) return cmd_search(o, out);
    if (rc->parsed()) return cmd_random_check(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace mixbraid::cli
