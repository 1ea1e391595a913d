#include "mixbraid/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "mixbraid/errors.hpp"
#include "mixbraid/word_text.hpp"

namespace mixbraid {
namespace {

using nlohmann::json;

template <typename Band>
json band_params(const Band& x) {
  return {{"k", x.component}, {"sign", x.sign}, {"split", x.split}};
}

json params_of(const MoveRecord& move) {
  struct Visitor {
    json operator()(const MMove& x) const {
      return {{"sign", x.sign}, {"split", x.split}, {"destabilize", x.destabilize}};
    }
    json operator()(const MarkovConj& x) const {
      return {{"j", x.j}, {"sign", x.sign}};
    }
    json operator()(const TwistedConj& x) const {
      return {{"i", x.i}, {"sign", x.sign}};
    }
    json operator()(const LMove& x) const {
      return {{"kind", x.kind == LMoveKind::over ? "over" : "under"},
              {"i", x.i},
              {"sign", x.sign},
              {"split", x.split}};
    }
    json operator()(const BandMove& x) const { return band_params(x); }
    json operator()(const CombedBandMove& x) const { return band_params(x); }
    json operator()(const NonPureBandMove& x) const { return band_params(x); }
  };
  return std::visit(Visitor{}, move);
}

int sign_param(const json& p) {
  const int s = p.at("sign").get<int>();
  if (s != 1 && s != -1) {
    throw Error("move sign must be +1 or -1");
  }
  return s;
}

MoveRecord move_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  const json& p = j.at("params");
  if (type == "m") {
    return MMove{sign_param(p), p.value("split", std::size_t{0}),
                 p.value("destabilize", false)};
  }
  if (type == "conj") {
    return MarkovConj{p.at("j").get<int>(), sign_param(p)};
  }
  if (type == "twist") {
    return TwistedConj{p.at("i").get<int>(), sign_param(p)};
  }
  if (type == "l") {
    const std::string kind = p.value("kind", std::string("over"));
    if (kind != "over" && kind != "under") {
      throw Error("L-move kind must be over or under");
    }
    return LMove{kind == "over" ? LMoveKind::over : LMoveKind::under,
                 p.at("i").get<int>(), sign_param(p),
                 p.value("split", std::size_t{0})};
  }
  const int k = p.at("k").get<int>();
  const std::size_t split = p.value("split", std::size_t{0});
  if (type == "band") {
    return BandMove{k, sign_param(p), split};
  }
  if (type == "combed-band") {
    return CombedBandMove{k, sign_param(p), split};
  }
  if (type == "nonpure-band") {
    return NonPureBandMove{k, sign_param(p), split};
  }
  throw Error("unknown move type '" + type + "'");
}

std::optional<std::size_t> single_top_crossing(const MixedBraidWord& beta) {
  const int top = beta.n() - 1;
  std::optional<std::size_t> found;
  for (std::size_t p = 0; p < beta.size(); ++p) {
    const MixedLetter& x = beta.letters()[p];
    if (x.kind == LetterKind::moving_crossing && x.index == top) {
      if (found) {
        return std::nullopt;
      }
      found = p;
    }
  }
  return found;
}

}  // namespace

std::string CanonicalKey::to_string() const {
  std::string s = std::to_string(m) + "," + std::to_string(n) + ":" +
                  std::to_string(nf.infimum);
  for (const Permutation& f : nf.factors) {
    s += '|';
    for (int x : f.images()) {
      s += std::to_string(x);
      s += '.';
    }
  }
  return s;
}

CanonicalKey canonical_key(const MixedBraidWord& beta) {
  return {beta.m(), beta.n(), normal_form(embed(beta))};
}

std::string certificate_to_json(const Certificate& cert) {
  json j;
  j["start"] = format_word(cert.start, true);
  j["m"] = cert.start.m();
  j["n"] = cert.start.n();
  j["moves"] = json::array();
  for (const MoveRecord& move : cert.moves) {
    j["moves"].push_back({{"type", move_type(move)}, {"params", params_of(move)}});
  }
  j["end"] = format_word(cert.end, true);
  j["end_n"] = cert.end.n();
  return j.dump(2);
}

Certificate certificate_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    const int end_n = j.value("end_n", n);
    Certificate cert{parse_word(j.at("start").get<std::string>(), m, n), {},
                     parse_word(j.at("end").get<std::string>(), m, end_n)};
    for (const json& move : j.at("moves")) {
      cert.moves.push_back(move_from_json(move));
    }
    return cert;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  }
}

MixedBraidWord replay(const Certificate& cert, const ManifoldSpec& spec,
                      LoopWordCache* cache) {
  MixedBraidWord w = cert.start;
  for (const MoveRecord& move : cert.moves) {
    w = free_reduce(apply_move(w, move, spec, cache));
  }
  return w;
}

bool replays(const Certificate& cert, const ManifoldSpec& spec,
             LoopWordCache* cache) {
  const MixedBraidWord w = replay(cert, spec, cache);
  return w.m() == cert.end.m() && w.n() == cert.end.n() &&
         mixed_equal(w, cert.end);
}

std::vector<long long> component_winding(const MixedBraidWord& beta,
                                         const ManifoldSpec& spec) {
  const WindingVector w = winding_vector(beta);
  std::vector<long long> out;
  for (const auto& comp : spec.components) {
    long long sum = 0;
    for (int s : comp) {
      sum += w[static_cast<std::size_t>(s - 1)];
    }
    out.push_back(sum);
  }
  return out;
}

std::vector<MoveRecord> candidate_moves(const MixedBraidWord& beta,
                                        const ManifoldSpec& spec, int n_max,
                                        bool with_band_moves) {
  std::vector<MoveRecord> out;
  const int n = beta.n();
  for (int j = 1; j < n; ++j) {
    for (int sign : {1, -1}) {
      out.emplace_back(MarkovConj{j, sign});
    }
  }
  for (int i = 1; i <= beta.m(); ++i) {
    for (int sign : {1, -1}) {
      out.emplace_back(TwistedConj{i, sign});
    }
  }
  if (n < n_max) {
    for (int sign : {1, -1}) {
      out.emplace_back(MMove{sign, beta.size(), false});
    }
  }
  if (n >= 2) {
    if (auto p = single_top_crossing(beta)) {
      out.emplace_back(MMove{beta.letters()[*p].sign, *p, true});
    }
  }
  if (with_band_moves && spec.kind == ManifoldKind::surgery) {
    for (int k = 1; k <= spec.component_count(); ++k) {
      const int c = static_cast<int>(spec.component(k).size());
      if (n + c > n_max) {
        continue;
      }
      for (int sign : {1, -1}) {
        if (spec.is_pure()) {
          out.emplace_back(CombedBandMove{k, sign, beta.size()});
        } else {
          out.emplace_back(NonPureBandMove{k, sign, beta.size()});
        }
      }
    }
  }
  return out;
}

SearchResult bounded_search(const MixedBraidWord& u, const MixedBraidWord& v,
                            const ManifoldSpec& spec, const SearchBudget& budget,
                            LoopWordCache* cache) {
  if (!u.is_algebraic() || !v.is_algebraic()) {
    throw MoveError("search needs algebraic mixed braids");
  }
  if (u.m() != spec.m || v.m() != spec.m) {
    throw MoveError("words and spec disagree on m");
  }
  if (budget.max_depth < 0 || budget.n_max < 1) {
    throw RangeError("search budget must be non-negative");
  }
  SearchResult result;
  if (spec.kind == ManifoldKind::complement &&
      component_winding(u, spec) != component_winding(v, spec)) {
    result.stats.pruned_by_winding = true;
    return result;
  }
  const std::string target = canonical_key(v).to_string();

  struct Node {
    MixedBraidWord word;
    int parent;
    std::optional<MoveRecord> move;
    int depth;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> seen;
  auto path_to = [&](int index) {
    std::vector<MoveRecord> moves;
    for (int at = index; nodes[static_cast<std::size_t>(at)].parent >= 0;
         at = nodes[static_cast<std::size_t>(at)].parent) {
      moves.push_back(*nodes[static_cast<std::size_t>(at)].move);
    }
    return std::vector<MoveRecord>(moves.rbegin(), moves.rend());
  };

  const MixedBraidWord start = free_reduce(u);
  nodes.push_back({start, -1, std::nullopt, 0});
  const std::string start_key = canonical_key(start).to_string();
  seen.emplace(start_key, 0);
  if (start_key == target) {
    result.certificate = Certificate{start, {}, v};
    return result;
  }
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    const int index = frontier.front();
    frontier.pop_front();
    const int depth = nodes[static_cast<std::size_t>(index)].depth;
    if (depth >= budget.max_depth) {
      continue;
    }
    if (result.stats.expanded >= budget.max_nodes) {
      result.stats.budget_exhausted = true;
      break;
    }
    ++result.stats.expanded;
    const MixedBraidWord word = nodes[static_cast<std::size_t>(index)].word;
    for (const MoveRecord& move : candidate_moves(word, spec, budget.n_max)) {
      MixedBraidWord next = free_reduce(apply_move(word, move, spec, cache));
      if (next.size() > budget.max_word_length) {
        continue;
      }
      ++result.stats.generated;
      std::string key = canonical_key(next).to_string();
      if (seen.count(key) != 0) {
        continue;
      }
      const int id = static_cast<int>(nodes.size());
      nodes.push_back({std::move(next), index, move, depth + 1});
      seen.emplace(key, id);
      result.stats.depth_reached = std::max(result.stats.depth_reached, depth + 1);
      if (key == target) {
        Certificate cert{start, path_to(id), v};
        result.certificate = std::move(cert);
        return result;
      }
      frontier.push_back(id);
    }
  }
  if (!frontier.empty()) {
    result.stats.budget_exhausted = true;
  }
  return result;
}

RandomWalk random_walk(const MixedBraidWord& beta, const ManifoldSpec& spec,
                       int steps, std::uint64_t seed,
                       const RandomWalkOptions& options, LoopWordCache* cache) {
  if (steps < 0) {
    throw RangeError("steps must be >= 0");
  }
  std::mt19937_64 rng(seed);
  MixedBraidWord word = free_reduce(beta);
  RandomWalk walk{word, Certificate{word, {}, word}};
  for (int step = 0; step < steps; ++step) {
    std::vector<MoveRecord> legal =
        candidate_moves(word, spec, options.n_max, !options.invertible_only);
    if (!options.invertible_only) {
      const int n = word.n();
      if (n < options.n_max) {
        std::uniform_int_distribution<std::size_t> cut(0, word.size());
        for (int sign : {1, -1}) {
          legal.emplace_back(MMove{sign, cut(rng), false});
          for (int i = 1; i <= n; ++i) {
            for (LMoveKind kind : {LMoveKind::over, LMoveKind::under}) {
              legal.emplace_back(LMove{kind, i, sign, cut(rng)});
            }
          }
        }
      }
      if (spec.kind == ManifoldKind::surgery) {
        std::uniform_int_distribution<std::size_t> cut(0, word.size());
        for (int k = 1; k <= spec.component_count(); ++k) {
          const int c = static_cast<int>(spec.component(k).size());
          if (word.n() + c > options.n_max) {
            continue;
          }
          for (int sign : {1, -1}) {
            if (spec.is_pure()) {
              legal.emplace_back(BandMove{k, sign, cut(rng)});
              legal.emplace_back(CombedBandMove{k, sign, cut(rng)});
            } else {
              legal.emplace_back(NonPureBandMove{k, sign, cut(rng)});
            }
          }
        }
      }
    }
    std::vector<std::pair<MoveRecord, MixedBraidWord>> viable;
    for (const MoveRecord& move : legal) {
      MixedBraidWord next = free_reduce(apply_move(word, move, spec, cache));
      if (next.size() <= options.max_word_length) {
        viable.emplace_back(move, std::move(next));
      }
    }
    if (viable.empty()) {
      break;
    }
    std::uniform_int_distribution<std::size_t> pick(0, viable.size() - 1);
    auto& chosen = viable[pick(rng)];
    walk.certificate.moves.push_back(chosen.first);
    word = std::move(chosen.second);
  }
  walk.word = word;
  walk.certificate.end = word;
  return walk;
}

}  // namespace mixbraid
