#include "mixbraid/moves.hpp"

#include <utility>

#include "mixbraid/cabling.hpp"
#include "mixbraid/combing.hpp"
#include "mixbraid/errors.hpp"
#include "mixbraid/word_text.hpp"

namespace mixbraid {
namespace {

using L = MixedLetter;

void require_algebraic(const MixedBraidWord& w, const char* what) {
  if (!w.is_algebraic()) {
    throw MoveError(std::string(what) + " needs an algebraic mixed braid");
  }
}

void require_pair(const MixedBraidWord& beta1, const MixedBraidWord& beta2) {
  if (beta1.m() != beta2.m() || beta1.n() != beta2.n()) {
    throw MoveError("beta1 and beta2 must have the same (m, n)");
  }
  require_algebraic(beta1, "move");
  require_algebraic(beta2, "move");
}

MixedBraidWord word(int m, int n, std::vector<MixedLetter> letters) {
  return MixedBraidWord(m, n, std::move(letters));
}

// sigma_from^s ... sigma_to^s stepping by +1 or -1.
std::vector<MixedLetter> run(int from, int to, int sign) {
  std::vector<MixedLetter> out;
  const int step = from <= to ? 1 : -1;
  for (int j = from;; j += step) {
    out.push_back(L::moving(j, sign));
    if (j == to) {
      break;
    }
  }
  return out;
}

std::string spec_key(const ManifoldSpec& spec) {
  std::string key = std::to_string(spec.m) + "|" +
                    format_fixed_word(spec.fixed_word, true) + "|";
  for (const auto& c : spec.components) {
    for (int s : c) {
      key += std::to_string(s) + ",";
    }
    key += ";";
  }
  return key;
}

MixedBraidWord compute_r_uncached(const ManifoldSpec& spec, int k, int n) {
  const std::vector<int>& comp = spec.component(k);
  if (comp.size() != 1) {
    throw MoveError("component " + std::to_string(k) +
                    " has several strands; use the non-pure band move");
  }
  if (n < 1) {
    throw RangeError("n must be >= 1");
  }
  const MixedBraidWord inner =
      comb(part_braid(cable_parallel(spec, comp, 0), spec.m)).algebraic;
  const MixedBraidWord lam = lambda(spec.m, n);
  return free_reduce(
      multiply({lam, widen(inner, n + 1), invert(lam)}));
}

int component_strand_for_pure(const ManifoldSpec& spec, int k) {
  if (!spec.is_pure()) {
    throw MoveError("spec '" + spec.name +
                    "' is not pure; use the non-pure band move");
  }
  return spec.component(k).front();
}

}  // namespace

std::string move_type(const MoveRecord& move) {
  struct Visitor {
    std::string operator()(const MMove&) const { return "m"; }
    std::string operator()(const MarkovConj&) const { return "conj"; }
    std::string operator()(const TwistedConj&) const { return "twist"; }
    std::string operator()(const LMove&) const { return "l"; }
    std::string operator()(const BandMove&) const { return "band"; }
    std::string operator()(const CombedBandMove&) const { return "combed-band"; }
    std::string operator()(const NonPureBandMove&) const { return "nonpure-band"; }
  };
  return std::visit(Visitor{}, move);
}

namespace {

std::string sign_text(int s) { return s > 0 ? "+" : "-"; }

template <typename Band>
std::string describe_band(const char* name, const Band& x) {
  return std::string(name) + " k=" + std::to_string(x.component) +
         " sign=" + sign_text(x.sign) + " split=" + std::to_string(x.split);
}

struct Describe {
  std::string operator()(const MMove& x) const {
    return std::string(x.destabilize ? "m-destabilize" : "m") + " sign=" +
           sign_text(x.sign) + " split=" + std::to_string(x.split);
  }
  std::string operator()(const MarkovConj& x) const {
    return "conj j=" + std::to_string(x.j) + " sign=" + sign_text(x.sign);
  }
  std::string operator()(const TwistedConj& x) const {
    return "twist i=" + std::to_string(x.i) + " sign=" + sign_text(x.sign);
  }
  std::string operator()(const LMove& x) const {
    return std::string("l kind=") +
           (x.kind == LMoveKind::over ? "over" : "under") +
           " i=" + std::to_string(x.i) + " sign=" + sign_text(x.sign) +
           " split=" + std::to_string(x.split);
  }
  std::string operator()(const BandMove& x) const {
    return describe_band("band", x);
  }
  std::string operator()(const CombedBandMove& x) const {
    return describe_band("combed-band", x);
  }
  std::string operator()(const NonPureBandMove& x) const {
    return describe_band("nonpure-band", x);
  }
};

}  // namespace

std::string describe(const MoveRecord& move) {
  return std::visit(Describe{}, move);
}

MixedBraidWord LoopWordCache::rho(const ManifoldSpec& spec, int i, int n) {
  std::lock_guard lock(mutex_);
  const Key key{spec_key(spec), 'p', i, n};
  if (auto it = entries_.find(key); it != entries_.end()) {
    return it->second;
  }
  MixedBraidWord value = compute_rho(spec, i, n);
  entries_.emplace(key, value);
  return value;
}

MixedBraidWord LoopWordCache::r(const ManifoldSpec& spec, int k, int n) {
  std::lock_guard lock(mutex_);
  const Key key{spec_key(spec), 'r', k, n};
  if (auto it = entries_.find(key); it != entries_.end()) {
    return it->second;
  }
  MixedBraidWord value = compute_r_uncached(spec, k, n);
  entries_.emplace(key, value);
  return value;
}

std::size_t LoopWordCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

void LoopWordCache::clear() {
  std::lock_guard lock(mutex_);
  entries_.clear();
}

std::pair<MixedBraidWord, MixedBraidWord> split_word(const MixedBraidWord& w,
                                                     std::size_t split) {
  if (split > w.size()) {
    throw RangeError("split " + std::to_string(split) + " beyond word length " +
                     std::to_string(w.size()));
  }
  const auto cut = w.letters().begin() + static_cast<std::ptrdiff_t>(split);
  return {word(w.m(), w.n(), {w.letters().begin(), cut}),
          word(w.m(), w.n(), {cut, w.letters().end()})};
}

MixedBraidWord m_move(const MixedBraidWord& beta1, const MixedBraidWord& beta2,
                      int sign) {
  require_pair(beta1, beta2);
  const int n = beta1.n();
  std::vector<MixedLetter> out = beta1.letters();
  out.push_back(L::moving(n, sign));
  out.insert(out.end(), beta2.letters().begin(), beta2.letters().end());
  return word(beta1.m(), n + 1, std::move(out));
}

MixedBraidWord m_destabilize(const MixedBraidWord& beta, std::size_t position) {
  require_algebraic(beta, "M-move");
  const int top = beta.n() - 1;
  if (top < 1) {
    throw MoveError("nothing to destabilize with a single moving strand");
  }
  if (position >= beta.size() ||
      beta.letters()[position].kind != LetterKind::moving_crossing ||
      beta.letters()[position].index != top) {
    throw MoveError("no sigma_" + std::to_string(top) + " at position " +
                    std::to_string(position));
  }
  std::vector<MixedLetter> out;
  for (std::size_t p = 0; p < beta.size(); ++p) {
    const MixedLetter& x = beta.letters()[p];
    if (p == position) {
      continue;
    }
    if (x.kind == LetterKind::moving_crossing && x.index == top) {
      throw MoveError("word has another sigma_" + std::to_string(top) +
                      " letter; not of the form a1 sigma_n a2");
    }
    out.push_back(x);
  }
  return word(beta.m(), beta.n() - 1, std::move(out));
}

MixedBraidWord markov_conjugate(const MixedBraidWord& beta, int j, int sign) {
  require_algebraic(beta, "Markov conjugation");
  if (j < 1 || j >= beta.n()) {
    throw RangeError("Markov conjugation index " + std::to_string(j) +
                     " out of range 1.." + std::to_string(beta.n() - 1));
  }
  std::vector<MixedLetter> out{L::moving(j, sign)};
  out.insert(out.end(), beta.letters().begin(), beta.letters().end());
  out.push_back(L::moving(j, -sign));
  return free_reduce(word(beta.m(), beta.n(), std::move(out)));
}

MixedBraidWord twisted_conjugate(const MixedBraidWord& beta, int i, int sign,
                                 const ManifoldSpec& spec,
                                 LoopWordCache* cache) {
  require_algebraic(beta, "twisted conjugation");
  if (spec.m != beta.m()) {
    throw MoveError("word and spec disagree on m");
  }
  if (i < 1 || i > beta.m()) {
    throw RangeError("loop index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(beta.m()));
  }
  const MixedBraidWord rho =
      cache != nullptr ? cache->rho(spec, i, beta.n())
                       : compute_rho(spec, i, beta.n());
  return free_reduce(multiply({word(beta.m(), beta.n(), {L::loop(i, -sign)}),
                               beta, power(rho, sign)}));
}

MixedBraidWord l_move(const MixedBraidWord& beta1, const MixedBraidWord& beta2,
                      LMoveKind kind, int i, int sign) {
  require_pair(beta1, beta2);
  const int m = beta1.m();
  const int n = beta1.n();
  if (i < 1 || i > n) {
    throw RangeError("L-move position " + std::to_string(i) +
                     " out of range 1.." + std::to_string(n));
  }
  const bool over = kind == LMoveKind::over;
  // Conjugator c (over: sigma_n..sigma_i, under: sigma_i..sigma_n), applied
  // as c^-1 X c for over and c X c^-1 for under.
  std::vector<MixedLetter> head = over ? run(i, n, -1) : run(i, n, 1);
  std::vector<MixedLetter> tail = over ? run(n, i, 1) : run(n, i, -1);
  std::vector<MixedLetter> y;
  std::vector<MixedLetter> y_inv;
  if (i < n) {
    y = over ? run(i, n - 1, -1) : run(i, n - 1, 1);
    y_inv = over ? run(n - 1, i, 1) : run(n - 1, i, -1);
  }
  std::vector<MixedLetter> out = head;
  out.insert(out.end(), beta1.letters().begin(), beta1.letters().end());
  out.insert(out.end(), y.begin(), y.end());
  out.push_back(L::moving(n, sign));
  out.insert(out.end(), y_inv.begin(), y_inv.end());
  out.insert(out.end(), beta2.letters().begin(), beta2.letters().end());
  out.insert(out.end(), tail.begin(), tail.end());
  return free_reduce(word(m, n + 1, std::move(out)));
}

MoveSequence l_move_factorization(const MixedBraidWord& beta1,
                                  const MixedBraidWord& beta2, LMoveKind kind,
                                  int i, int sign) {
  require_pair(beta1, beta2);
  const int n = beta1.n();
  if (i < 1 || i > n) {
    throw RangeError("L-move position out of range");
  }
  const bool over = kind == LMoveKind::over;
  std::vector<MixedLetter> start = beta1.letters();
  if (i < n) {
    const auto y = over ? run(i, n - 1, -1) : run(i, n - 1, 1);
    const auto y_inv = over ? run(n - 1, i, 1) : run(n - 1, i, -1);
    start.insert(start.end(), y.begin(), y.end());
    start.insert(start.end(), y_inv.begin(), y_inv.end());
  }
  const std::size_t split = beta1.size() + static_cast<std::size_t>(n - i);
  start.insert(start.end(), beta2.letters().begin(), beta2.letters().end());
  MoveSequence seq{word(beta1.m(), n, std::move(start)), {}};
  seq.moves.push_back(MMove{sign, split, false});
  for (int j = n; j >= i; --j) {
    seq.moves.push_back(MarkovConj{j, over ? -1 : 1});
  }
  return seq;
}

MixedBraidWord lambda(int m, int n) {
  if (n < 0) {
    throw RangeError("lambda needs n >= 0");
  }
  return word(m, n + 1, n > 0 ? run(n, 1, 1) : std::vector<MixedLetter>{});
}

MixedBraidWord framing_loop(int m, int k, int n) {
  if (k < 1 || k > m) {
    throw RangeError("loop index " + std::to_string(k) + " out of range");
  }
  const MixedBraidWord lam = lambda(m, n);
  return multiply({lam, word(m, n + 1, {L::loop(k)}), invert(lam)});
}

MixedBraidWord band_substitute(const MixedBraidWord& beta, int k) {
  require_algebraic(beta, "band substitution");
  const int m = beta.m();
  const int n = beta.n();
  if (k < 1 || k > m) {
    throw RangeError("band component " + std::to_string(k) + " out of range");
  }
  // X = lambda_{n-1}^-1 sigma_n^2 lambda_{n-1}
  std::vector<MixedLetter> x;
  std::vector<MixedLetter> x_inv;
  if (n > 1) {
    x = run(1, n - 1, -1);
  }
  x.push_back(L::moving(n));
  x.push_back(L::moving(n));
  if (n > 1) {
    const auto lam = run(n - 1, 1, 1);
    x.insert(x.end(), lam.begin(), lam.end());
  }
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    x_inv.push_back(it->inverse());
  }
  std::vector<MixedLetter> out;
  for (const MixedLetter& letter : beta.letters()) {
    if (letter.kind != LetterKind::loop || letter.index > k) {
      out.push_back(letter);
    } else if (letter.index == k) {
      if (letter.sign > 0) {
        out.insert(out.end(), x.begin(), x.end());
        out.push_back(letter);
      } else {
        out.push_back(letter);
        out.insert(out.end(), x_inv.begin(), x_inv.end());
      }
    } else {
      out.insert(out.end(), x.begin(), x.end());
      out.push_back(letter);
      out.insert(out.end(), x_inv.begin(), x_inv.end());
    }
  }
  return free_reduce(word(m, n + 1, std::move(out)));
}

MixedBraidWord algebraic_band_move(const MixedBraidWord& beta1,
                                   const MixedBraidWord& beta2, int k, int sign,
                                   const ManifoldSpec& spec) {
  require_pair(beta1, beta2);
  if (spec.m != beta1.m()) {
    throw MoveError("word and spec disagree on m");
  }
  const int strand = component_strand_for_pure(spec, k);
  const long long p = spec.framing(k);
  const int n = beta1.n();
  return free_reduce(multiply(
      {band_substitute(beta1, strand), power(framing_loop(spec.m, strand, n), p),
       word(spec.m, n + 1, {L::moving(n, sign)}), band_substitute(beta2, strand)}));
}

MixedBraidWord compute_r(const ManifoldSpec& spec, int k, int n,
                         LoopWordCache* cache) {
  return cache != nullptr ? cache->r(spec, k, n) : compute_r_uncached(spec, k, n);
}

MixedBraidWord combed_band_move(const MixedBraidWord& beta1,
                                const MixedBraidWord& beta2, int k, int sign,
                                const ManifoldSpec& spec, LoopWordCache* cache) {
  const MixedBraidWord moved = algebraic_band_move(beta1, beta2, k, sign, spec);
  return free_reduce(multiply(moved, compute_r(spec, k, beta1.n(), cache)));
}

MixedBraidWord compute_parallel_r(const ManifoldSpec& spec, int k, int n) {
  if (n < 1) {
    throw RangeError("n must be >= 1");
  }
  const std::vector<int>& comp = spec.component(k);
  return comb(part_braid(cable_parallel(spec, comp, n), spec.m)).algebraic;
}

MixedBraidWord parallel_substitute(const MixedBraidWord& beta,
                                   const ManifoldSpec& spec, int k) {
  require_algebraic(beta, "band substitution");
  const std::vector<int>& comp = spec.component(k);
  const int wide = beta.n() + static_cast<int>(comp.size());
  std::vector<MixedLetter> out;
  for (const MixedLetter& letter : beta.letters()) {
    if (letter.kind == LetterKind::loop) {
      const MixedBraidWord sub = cabled_loop_substitute(
          beta.m(), beta.n(), comp, letter.index, letter.sign);
      out.insert(out.end(), sub.letters().begin(), sub.letters().end());
    } else {
      out.push_back(letter);
    }
  }
  return free_reduce(word(beta.m(), wide, std::move(out)));
}

MixedBraidWord nonpure_band_move(const MixedBraidWord& beta1,
                                 const MixedBraidWord& beta2, int k, int sign,
                                 const ManifoldSpec& spec, LoopWordCache* cache) {
  require_pair(beta1, beta2);
  if (spec.m != beta1.m()) {
    throw MoveError("word and spec disagree on m");
  }
  const std::vector<int>& comp = spec.component(k);
  if (comp.size() == 1 && spec.is_pure()) {
    return combed_band_move(beta1, beta2, k, sign, spec, cache);
  }
  const long long p = spec.framing(k);
  const int m = spec.m;
  const int n = beta1.n();
  const int c = static_cast<int>(comp.size());
  const int wide = n + c;
  const int rightmost = comp.back();

  std::vector<MixedLetter> d;
  for (int j = n + c - 1; j >= n + 1; --j) {
    d.push_back(L::moving(j, -1));
  }
  const MixedBraidWord dw = word(m, wide, d);
  const MixedBraidWord twist =
      widen(power(framing_loop(m, rightmost, n), p), wide);
  return free_reduce(multiply(
      {parallel_substitute(beta1, spec, k), dw, twist,
       word(m, wide, {L::moving(n, sign)}), invert(dw),
       parallel_substitute(beta2, spec, k), compute_parallel_r(spec, k, n)}));
}

MixedBraidWord apply_move(const MixedBraidWord& beta, const MoveRecord& move,
                          const ManifoldSpec& spec, LoopWordCache* cache) {
  struct Visitor {
    const MixedBraidWord& beta;
    const ManifoldSpec& spec;
    LoopWordCache* cache;

    MixedBraidWord operator()(const MMove& x) const {
      if (x.destabilize) {
        const MixedBraidWord out = m_destabilize(beta, x.split);
        if (beta.letters()[x.split].sign != x.sign) {
          throw MoveError("destabilization sign does not match the letter");
        }
        return out;
      }
      auto [a, b] = split_word(beta, x.split);
      return m_move(a, b, x.sign);
    }
    MixedBraidWord operator()(const MarkovConj& x) const {
      return markov_conjugate(beta, x.j, x.sign);
    }
    MixedBraidWord operator()(const TwistedConj& x) const {
      return twisted_conjugate(beta, x.i, x.sign, spec, cache);
    }
    MixedBraidWord operator()(const LMove& x) const {
      auto [a, b] = split_word(beta, x.split);
      return l_move(a, b, x.kind, x.i, x.sign);
    }
    MixedBraidWord operator()(const BandMove& x) const {
      auto [a, b] = split_word(beta, x.split);
      return algebraic_band_move(a, b, x.component, x.sign, spec);
    }
    MixedBraidWord operator()(const CombedBandMove& x) const {
      auto [a, b] = split_word(beta, x.split);
      return combed_band_move(a, b, x.component, x.sign, spec, cache);
    }
    MixedBraidWord operator()(const NonPureBandMove& x) const {
      auto [a, b] = split_word(beta, x.split);
      return nonpure_band_move(a, b, x.component, x.sign, spec, cache);
    }
  };
  return std::visit(Visitor{beta, spec, cache}, move);
}

std::optional<MoveRecord> inverse(const MoveRecord& move) {
  if (const auto* x = std::get_if<MMove>(&move)) {
    return MMove{x->sign, x->split, !x->destabilize};
  }
  if (const auto* x = std::get_if<MarkovConj>(&move)) {
    return MarkovConj{x->j, -x->sign};
  }
  if (const auto* x = std::get_if<TwistedConj>(&move)) {
    return TwistedConj{x->i, -x->sign};
  }
  return std::nullopt;
}

}  // namespace mixbraid
