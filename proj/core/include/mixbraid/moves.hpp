#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "mixbraid/manifold.hpp"
#include "mixbraid/mixed_word.hpp"

namespace mixbraid {

enum class LMoveKind { over, under };

/// alpha1 alpha2 -> alpha1 sigma_n^sign alpha2 with the cut after `split`
/// letters. With `destabilize` set it is the reverse: the letter at `split`
/// must be sigma_{n-1}^sign and is removed, dropping one moving strand.
struct MMove {
  int sign = 1;
  std::size_t split = 0;
  bool destabilize = false;
  friend bool operator==(const MMove&, const MMove&) = default;
};

/// beta -> sigma_j^sign beta sigma_j^-sign
struct MarkovConj {
  int j = 1;
  int sign = 1;
  friend bool operator==(const MarkovConj&, const MarkovConj&) = default;
};

/// beta -> a_i^-sign beta rho_i^sign
struct TwistedConj {
  int i = 1;
  int sign = 1;
  friend bool operator==(const TwistedConj&, const TwistedConj&) = default;
};

struct LMove {
  LMoveKind kind = LMoveKind::over;
  int i = 1;
  int sign = 1;
  std::size_t split = 0;
  friend bool operator==(const LMove&, const LMove&) = default;
};

struct BandMove {
  int component = 1;
  int sign = 1;
  std::size_t split = 0;
  friend bool operator==(const BandMove&, const BandMove&) = default;
};

struct CombedBandMove {
  int component = 1;
  int sign = 1;
  std::size_t split = 0;
  friend bool operator==(const CombedBandMove&, const CombedBandMove&) = default;
};

struct NonPureBandMove {
  int component = 1;
  int sign = 1;
  std::size_t split = 0;
  friend bool operator==(const NonPureBandMove&, const NonPureBandMove&) = default;
};

using MoveRecord = std::variant<MMove, MarkovConj, TwistedConj, LMove, BandMove,
                                CombedBandMove, NonPureBandMove>;

/// "m", "conj", "twist", "l", "band", "combed-band" or "nonpure-band".
std::string move_type(const MoveRecord& move);
std::string describe(const MoveRecord& move);

/// Memo table for rho_i and r_k words, keyed by the fixed braid, the index
/// and n. Lookups are atomic: concurrent callers always see one value.
class LoopWordCache {
 public:
  MixedBraidWord rho(const ManifoldSpec& spec, int i, int n);
  MixedBraidWord r(const ManifoldSpec& spec, int k, int n);

  std::size_t size() const;
  void clear();

 private:
  using Key = std::tuple<std::string, char, int, int>;

  mutable std::mutex mutex_;
  std::map<Key, MixedBraidWord> entries_;
};

/// Splits a word into (letters before `split`, the rest).
std::pair<MixedBraidWord, MixedBraidWord> split_word(const MixedBraidWord& w,
                                                     std::size_t split);

MixedBraidWord m_move(const MixedBraidWord& beta1, const MixedBraidWord& beta2,
                      int sign);
MixedBraidWord m_destabilize(const MixedBraidWord& beta, std::size_t position);

MixedBraidWord markov_conjugate(const MixedBraidWord& beta, int j, int sign);

MixedBraidWord twisted_conjugate(const MixedBraidWord& beta, int i, int sign,
                                 const ManifoldSpec& spec,
                                 LoopWordCache* cache = nullptr);

/// Algebraic L-move on beta1 beta2 at position i, in B_{m,n+1}. The over
/// version is c^-1 beta1 Y sigma_n^sign Y^-1 beta2 c with
/// c = sigma_n ... sigma_i and Y = sigma_i^-1 ... sigma_{n-1}^-1; the under
/// version conjugates the other way with c' = sigma_i ... sigma_n and
/// Y' = sigma_i ... sigma_{n-1}.
MixedBraidWord l_move(const MixedBraidWord& beta1, const MixedBraidWord& beta2,
                      LMoveKind kind, int i, int sign);

/// The same L-move written as one M-move followed by Markov conjugations.
struct MoveSequence {
  MixedBraidWord start;
  std::vector<MoveRecord> moves;
};
MoveSequence l_move_factorization(const MixedBraidWord& beta1,
                                  const MixedBraidWord& beta2, LMoveKind kind,
                                  int i, int sign);

/// lambda_n = sigma_n ... sigma_1 in B_{m,n+1}.
MixedBraidWord lambda(int m, int n);
/// t_{k,n} = sigma_n ... sigma_1 a_k sigma_1^-1 ... sigma_n^-1 in B_{m,n+1}.
MixedBraidWord framing_loop(int m, int k, int n);

/// The band-move substitution for a band along pure component k, giving a
/// word in B_{m,n+1}.
MixedBraidWord band_substitute(const MixedBraidWord& beta, int k);

/// beta1' t_{k,n}^{p_k} sigma_n^sign beta2' (pure specs only).
MixedBraidWord algebraic_band_move(const MixedBraidWord& beta1,
                                   const MixedBraidWord& beta2, int k, int sign,
                                   const ManifoldSpec& spec);

/// Combing through the fixed braid of a moving strand parallel to strand k,
/// placed at moving position n + 1: lambda_n (combed parallel) lambda_n^-1.
/// Component k must be a single strand.
MixedBraidWord compute_r(const ManifoldSpec& spec, int k, int n,
                         LoopWordCache* cache = nullptr);

MixedBraidWord combed_band_move(const MixedBraidWord& beta1,
                                const MixedBraidWord& beta2, int k, int sign,
                                const ManifoldSpec& spec,
                                LoopWordCache* cache = nullptr);

/// Combing of the c parallels of component k, parked after the n moving
/// strands, in B_{m,n+c}.
MixedBraidWord compute_parallel_r(const ManifoldSpec& spec, int k, int n);

/// Substitution for a band that runs parallel to every strand of component
/// k, in B_{m,n+c}.
MixedBraidWord parallel_substitute(const MixedBraidWord& beta,
                                   const ManifoldSpec& spec, int k);

/// beta1' D t_{R,n}^{p_k} sigma_n^sign D^-1 beta2' r, where R is the
/// rightmost strand of component k and D = sigma_{n+c-1}^-1 ... sigma_{n+1}^-1.
/// A single-strand component gives exactly combed_band_move.
MixedBraidWord nonpure_band_move(const MixedBraidWord& beta1,
                                 const MixedBraidWord& beta2, int k, int sign,
                                 const ManifoldSpec& spec,
                                 LoopWordCache* cache = nullptr);

MixedBraidWord apply_move(const MixedBraidWord& beta, const MoveRecord& move,
                          const ManifoldSpec& spec,
                          LoopWordCache* cache = nullptr);

/// A move undoing `move` when applied to its output, if there is one.
/// Band and L-moves have none.
std::optional<MoveRecord> inverse(const MoveRecord& move);

}  // namespace mixbraid
