#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixbraid/garside.hpp"
#include "mixbraid/manifold.hpp"
#include "mixbraid/mixed_word.hpp"
#include "mixbraid/moves.hpp"

namespace mixbraid {

/// (m, n, normal form of the embedding): equal keys iff equal elements of
/// the same B_{m,n}.
struct CanonicalKey {
  int m = 1;
  int n = 1;
  NormalForm nf;

  std::string to_string() const;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_key(const MixedBraidWord& beta);

struct Certificate {
  MixedBraidWord start;
  std::vector<MoveRecord> moves;
  MixedBraidWord end;
};

/// {"start", "moves": [{"type", "params"}], "end"} plus "m", "n" (of
/// start) and "end_n".
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(std::string_view text);

/// Applies the moves to `start`, freely reducing after each one.
MixedBraidWord replay(const Certificate& cert, const ManifoldSpec& spec,
                      LoopWordCache* cache = nullptr);
/// Replays and compares the result with `end` through the embedding.
bool replays(const Certificate& cert, const ManifoldSpec& spec,
             LoopWordCache* cache = nullptr);

struct SearchBudget {
  int max_depth = 3;
  int n_max = 3;
  std::size_t max_word_length = 200;
  std::size_t max_nodes = 200000;
  std::uint64_t seed = 0;  // reserved; the search itself is deterministic
};

struct SearchStats {
  std::size_t expanded = 0;
  std::size_t generated = 0;
  int depth_reached = 0;
  bool pruned_by_winding = false;
  bool budget_exhausted = false;
};

struct SearchResult {
  std::optional<Certificate> certificate;
  SearchStats stats;
};

/// The moves tried from `beta`, in search order: Markov conjugations
/// (ascending j, then sign +,-), twisted conjugations (ascending i, then
/// sign), M-moves (stabilize at the end with +,- while n < n_max, then
/// destabilize when the word has a single sigma_{n-1}), and, for surgery
/// specs, combed (or non-pure) band moves with empty beta2 by ascending
/// component and sign.
std::vector<MoveRecord> candidate_moves(const MixedBraidWord& beta,
                                        const ManifoldSpec& spec, int n_max,
                                        bool with_band_moves = true);

/// Breadth-first search for a move sequence from u to v. A miss proves
/// nothing about equivalence. For complement specs, u and v whose loop
/// exponent sums differ on some closure component are rejected up front.
SearchResult bounded_search(const MixedBraidWord& u, const MixedBraidWord& v,
                            const ManifoldSpec& spec, const SearchBudget& budget,
                            LoopWordCache* cache = nullptr);

/// Component-wise sums of the winding vector; preserved by every move of a
/// complement spec.
std::vector<long long> component_winding(const MixedBraidWord& beta,
                                         const ManifoldSpec& spec);

struct RandomWalkOptions {
  int n_max = 3;
  /// Restrict to the search alphabet without band moves, so every step can
  /// be undone and recovered by bounded_search.
  bool invertible_only = false;
  std::size_t max_word_length = 400;
};

struct RandomWalk {
  MixedBraidWord word;
  Certificate certificate;
};

/// Applies `steps` uniformly chosen legal moves (seeded with mt19937_64) to
/// free_reduce(beta); each intermediate word is freely reduced.
/// Beyond the search alphabet, the unrestricted walk also uses M-moves and
/// L-moves at random cuts and band moves at random cuts on surgery specs.
RandomWalk random_walk(const MixedBraidWord& beta, const ManifoldSpec& spec,
                       int steps, std::uint64_t seed,
                       const RandomWalkOptions& options = {},
                       LoopWordCache* cache = nullptr);

}  // namespace mixbraid
