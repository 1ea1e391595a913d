#pragma once

#include "mixbraid/braid_word.hpp"
#include "mixbraid/manifold.hpp"
#include "mixbraid/mixed_word.hpp"

namespace mixbraid {

/// algebraic * coset, where the coset is the fixed-crossing subsequence of
/// the combed word (a braid on the m fixed strands).
struct CombedPair {
  MixedBraidWord algebraic;
  BraidWord coset;
};

/// Pushes every fixed crossing to the bottom of the word, rewriting the
/// loops it passes. Fixed crossings are handled from the rightmost one
/// leftwards and the accumulated word is freely reduced after each pass.
/// Throws WordOverflowError if the algebraic part would exceed `cap`.
CombedPair comb(const MixedBraidWord& w, std::size_t cap = kDefaultWordCap);

/// Combing of a_i through the fixed braid: the word rho_i with
/// B a_i = rho_i B, returned in B_{m,n}.
MixedBraidWord compute_rho(const ManifoldSpec& spec, int i, int n = 1);

/// Reads a classical braid on m + N strands whose first m endpoints at top
/// and bottom belong to the fixed strands as a parted mixed word on (m, N),
/// with embed(result) equal to w in B_{m+N}. Throws RangeError if the
/// fixed strands do not end in the first m positions.
MixedBraidWord part_braid(const BraidWord& w, int m);

}  // namespace mixbraid
