#pragma once

#include <vector>

#include "mixbraid/braid_word.hpp"

namespace mixbraid {

/// Left normal form Delta^infimum * f_1 * ... * f_r. Each factor is a
/// permutation braid given by its permutation; no factor is trivial or the
/// half twist, and every adjacent pair is left-weighted. Two words are equal
/// in B_N iff their normal forms compare equal.
struct NormalForm {
  int strands = 1;
  int infimum = 0;
  std::vector<Permutation> factors;

  bool is_identity() const noexcept { return infimum == 0 && factors.empty(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Permutation of the half twist on n strands (i -> n-1-i).
Permutation half_twist(int n);

/// Canonical positive lift of a permutation braid (lexicographically
/// smallest reduced word obtained by repeatedly peeling the leftmost descent).
BraidWord permutation_braid(const Permutation& p);

NormalForm normal_form(const BraidWord& w);

/// Delta^infimum followed by the canonical lift of each factor.
BraidWord to_word(const NormalForm& nf);

/// Word problem in B_N. Throws RangeError on a strand-count mismatch.
bool equal(const BraidWord& u, const BraidWord& v);

}  // namespace mixbraid
