#pragma once

#include <cstdint>
#include <vector>

#include "mixbraid/braid_word.hpp"

namespace mixbraid {

enum class OracleVerdict { equal, not_equal, unknown };

/// Independent check of the word problem, sharing no code with the normal
/// form. Explores, breadth first, every freely reduced word of length at most
/// `bound` reachable from `u` by inserting a cyclic rotation of a defining
/// relator (or its inverse) and freely reducing. Returns `equal` once `v` is
/// reached. Returns `not_equal` only when the exponent sums or permutations
/// differ; otherwise exhausting the bounded component gives `unknown`.
OracleVerdict oracle_equal(const BraidWord& u, const BraidWord& v, int bound);

/// Connected components of the same rewrite graph over all freely reduced
/// words of length <= bound, computed once with a union-find. Used to compare
/// the oracle against the normal form exhaustively.
class OracleClasses {
 public:
  OracleClasses(int strands, int bound);

  int strands() const noexcept { return strands_; }
  int bound() const noexcept { return bound_; }
  std::uint64_t node_count() const noexcept { return parent_.size(); }

  /// Component id of a word; the word is freely reduced first and must then
  /// have length <= bound.
  std::uint32_t class_of(const BraidWord& w);

  /// All freely reduced words of length <= max_length (in rank order).
  std::vector<BraidWord> words_up_to(int max_length) const;

 private:
  std::uint64_t rank(const std::vector<int>& codes) const;
  std::uint32_t find(std::uint32_t x);
  void unite(std::uint32_t a, std::uint32_t b);
  void build();

  int strands_;
  int bound_;
  int alphabet_;
  std::vector<std::uint64_t> offset_;
  std::vector<std::uint32_t> parent_;
};

}  // namespace mixbraid
