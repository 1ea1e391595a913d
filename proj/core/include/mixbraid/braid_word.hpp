#pragma once

#include <cstddef>
#include <compare>
#include <string>
#include <vector>

#include "mixbraid/errors.hpp"

namespace mixbraid {

inline constexpr std::size_t kDefaultWordCap = 100000;

/// One classical braid generator sigma_index^sign.
struct Generator {
  int index = 1;  // 1-based: crosses strands index and index+1
  int sign = 1;   // +1 or -1

  constexpr Generator inverse() const noexcept { return {index, -sign}; }

  friend constexpr bool operator==(const Generator&, const Generator&) = default;
  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

/// Permutation of {0..N-1}. `image(i)` is the bottom position of the strand
/// that starts at top position i. Printed 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Apply `*this` first, then `after`.
  Permutation then(const Permutation& after) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// A word in the classical generators of B_N, read left (top) to right
/// (bottom). The empty word is the identity.
class BraidWord {
 public:
  explicit BraidWord(int strands = 1);
  BraidWord(int strands, std::vector<Generator> letters);

  int strands() const noexcept { return strands_; }
  const std::vector<Generator>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Generator> letters_;
};

/// Iteratively cancels adjacent g g^-1 pairs.
BraidWord free_reduce(const BraidWord& w);

BraidWord invert(const BraidWord& w);

/// Concatenation; throws RangeError on a strand-count mismatch.
BraidWord multiply(const BraidWord& u, const BraidWord& v);

/// Underlying permutation; letter signs are ignored.
Permutation permutation_of(const BraidWord& w);

/// Sum of letter signs. A homomorphism B_N -> Z.
long long exponent_sum(const BraidWord& w);

/// Throws WordOverflowError when `length > cap`.
void check_word_length(std::size_t length, std::size_t cap);

}  // namespace mixbraid
