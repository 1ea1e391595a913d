#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "mixbraid/braid_word.hpp"

namespace mixbraid {

enum class LetterKind { fixed_crossing, loop, moving_crossing };

/// Sigma_k (fixed crossing), a_i (loop) or sigma_j (moving crossing), with a
/// sign.
struct MixedLetter {
  LetterKind kind = LetterKind::moving_crossing;
  int index = 1;
  int sign = 1;

  static constexpr MixedLetter fixed(int k, int sign = 1) {
    return {LetterKind::fixed_crossing, k, sign};
  }
  static constexpr MixedLetter loop(int i, int sign = 1) {
    return {LetterKind::loop, i, sign};
  }
  static constexpr MixedLetter moving(int j, int sign = 1) {
    return {LetterKind::moving_crossing, j, sign};
  }

  constexpr MixedLetter inverse() const noexcept { return {kind, index, -sign}; }

  friend constexpr bool operator==(const MixedLetter&, const MixedLetter&) = default;
  friend constexpr auto operator<=>(const MixedLetter&, const MixedLetter&) = default;
};

/// A word over m fixed and n >= 1 moving strands. Without fixed crossings it
/// is an algebraic mixed braid (an element of B_{m,n}); otherwise it stands
/// for a parted mixed braid.
class MixedBraidWord {
 public:
  MixedBraidWord(int m, int n);
  MixedBraidWord(int m, int n, std::vector<MixedLetter> letters);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  const std::vector<MixedLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  bool is_algebraic() const noexcept;

  friend bool operator==(const MixedBraidWord&, const MixedBraidWord&) = default;

 private:
  int m_;
  int n_;
  std::vector<MixedLetter> letters_;
};

using WindingVector = std::vector<long long>;

MixedBraidWord free_reduce(const MixedBraidWord& w);
MixedBraidWord invert(const MixedBraidWord& w);
/// Concatenation; both words must have the same (m, n).
MixedBraidWord multiply(const MixedBraidWord& u, const MixedBraidWord& v);
MixedBraidWord multiply(std::initializer_list<MixedBraidWord> words);
/// w^p for any integer p.
MixedBraidWord power(const MixedBraidWord& w, long long p);
/// The same letters viewed in B_{m,n_new} (n_new >= n).
MixedBraidWord widen(const MixedBraidWord& w, int n_new);
/// The same letters viewed over m_new >= m fixed strands.
MixedBraidWord widen_fixed(const MixedBraidWord& w, int m_new);

/// Embedding into B_{m+n}: Sigma_k -> s_k, sigma_j -> s_{m+j}, and
/// a_i -> (s_m ... s_{i+1}) s_i^2 (s_{i+1}^-1 ... s_m^-1).
BraidWord embed(const MixedBraidWord& w);

/// The embedded image of the fixed word B (on m strands) inside B_{m+n}.
BraidWord embed_fixed(const BraidWord& fixed, int n);

/// Reads a fixed braid (on m strands) as a word of Sigma letters.
MixedBraidWord fixed_as_mixed(const BraidWord& fixed, int n);

WindingVector winding_vector(const MixedBraidWord& w);

/// Equality of group elements, decided through the embedding.
bool mixed_equal(const MixedBraidWord& u, const MixedBraidWord& v);

struct PresentationInstance {
  std::string family;
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

struct PresentationReport {
  int m = 1;
  int n = 1;
  std::vector<PresentationInstance> instances;

  bool all_hold() const noexcept;
};

/// Checks every instance of the defining relations of B_{m,n} through the
/// embedding.
PresentationReport check_presentation(int m, int n);

}  // namespace mixbraid
