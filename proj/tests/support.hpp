#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mixbraid/braid_word.hpp"
#include "mixbraid/mixed_word.hpp"
#include "mixbraid/word_text.hpp"

namespace testing_support {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline int random_sign(Rng& rng) { return uniform(rng, 0, 1) != 0 ? 1 : -1; }

inline mixbraid::BraidWord random_braid(Rng& rng, int strands, int max_len) {
  std::vector<mixbraid::Generator> letters;
  const int len = uniform(rng, 0, max_len);
  for (int t = 0; t < len && strands > 1; ++t) {
    letters.push_back({uniform(rng, 1, strands - 1), random_sign(rng)});
  }
  return mixbraid::BraidWord(strands, std::move(letters));
}

/// Random word over the letters allowed for (m, n); fixed crossings only
/// when `with_fixed`.
inline mixbraid::MixedBraidWord random_mixed(Rng& rng, int m, int n, int max_len,
                                             bool with_fixed = false) {
  using mixbraid::LetterKind;
  std::vector<LetterKind> kinds{LetterKind::loop};
  if (n > 1) {
    kinds.push_back(LetterKind::moving_crossing);
  }
  if (with_fixed && m > 1) {
    kinds.push_back(LetterKind::fixed_crossing);
  }
  std::vector<mixbraid::MixedLetter> letters;
  const int len = uniform(rng, 0, max_len);
  for (int t = 0; t < len; ++t) {
    const LetterKind kind =
        kinds[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(kinds.size()) - 1))];
    const int hi = kind == LetterKind::loop             ? m
                   : kind == LetterKind::fixed_crossing ? m - 1
                                                        : n - 1;
    letters.push_back({kind, uniform(rng, 1, hi), random_sign(rng)});
  }
  return mixbraid::MixedBraidWord(m, n, std::move(letters));
}

inline mixbraid::MixedBraidWord W(const std::string& text, int m, int n) {
  return mixbraid::parse_word(text, m, n);
}

inline mixbraid::BraidWord B(const std::string& text, int strands) {
  return mixbraid::parse_braid_word(text, strands);
}

/// Literal letter sequence of a classical word as signed indices.
inline std::vector<int> signed_letters(const mixbraid::BraidWord& w) {
  std::vector<int> out;
  for (const auto& g : w.letters()) {
    out.push_back(g.sign * g.index);
  }
  return out;
}

}  // namespace testing_support
