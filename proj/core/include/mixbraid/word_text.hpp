#pragma once

#include <string>
#include <string_view>

#include "mixbraid/braid_word.hpp"
#include "mixbraid/mixed_word.hpp"

namespace mixbraid {

/// Grammar: letters separated by whitespace, letter := base ('^' int)?,
/// base := 'S' nat | 's' nat | 'a' nat. A power expands to repeated letters
/// (inverted for negative exponents); the exponent must be nonzero.
/// Syntax errors report a byte offset, range errors a letter position.
MixedBraidWord parse_word(std::string_view text, int m, int n);

/// Renders a word in the grammar. Runs of identical letters are compressed
/// into powers unless `raw` is set. The empty word renders as "".
std::string format_word(const MixedBraidWord& w, bool raw = false);

/// Classical word on `strands` strands written with 's' letters.
BraidWord parse_braid_word(std::string_view text, int strands);
std::string format_braid_word(const BraidWord& w, bool raw = false);

/// Fixed braid on m strands written with 'S' letters.
BraidWord parse_fixed_word(std::string_view text, int m);
std::string format_fixed_word(const BraidWord& w, bool raw = false);

}  // namespace mixbraid
