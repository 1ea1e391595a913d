#include "mixbraid/word_text.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <vector>

#include "mixbraid/errors.hpp"

namespace mixbraid {
namespace {

struct RawLetter {
  char base;
  int index;
  int sign;
  std::size_t offset;
};

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Power expansion is capped at kDefaultWordCap letters.
std::vector<RawLetter> lex(std::string_view text) {
  std::vector<RawLetter> out;
  std::size_t p = 0;
  auto syntax = [&](std::size_t at, const std::string& what) {
    return ParseError(ParseError::Kind::syntax, at,
                      "syntax error at byte " + std::to_string(at) + ": " + what);
  };
  auto read_int = [&](bool allow_sign, long long& value) {
    const std::size_t start = p;
    if (allow_sign && p < text.size() && (text[p] == '-' || text[p] == '+')) {
      ++p;
    }
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
      ++p;
    }
    std::string_view digits = text.substr(start, p - start);
    if (!digits.empty() && digits.front() == '+') {
      digits.remove_prefix(1);
    }
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw syntax(start, "expected an integer");
    }
  };
  while (true) {
    while (p < text.size() && is_space(text[p])) {
      ++p;
    }
    if (p == text.size()) {
      break;
    }
    const std::size_t start = p;
    const char base = text[p];
    if (base != 'S' && base != 's' && base != 'a') {
      throw syntax(p, std::string("unexpected character '") + base + "'");
    }
    ++p;
    long long index = 0;
    read_int(false, index);
    if (index < 1 || index > std::numeric_limits<int>::max()) {
      throw syntax(start + 1, "letter index must be a positive integer");
    }
    long long exponent = 1;
    if (p < text.size() && text[p] == '^') {
      ++p;
      const std::size_t at = p;
      read_int(true, exponent);
      if (exponent == 0) {
        throw syntax(at, "exponent must be nonzero");
      }
    }
    if (p < text.size() && !is_space(text[p])) {
      throw syntax(p, "letters must be separated by whitespace");
    }
    const long long count = exponent < 0 ? -exponent : exponent;
    if (out.size() + static_cast<std::size_t>(count) > kDefaultWordCap) {
      throw WordOverflowError(out.size() + static_cast<std::size_t>(count),
                              kDefaultWordCap);
    }
    for (long long t = 0; t < count; ++t) {
      out.push_back({base, static_cast<int>(index), exponent < 0 ? -1 : 1, start});
    }
  }
  return out;
}

ParseError range_error(std::size_t letter, std::size_t offset,
                       const std::string& what) {
  return ParseError(ParseError::Kind::range, letter,
                    "letter " + std::to_string(letter) + " (byte " +
                        std::to_string(offset) + "): " + what);
}

template <typename Letter, typename Name>
std::string format_letters(const std::vector<Letter>& letters, bool raw,
                           Name name) {
  std::string out;
  std::size_t p = 0;
  while (p < letters.size()) {
    std::size_t q = p + 1;
    if (!raw) {
      while (q < letters.size() && letters[q] == letters[p]) {
        ++q;
      }
    }
    const long long run = static_cast<long long>(q - p) * letters[p].sign;
    if (!out.empty()) {
      out += ' ';
    }
    out += name(letters[p]);
    if (run != 1) {
      out += '^';
      out += std::to_string(run);
    }
    p = q;
  }
  return out;
}

std::vector<Generator> classical_letters(std::string_view text, int strands,
                                         char expected) {
  std::vector<Generator> out;
  const std::vector<RawLetter> raw = lex(text);
  for (std::size_t p = 0; p < raw.size(); ++p) {
    const RawLetter& x = raw[p];
    if (x.base != expected) {
      throw ParseError(ParseError::Kind::syntax, x.offset,
                       "syntax error at byte " + std::to_string(x.offset) +
                           ": expected '" + expected + "' letters only");
    }
    if (x.index >= strands) {
      throw range_error(p, x.offset,
                        "index " + std::to_string(x.index) +
                            " needs more than " + std::to_string(strands) +
                            " strands");
    }
    out.push_back({x.index, x.sign});
  }
  return out;
}

}  // namespace

MixedBraidWord parse_word(std::string_view text, int m, int n) {
  if (m < 1 || n < 1) {
    throw RangeError("mixed braid needs m >= 1 and n >= 1");
  }
  std::vector<MixedLetter> out;
  const std::vector<RawLetter> raw = lex(text);
  out.reserve(raw.size());
  for (std::size_t p = 0; p < raw.size(); ++p) {
    const RawLetter& x = raw[p];
    MixedLetter letter;
    int limit = 0;
    switch (x.base) {
      case 'S':
        letter = MixedLetter::fixed(x.index, x.sign);
        limit = m - 1;
        break;
      case 'a':
        letter = MixedLetter::loop(x.index, x.sign);
        limit = m;
        break;
      default:
        letter = MixedLetter::moving(x.index, x.sign);
        limit = n - 1;
        break;
    }
    if (x.index > limit) {
      throw range_error(p, x.offset,
                        std::string(1, x.base) + std::to_string(x.index) +
                            " out of range for m=" + std::to_string(m) +
                            ", n=" + std::to_string(n));
    }
    out.push_back(letter);
  }
  return MixedBraidWord(m, n, std::move(out));
}

std::string format_word(const MixedBraidWord& w, bool raw) {
  return format_letters(w.letters(), raw, [](const MixedLetter& x) {
    const char base = x.kind == LetterKind::fixed_crossing ? 'S'
                      : x.kind == LetterKind::loop         ? 'a'
                                                           : 's';
    return std::string(1, base) + std::to_string(x.index);
  });
}

BraidWord parse_braid_word(std::string_view text, int strands) {
  return BraidWord(strands, classical_letters(text, strands, 's'));
}

std::string format_braid_word(const BraidWord& w, bool raw) {
  return format_letters(w.letters(), raw, [](const Generator& g) {
    return "s" + std::to_string(g.index);
  });
}

BraidWord parse_fixed_word(std::string_view text, int m) {
  return BraidWord(m, classical_letters(text, m, 'S'));
}

std::string format_fixed_word(const BraidWord& w, bool raw) {
  return format_letters(w.letters(), raw, [](const Generator& g) {
    return "S" + std::to_string(g.index);
  });
}

}  // namespace mixbraid
