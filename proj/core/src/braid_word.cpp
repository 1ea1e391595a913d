#include "mixbraid/braid_word.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace mixbraid {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() ||
        seen[static_cast<std::size_t>(v)]) {
      throw RangeError("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& after) const {
  if (after.size() != size()) {
    throw RangeError("permutation size mismatch");
  }
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out[i] = after.images_[static_cast<std::size_t>(images_[i])];
  }
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i != 0) {
      s += ' ';
    }
    s += std::to_string(images_[i] + 1);
  }
  s += ']';
  return s;
}

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) {
    throw RangeError("braid word needs at least one strand");
  }
}

BraidWord::BraidWord(int strands, std::vector<Generator> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) {
    throw RangeError("braid word needs at least one strand");
  }
  for (std::size_t p = 0; p < letters_.size(); ++p) {
    const Generator& g = letters_[p];
    if (g.index < 1 || g.index >= strands_ || (g.sign != 1 && g.sign != -1)) {
      throw RangeError("generator at position " + std::to_string(p) +
                       " out of range for " + std::to_string(strands_) +
                       " strands");
    }
  }
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Generator> out;
  out.reserve(w.size());
  for (const Generator& g : w.letters()) {
    if (!out.empty() && out.back() == g.inverse()) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return BraidWord(w.strands(), std::move(out));
}

BraidWord invert(const BraidWord& w) {
  std::vector<Generator> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return BraidWord(w.strands(), std::move(out));
}

BraidWord multiply(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw RangeError("strand count mismatch: " + std::to_string(u.strands()) +
                     " vs " + std::to_string(v.strands()));
  }
  std::vector<Generator> out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(out));
}

Permutation permutation_of(const BraidWord& w) {
  // strand_at[p] = top position of the strand currently at position p
  std::vector<int> strand_at(static_cast<std::size_t>(w.strands()));
  std::iota(strand_at.begin(), strand_at.end(), 0);
  for (const Generator& g : w.letters()) {
    std::swap(strand_at[static_cast<std::size_t>(g.index - 1)],
              strand_at[static_cast<std::size_t>(g.index)]);
  }
  std::vector<int> images(strand_at.size());
  for (std::size_t p = 0; p < strand_at.size(); ++p) {
    images[static_cast<std::size_t>(strand_at[p])] = static_cast<int>(p);
  }
  return Permutation(std::move(images));
}

long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (const Generator& g : w.letters()) {
    s += g.sign;
  }
  return s;
}

void check_word_length(std::size_t length, std::size_t cap) {
  if (length > cap) {
    throw WordOverflowError(length, cap);
  }
}

}  // namespace mixbraid
