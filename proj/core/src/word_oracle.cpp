#include "mixbraid/word_oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "mixbraid/errors.hpp"

namespace mixbraid {
namespace {

// Letters as signed generator indices: +i is sigma_i, -i its inverse.
using Letters = std::vector<int>;

std::vector<Letters> relator_rotations(int strands) {
  std::vector<Letters> relators;
  for (int i = 1; i + 1 < strands; ++i) {
    relators.push_back({i, i + 1, i, -(i + 1), -i, -(i + 1)});
  }
  for (int i = 1; i < strands; ++i) {
    for (int j = i + 2; j < strands; ++j) {
      relators.push_back({i, j, -i, -j});
    }
  }
  std::vector<Letters> out;
  for (const Letters& r : relators) {
    Letters inv(r.rbegin(), r.rend());
    for (int& x : inv) {
      x = -x;
    }
    for (const Letters* base : {&r, static_cast<const Letters*>(&inv)}) {
      for (std::size_t k = 0; k < base->size(); ++k) {
        Letters rot(base->begin() + static_cast<std::ptrdiff_t>(k), base->end());
        rot.insert(rot.end(), base->begin(),
                   base->begin() + static_cast<std::ptrdiff_t>(k));
        out.push_back(std::move(rot));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Letters reduce_insert(const Letters& w, std::size_t at, const Letters& r) {
  Letters out;
  out.reserve(w.size() + r.size());
  auto push = [&out](int x) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  };
  for (std::size_t p = 0; p < at; ++p) {
    out.push_back(w[p]);
  }
  for (int x : r) {
    push(x);
  }
  for (std::size_t p = at; p < w.size(); ++p) {
    push(w[p]);
  }
  return out;
}

Letters to_letters(const BraidWord& w) {
  Letters out;
  const BraidWord reduced = free_reduce(w);
  for (const Generator& g : reduced.letters()) {
    out.push_back(g.sign * g.index);
  }
  return out;
}

std::string key_of(const Letters& w) {
  return std::string(w.begin(), w.end());  // |letters| < 128
}

// Cancellations at the two junctions when `r` is inserted at `at`, assuming
// `w` and `r` are each reduced. Only a lower bound once r is fully consumed.
std::size_t junction_cancellations(const Letters& w, std::size_t at,
                                   const Letters& r) {
  std::size_t left = 0;
  while (left < r.size() && left < at && w[at - 1 - left] == -r[left]) {
    ++left;
  }
  std::size_t right = 0;
  while (right + left < r.size() && at + right < w.size() &&
         w[at + right] == -r[r.size() - 1 - right]) {
    ++right;
  }
  return left + right;
}

}  // namespace

OracleVerdict oracle_equal(const BraidWord& u, const BraidWord& v, int bound) {
  if (u.strands() != v.strands()) {
    throw RangeError("strand count mismatch");
  }
  if (exponent_sum(u) != exponent_sum(v) ||
      permutation_of(u) != permutation_of(v)) {
    return OracleVerdict::not_equal;
  }
  const Letters start = to_letters(u);
  const Letters target = to_letters(v);
  if (start == target) {
    return OracleVerdict::equal;
  }
  if (static_cast<int>(start.size()) > bound ||
      static_cast<int>(target.size()) > bound) {
    return OracleVerdict::unknown;
  }
  const std::vector<Letters> rotations = relator_rotations(u.strands());
  std::unordered_set<std::string> seen{key_of(start)};
  std::deque<Letters> frontier{start};
  while (!frontier.empty()) {
    Letters w = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t at = 0; at <= w.size(); ++at) {
      for (const Letters& r : rotations) {
        Letters next = reduce_insert(w, at, r);
        if (static_cast<int>(next.size()) > bound) {
          continue;
        }
        if (next == target) {
          return OracleVerdict::equal;
        }
        if (seen.insert(key_of(next)).second) {
          frontier.push_back(std::move(next));
        }
      }
    }
  }
  return OracleVerdict::unknown;
}

OracleClasses::OracleClasses(int strands, int bound)
    : strands_(strands), bound_(bound), alphabet_(2 * (strands - 1)) {
  if (strands < 2 || bound < 0) {
    throw RangeError("oracle table needs >= 2 strands and a bound >= 0");
  }
  offset_.assign(static_cast<std::size_t>(bound) + 2, 0);
  std::uint64_t count = 1;
  for (int len = 0; len <= bound; ++len) {
    offset_[static_cast<std::size_t>(len) + 1] =
        offset_[static_cast<std::size_t>(len)] + count;
    count = len == 0 ? static_cast<std::uint64_t>(alphabet_)
                     : count * static_cast<std::uint64_t>(alphabet_ - 1);
  }
  const std::uint64_t total = offset_.back();
  if (total > 0xffffffffULL) {
    throw RangeError("oracle table too large");
  }
  parent_.resize(total);
  for (std::uint64_t x = 0; x < total; ++x) {
    parent_[x] = static_cast<std::uint32_t>(x);
  }
  build();
}

// Code c in [0, alphabet): generator c/2+1, sign + if c even. Inverse is c^1.
std::uint64_t OracleClasses::rank(const std::vector<int>& codes) const {
  std::uint64_t r = 0;
  for (std::size_t t = 0; t < codes.size(); ++t) {
    if (t == 0) {
      r = static_cast<std::uint64_t>(codes[0]);
    } else {
      const int forbidden = codes[t - 1] ^ 1;
      const int d = codes[t] < forbidden ? codes[t] : codes[t] - 1;
      r = r * static_cast<std::uint64_t>(alphabet_ - 1) +
          static_cast<std::uint64_t>(d);
    }
  }
  return offset_[codes.size()] + r;
}

std::uint32_t OracleClasses::find(std::uint32_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void OracleClasses::unite(std::uint32_t a, std::uint32_t b) {
  a = find(a);
  b = find(b);
  if (a != b) {
    if (a < b) {
      parent_[b] = a;
    } else {
      parent_[a] = b;
    }
  }
}

void OracleClasses::build() {
  const std::vector<Letters> rotations = relator_rotations(strands_);
  auto to_code = [](int x) { return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1; };
  auto from_code = [](int c) { return c % 2 == 0 ? c / 2 + 1 : -(c / 2 + 1); };

  // Depth-first enumeration of reduced words; each undirected edge is seen
  // from its longer (or equal-length) endpoint as a shortening insertion.
  std::vector<int> codes;
  Letters w;
  std::vector<int> next_codes;
  auto visit = [&]() {
    const std::uint32_t self = static_cast<std::uint32_t>(rank(codes));
    for (std::size_t at = 0; at <= w.size(); ++at) {
      for (const Letters& r : rotations) {
        if (2 * junction_cancellations(w, at, r) < r.size()) {
          continue;
        }
        Letters next = reduce_insert(w, at, r);
        if (next.size() > w.size()) {
          continue;
        }
        next_codes.clear();
        for (int x : next) {
          next_codes.push_back(to_code(x));
        }
        unite(self, static_cast<std::uint32_t>(rank(next_codes)));
      }
    }
  };
  auto recurse = [&](auto&& self_fn) -> void {
    visit();
    if (static_cast<int>(codes.size()) == bound_) {
      return;
    }
    for (int c = 0; c < alphabet_; ++c) {
      if (!codes.empty() && c == (codes.back() ^ 1)) {
        continue;
      }
      codes.push_back(c);
      w.push_back(from_code(c));
      self_fn(self_fn);
      codes.pop_back();
      w.pop_back();
    }
  };
  recurse(recurse);
}

std::uint32_t OracleClasses::class_of(const BraidWord& w) {
  if (w.strands() != strands_) {
    throw RangeError("strand count mismatch");
  }
  std::vector<int> codes;
  const BraidWord reduced = free_reduce(w);
  for (const Generator& g : reduced.letters()) {
    codes.push_back(2 * (g.index - 1) + (g.sign > 0 ? 0 : 1));
  }
  if (static_cast<int>(codes.size()) > bound_) {
    throw RangeError("word longer than oracle bound");
  }
  return find(static_cast<std::uint32_t>(rank(codes)));
}

std::vector<BraidWord> OracleClasses::words_up_to(int max_length) const {
  std::vector<BraidWord> out;
  std::vector<Generator> letters;
  auto recurse = [&](auto&& self_fn) -> void {
    out.emplace_back(strands_, letters);
    if (static_cast<int>(letters.size()) == max_length) {
      return;
    }
    for (int c = 0; c < alphabet_; ++c) {
      Generator g{c / 2 + 1, c % 2 == 0 ? 1 : -1};
      if (!letters.empty() && letters.back() == g.inverse()) {
        continue;
      }
      letters.push_back(g);
      self_fn(self_fn);
      letters.pop_back();
    }
  };
  recurse(recurse);
  return out;
}

}  // namespace mixbraid
