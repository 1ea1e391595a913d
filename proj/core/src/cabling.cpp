#include "mixbraid/cabling.hpp"

#include <algorithm>
#include <utility>

#include "mixbraid/combing.hpp"
#include "mixbraid/errors.hpp"

namespace mixbraid {
namespace {

enum class Role { fixed, moving, parallel };

struct Label {
  Role role;
  int id;
  friend bool operator==(const Label&, const Label&) = default;
};

using Config = std::vector<Label>;

// Positive crossings taking `from` to `to`, each strand moving left over the
// ones it passes.
std::vector<Generator> pull(Config from, const Config& to) {
  std::vector<Generator> out;
  for (std::size_t t = 0; t < to.size(); ++t) {
    if (from[t] == to[t]) {
      continue;
    }
    const auto p = static_cast<std::size_t>(
        std::find(from.begin(), from.end(), to[t]) - from.begin());
    for (std::size_t q = p; q > t; --q) {
      out.push_back({static_cast<int>(q), 1});
      std::swap(from[q - 1], from[q]);
    }
  }
  return out;
}

void append_inverse(std::vector<Generator>& out, const std::vector<Generator>& w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(it->inverse());
  }
}

std::vector<int> sorted_followed(const std::vector<int>& followed, int m) {
  std::vector<int> s = followed;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw RangeError("followed strands must be distinct");
  }
  for (int x : s) {
    if (x < 1 || x > m) {
      throw RangeError("followed strand " + std::to_string(x) + " out of range");
    }
  }
  return s;
}

Config parked_config(int m, int n, const std::vector<int>& followed) {
  Config c;
  for (int i = 1; i <= m; ++i) {
    c.push_back({Role::fixed, i});
  }
  for (int j = 1; j <= n; ++j) {
    c.push_back({Role::moving, j});
  }
  for (int s : followed) {
    c.push_back({Role::parallel, s});
  }
  return c;
}

Config cabled_config(int m, int n, const std::vector<int>& followed) {
  Config c;
  for (int i = 1; i <= m; ++i) {
    c.push_back({Role::fixed, i});
    if (std::binary_search(followed.begin(), followed.end(), i)) {
      c.push_back({Role::parallel, i});
    }
  }
  for (int j = 1; j <= n; ++j) {
    c.push_back({Role::moving, j});
  }
  return c;
}

}  // namespace

BraidWord cable_parallel(const ManifoldSpec& spec,
                         const std::vector<int>& followed, int n) {
  const std::vector<int> par = sorted_followed(followed, spec.m);
  if (n < 0) {
    throw RangeError("moving strand count must be >= 0");
  }
  const Config parked = parked_config(spec.m, n, par);
  Config conf = cabled_config(spec.m, n, par);
  std::vector<Generator> word = pull(parked, conf);

  for (const Generator& g : spec.fixed_word.letters()) {
    std::vector<std::size_t> fixed_pos;
    for (std::size_t p = 0; p < conf.size(); ++p) {
      if (conf[p].role == Role::fixed) {
        fixed_pos.push_back(p);
      }
    }
    const std::size_t left = fixed_pos[static_cast<std::size_t>(g.index - 1)];
    const std::size_t right = fixed_pos[static_cast<std::size_t>(g.index)];
    std::size_t end = right + 1;
    while (end < conf.size() && conf[end].role == Role::parallel) {
      ++end;
    }
    const std::size_t left_width = right - left;
    // Each strand of the right group crosses the whole left group.
    for (std::size_t a = 0; a < end - right; ++a) {
      const std::size_t start = right + a;
      for (std::size_t s = 0; s < left_width; ++s) {
        word.push_back({static_cast<int>(start - s), g.sign});
      }
    }
    Config next(conf.begin(), conf.begin() + static_cast<std::ptrdiff_t>(left));
    next.insert(next.end(), conf.begin() + static_cast<std::ptrdiff_t>(right),
                conf.begin() + static_cast<std::ptrdiff_t>(end));
    next.insert(next.end(), conf.begin() + static_cast<std::ptrdiff_t>(left),
                conf.begin() + static_cast<std::ptrdiff_t>(right));
    next.insert(next.end(), conf.begin() + static_cast<std::ptrdiff_t>(end),
                conf.end());
    conf = std::move(next);
  }

  Config bottom;
  for (const Label& x : conf) {
    if (x.role == Role::fixed) {
      bottom.push_back(x);
    }
  }
  for (int j = 1; j <= n; ++j) {
    bottom.push_back({Role::moving, j});
  }
  for (const Label& x : conf) {
    if (x.role == Role::parallel) {
      bottom.push_back(x);
    }
  }
  append_inverse(word, pull(bottom, conf));
  return BraidWord(static_cast<int>(parked.size()), std::move(word));
}

MixedBraidWord cabled_loop_substitute(int m, int n,
                                      const std::vector<int>& followed, int i,
                                      int sign) {
  const std::vector<int> par = sorted_followed(followed, m);
  if (n < 1) {
    throw RangeError("substitution needs n >= 1");
  }
  if (i < 1 || i > m) {
    throw RangeError("loop index " + std::to_string(i) + " out of range");
  }
  const Config parked = parked_config(m, n, par);
  const Config cab = cabled_config(m, n, par);
  const std::vector<Generator> park = pull(parked, cab);

  const auto group = static_cast<int>(
      std::find(cab.begin(), cab.end(), Label{Role::fixed, i}) - cab.begin());
  const int width =
      std::binary_search(par.begin(), par.end(), i) ? 2 : 1;
  const auto start = static_cast<int>(
      std::find(cab.begin(), cab.end(), Label{Role::moving, 1}) - cab.begin());

  // Bring the first moving strand next to the group, loop it around the
  // group (over on the way in, under on the way back), and return.
  std::vector<Generator> approach;
  for (int q = start; q > group + width; --q) {
    approach.push_back({q, 1});
  }
  std::vector<Generator> body = approach;
  for (int q = group + width; q > group; --q) {
    body.push_back({q, 1});
  }
  for (int q = group + 1; q <= group + width; ++q) {
    body.push_back({q, 1});
  }
  append_inverse(body, approach);
  if (sign < 0) {
    std::vector<Generator> inv;
    append_inverse(inv, body);
    body = std::move(inv);
  }
  std::vector<Generator> word = park;
  word.insert(word.end(), body.begin(), body.end());
  append_inverse(word, park);
  const int strands = static_cast<int>(parked.size());
  return free_reduce(part_braid(BraidWord(strands, std::move(word)), m));
}

}  // namespace mixbraid
