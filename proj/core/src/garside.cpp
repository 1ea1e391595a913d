#include "mixbraid/garside.hpp"

#include <deque>
#include <string>
#include <utility>

namespace mixbraid {
namespace {

// Permutation braid kept with its inverse so that both starting-set and
// finishing-set queries are O(1).
struct Simple {
  std::vector<int> img;  // top position -> bottom position
  std::vector<int> inv;  // bottom position -> top position

  static Simple identity(int n) {
    Simple s;
    s.img.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      s.img[static_cast<std::size_t>(i)] = i;
    }
    s.inv = s.img;
    return s;
  }

  static Simple delta(int n) {
    Simple s;
    s.img.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      s.img[static_cast<std::size_t>(i)] = n - 1 - i;
    }
    s.inv = s.img;
    return s;
  }

  int size() const { return static_cast<int>(img.size()); }

  // sigma_i (0-based i) is a prefix: the strands starting at i, i+1 cross.
  bool starts_with(int i) const { return img[i] > img[i + 1]; }
  // sigma_i is a suffix: the strands ending at i, i+1 crossed.
  bool ends_with(int i) const { return inv[i] > inv[i + 1]; }

  // this <- this * sigma_i; requires !ends_with(i).
  void append(int i) {
    std::swap(inv[i], inv[i + 1]);
    img[inv[i]] = i;
    img[inv[i + 1]] = i + 1;
  }

  // this <- sigma_i^-1 * this; requires starts_with(i).
  void drop_front(int i) {
    std::swap(img[i], img[i + 1]);
    inv[img[i]] = i;
    inv[img[i + 1]] = i + 1;
  }

  // Conjugation by the half twist: sigma_i -> sigma_{n-2-i}.
  void flip() {
    const int n = size();
    std::vector<int> out(img.size());
    for (int x = 0; x < n; ++x) {
      out[x] = n - 1 - img[n - 1 - x];
    }
    img = std::move(out);
    for (int x = 0; x < n; ++x) {
      inv[img[x]] = x;
    }
  }

  bool is_identity() const {
    for (int i = 0; i + 1 < size(); ++i) {
      if (img[i] > img[i + 1]) {
        return false;
      }
    }
    return true;
  }

  bool is_delta() const {
    for (int i = 0; i + 1 < size(); ++i) {
      if (img[i] < img[i + 1]) {
        return false;
      }
    }
    return true;
  }
};

// Moves prefix letters of `right` into `left` until the pair is
// left-weighted. Returns whether anything moved.
bool left_weight(Simple& left, Simple& right) {
  const int n = left.size();
  bool changed = false;
  for (;;) {
    int pick = -1;
    for (int i = 0; i + 1 < n; ++i) {
      if (right.starts_with(i) && !left.ends_with(i)) {
        pick = i;
        break;
      }
    }
    if (pick < 0) {
      return changed;
    }
    left.append(pick);
    right.drop_front(pick);
    changed = true;
  }
}

class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(int n) : n_(n) {}

  void set_infimum(int p) { infimum_ = p; }

  void push(Simple s) {
    if (s.is_identity()) {
      return;
    }
    factors_.push_back(std::move(s));
    for (std::size_t j = factors_.size() - 1; j > 0; --j) {
      if (!left_weight(factors_[j - 1], factors_[j])) {
        break;
      }
    }
    while (!factors_.empty() && factors_.front().is_delta()) {
      factors_.pop_front();
      ++infimum_;
    }
    while (!factors_.empty() && factors_.back().is_identity()) {
      factors_.pop_back();
    }
  }

  NormalForm finish() && {
    NormalForm nf;
    nf.strands = n_;
    nf.infimum = infimum_;
    nf.factors.reserve(factors_.size());
    for (Simple& s : factors_) {
      nf.factors.emplace_back(std::move(s.img));
    }
    return nf;
  }

 private:
  int n_;
  int infimum_ = 0;
  std::deque<Simple> factors_;
};

}  // namespace

Permutation half_twist(int n) {
  return Permutation(Simple::delta(n).img);
}

BraidWord permutation_braid(const Permutation& p) {
  std::vector<int> img = p.images();
  std::vector<Generator> letters;
  for (;;) {
    int pick = -1;
    for (std::size_t i = 0; i + 1 < img.size(); ++i) {
      if (img[i] > img[i + 1]) {
        pick = static_cast<int>(i);
        break;
      }
    }
    if (pick < 0) {
      break;
    }
    letters.push_back({pick + 1, 1});
    std::swap(img[static_cast<std::size_t>(pick)],
              img[static_cast<std::size_t>(pick) + 1]);
  }
  return BraidWord(p.size(), std::move(letters));
}

NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  NormalFormBuilder builder(n);
  if (n == 1) {
    return std::move(builder).finish();
  }

  // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1). Every Delta^-1 is moved to the
  // front, flipping each simple it passes.
  int negatives_after = 0;
  for (const Generator& g : w.letters()) {
    negatives_after += g.sign < 0 ? 1 : 0;
  }
  builder.set_infimum(-negatives_after);

  for (const Generator& g : w.letters()) {
    const int i = g.index - 1;
    Simple s;
    if (g.sign > 0) {
      s = Simple::identity(n);
      s.append(i);
    } else {
      --negatives_after;
      s = Simple::delta(n);
      // Delta sigma_i^-1: remove the final crossing between bottom positions
      // i and i+1.
      std::swap(s.inv[i], s.inv[i + 1]);
      s.img[s.inv[i]] = i;
      s.img[s.inv[i + 1]] = i + 1;
    }
    if (negatives_after % 2 != 0) {
      s.flip();
    }
    builder.push(std::move(s));
  }
  return std::move(builder).finish();
}

BraidWord to_word(const NormalForm& nf) {
  std::vector<Generator> letters;
  const BraidWord delta = permutation_braid(half_twist(nf.strands));
  const BraidWord delta_inv = invert(delta);
  const BraidWord& d = nf.infimum >= 0 ? delta : delta_inv;
  for (int k = 0; k < (nf.infimum >= 0 ? nf.infimum : -nf.infimum); ++k) {
    letters.insert(letters.end(), d.letters().begin(), d.letters().end());
  }
  for (const Permutation& f : nf.factors) {
    const BraidWord lift = permutation_braid(f);
    letters.insert(letters.end(), lift.letters().begin(), lift.letters().end());
  }
  return BraidWord(nf.strands, std::move(letters));
}

bool equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw RangeError("strand count mismatch: " + std::to_string(u.strands()) +
                     " vs " + std::to_string(v.strands()));
  }
  return normal_form(u) == normal_form(v);
}

}  // namespace mixbraid
