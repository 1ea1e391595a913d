#include "mixbraid/mixed_word.hpp"

#include <utility>

#include "mixbraid/garside.hpp"

namespace mixbraid {
namespace {

int upper_bound_of(LetterKind kind, int m, int n) {
  switch (kind) {
    case LetterKind::fixed_crossing:
      return m - 1;
    case LetterKind::loop:
      return m;
    case LetterKind::moving_crossing:
      return n - 1;
  }
  return 0;
}

void require_same_shape(const MixedBraidWord& u, const MixedBraidWord& v) {
  if (u.m() != v.m() || u.n() != v.n()) {
    throw RangeError("mixed words have different strand counts (" +
                     std::to_string(u.m()) + "," + std::to_string(u.n()) +
                     ") vs (" + std::to_string(v.m()) + "," +
                     std::to_string(v.n()) + ")");
  }
}

}  // namespace

MixedBraidWord::MixedBraidWord(int m, int n) : MixedBraidWord(m, n, {}) {}

MixedBraidWord::MixedBraidWord(int m, int n, std::vector<MixedLetter> letters)
    : m_(m), n_(n), letters_(std::move(letters)) {
  if (m < 1 || n < 1) {
    throw RangeError("mixed braid needs m >= 1 and n >= 1");
  }
  for (std::size_t p = 0; p < letters_.size(); ++p) {
    const MixedLetter& x = letters_[p];
    if (x.index < 1 || x.index > upper_bound_of(x.kind, m_, n_) ||
        (x.sign != 1 && x.sign != -1)) {
      throw RangeError("letter at position " + std::to_string(p) +
                       " out of range for (m, n) = (" + std::to_string(m_) +
                       ", " + std::to_string(n_) + ")");
    }
  }
}

bool MixedBraidWord::is_algebraic() const noexcept {
  for (const MixedLetter& x : letters_) {
    if (x.kind == LetterKind::fixed_crossing) {
      return false;
    }
  }
  return true;
}

MixedBraidWord free_reduce(const MixedBraidWord& w) {
  std::vector<MixedLetter> out;
  out.reserve(w.size());
  for (const MixedLetter& x : w.letters()) {
    if (!out.empty() && out.back() == x.inverse()) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return MixedBraidWord(w.m(), w.n(), std::move(out));
}

MixedBraidWord invert(const MixedBraidWord& w) {
  std::vector<MixedLetter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return MixedBraidWord(w.m(), w.n(), std::move(out));
}

MixedBraidWord multiply(const MixedBraidWord& u, const MixedBraidWord& v) {
  require_same_shape(u, v);
  std::vector<MixedLetter> out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return MixedBraidWord(u.m(), u.n(), std::move(out));
}

MixedBraidWord multiply(std::initializer_list<MixedBraidWord> words) {
  if (words.size() == 0) {
    throw RangeError("multiply needs at least one word");
  }
  const MixedBraidWord& first = *words.begin();
  std::vector<MixedLetter> out;
  for (const MixedBraidWord& w : words) {
    require_same_shape(first, w);
    out.insert(out.end(), w.letters().begin(), w.letters().end());
  }
  return MixedBraidWord(first.m(), first.n(), std::move(out));
}

MixedBraidWord power(const MixedBraidWord& w, long long p) {
  const MixedBraidWord base = p < 0 ? invert(w) : w;
  const long long count = p < 0 ? -p : p;
  std::vector<MixedLetter> out;
  out.reserve(base.size() * static_cast<std::size_t>(count));
  for (long long t = 0; t < count; ++t) {
    out.insert(out.end(), base.letters().begin(), base.letters().end());
  }
  return MixedBraidWord(w.m(), w.n(), std::move(out));
}

MixedBraidWord widen(const MixedBraidWord& w, int n_new) {
  if (n_new < w.n()) {
    throw RangeError("cannot narrow a mixed word");
  }
  return MixedBraidWord(w.m(), n_new, w.letters());
}

MixedBraidWord widen_fixed(const MixedBraidWord& w, int m_new) {
  if (m_new < w.m()) {
    throw RangeError("cannot drop fixed strands");
  }
  return MixedBraidWord(m_new, w.n(), w.letters());
}

BraidWord embed(const MixedBraidWord& w) {
  const int m = w.m();
  std::vector<Generator> out;
  out.reserve(w.size() * 2);
  for (const MixedLetter& x : w.letters()) {
    switch (x.kind) {
      case LetterKind::fixed_crossing:
        out.push_back({x.index, x.sign});
        break;
      case LetterKind::moving_crossing:
        out.push_back({m + x.index, x.sign});
        break;
      case LetterKind::loop:
        for (int c = m; c > x.index; --c) {
          out.push_back({c, 1});
        }
        out.push_back({x.index, x.sign});
        out.push_back({x.index, x.sign});
        for (int c = x.index + 1; c <= m; ++c) {
          out.push_back({c, -1});
        }
        break;
    }
  }
  return BraidWord(m + w.n(), std::move(out));
}

BraidWord embed_fixed(const BraidWord& fixed, int n) {
  return BraidWord(fixed.strands() + n, fixed.letters());
}

MixedBraidWord fixed_as_mixed(const BraidWord& fixed, int n) {
  std::vector<MixedLetter> out;
  out.reserve(fixed.size());
  for (const Generator& g : fixed.letters()) {
    out.push_back(MixedLetter::fixed(g.index, g.sign));
  }
  return MixedBraidWord(fixed.strands(), n, std::move(out));
}

WindingVector winding_vector(const MixedBraidWord& w) {
  WindingVector v(static_cast<std::size_t>(w.m()), 0);
  for (const MixedLetter& x : w.letters()) {
    if (x.kind == LetterKind::loop) {
      v[static_cast<std::size_t>(x.index - 1)] += x.sign;
    }
  }
  return v;
}

bool mixed_equal(const MixedBraidWord& u, const MixedBraidWord& v) {
  require_same_shape(u, v);
  return equal(embed(u), embed(v));
}

bool PresentationReport::all_hold() const noexcept {
  for (const PresentationInstance& inst : instances) {
    if (!inst.holds) {
      return false;
    }
  }
  return true;
}

PresentationReport check_presentation(int m, int n) {
  if (m < 1 || n < 1) {
    throw RangeError("presentation check needs m >= 1 and n >= 1");
  }
  PresentationReport report;
  report.m = m;
  report.n = n;
  using L = MixedLetter;
  auto name = [](const L& x) {
    const char base = x.kind == LetterKind::loop ? 'a'
                      : x.kind == LetterKind::fixed_crossing ? 'S'
                                                             : 's';
    return std::string(1, base) + std::to_string(x.index) +
           (x.sign < 0 ? "^-1" : "");
  };
  auto add = [&](const char* family, std::vector<L> lhs, std::vector<L> rhs) {
    PresentationInstance inst;
    inst.family = family;
    for (const L& x : lhs) {
      inst.lhs += (inst.lhs.empty() ? "" : " ") + name(x);
    }
    for (const L& x : rhs) {
      inst.rhs += (inst.rhs.empty() ? "" : " ") + name(x);
    }
    inst.holds = mixed_equal(MixedBraidWord(m, n, std::move(lhs)),
                             MixedBraidWord(m, n, std::move(rhs)));
    report.instances.push_back(std::move(inst));
  };

  for (int k = 1; k < n; ++k) {
    for (int j = k + 2; j < n; ++j) {
      add("far commutation", {L::moving(k), L::moving(j)},
          {L::moving(j), L::moving(k)});
    }
  }
  for (int k = 1; k + 1 < n; ++k) {
    add("braid relation", {L::moving(k), L::moving(k + 1), L::moving(k)},
        {L::moving(k + 1), L::moving(k), L::moving(k + 1)});
  }
  for (int i = 1; i <= m; ++i) {
    for (int k = 2; k < n; ++k) {
      add("loop commutes with far crossing", {L::loop(i), L::moving(k)},
          {L::moving(k), L::loop(i)});
    }
  }
  if (n >= 2) {
    for (int i = 1; i <= m; ++i) {
      add("loop braid relation",
          {L::loop(i), L::moving(1), L::loop(i), L::moving(1)},
          {L::moving(1), L::loop(i), L::moving(1), L::loop(i)});
    }
    for (int i = 1; i <= m; ++i) {
      for (int r = 1; r < i; ++r) {
        add("loop commutation",
            {L::loop(i), L::moving(1), L::loop(r), L::moving(1, -1)},
            {L::moving(1), L::loop(r), L::moving(1, -1), L::loop(i)});
      }
    }
  }
  return report;
}

}  // namespace mixbraid
