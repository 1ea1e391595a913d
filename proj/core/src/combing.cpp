#include "mixbraid/combing.hpp"

#include <utility>
#include <vector>

#include "mixbraid/errors.hpp"

namespace mixbraid {
namespace {

// Sigma_k^e a_i^f = R Sigma_k^e; appends R.
void rewrite_loop(int k, int e, const MixedLetter& loop,
                  std::vector<MixedLetter>& out) {
  const int i = loop.index;
  const int f = loop.sign;
  using L = MixedLetter;
  if (e > 0) {
    if (i == k) {
      out.push_back(L::loop(k + 1, f));
    } else if (i == k + 1) {
      out.push_back(L::loop(k + 1, -1));
      out.push_back(L::loop(k, f));
      out.push_back(L::loop(k + 1, 1));
    } else {
      out.push_back(loop);
    }
  } else {
    if (i == k) {
      out.push_back(L::loop(k, 1));
      out.push_back(L::loop(k + 1, f));
      out.push_back(L::loop(k, -1));
    } else if (i == k + 1) {
      out.push_back(L::loop(k, f));
    } else {
      out.push_back(loop);
    }
  }
}

void push_reduced(std::vector<MixedLetter>& out, const MixedLetter& x) {
  if (!out.empty() && out.back() == x.inverse()) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

}  // namespace

CombedPair comb(const MixedBraidWord& w, std::size_t cap) {
  const auto& letters = w.letters();
  // Reversed algebraic suffix, so prepending is push_back.
  std::vector<MixedLetter> suffix;
  std::vector<Generator> coset;
  std::vector<MixedLetter> next;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const MixedLetter& x = *it;
    if (x.kind != LetterKind::fixed_crossing) {
      push_reduced(suffix, x);
      continue;
    }
    coset.push_back({x.index, x.sign});
    next.clear();
    for (auto s = suffix.rbegin(); s != suffix.rend(); ++s) {
      if (s->kind == LetterKind::loop) {
        std::vector<MixedLetter> piece;
        rewrite_loop(x.index, x.sign, *s, piece);
        for (const MixedLetter& y : piece) {
          push_reduced(next, y);
        }
      } else {
        push_reduced(next, *s);
      }
      check_word_length(next.size(), cap);
    }
    suffix.assign(next.rbegin(), next.rend());
  }
  std::vector<MixedLetter> algebraic(suffix.rbegin(), suffix.rend());
  std::vector<Generator> coset_word(coset.rbegin(), coset.rend());
  return {MixedBraidWord(w.m(), w.n(), std::move(algebraic)),
          BraidWord(w.m(), std::move(coset_word))};
}

MixedBraidWord compute_rho(const ManifoldSpec& spec, int i, int n) {
  if (i < 1 || i > spec.m) {
    throw RangeError("loop index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(spec.m));
  }
  MixedBraidWord w = fixed_as_mixed(spec.fixed_word, n);
  w = multiply(w, MixedBraidWord(spec.m, n, {MixedLetter::loop(i)}));
  return comb(w).algebraic;
}

MixedBraidWord part_braid(const BraidWord& w, int m) {
  const int total = w.strands();
  const int n = total - m;
  if (m < 1 || n < 1) {
    throw RangeError("parting needs m >= 1 fixed and at least one moving strand");
  }
  std::vector<bool> fixed(static_cast<std::size_t>(total), false);
  for (int p = 0; p < m; ++p) {
    fixed[static_cast<std::size_t>(p)] = true;
  }
  auto fixed_index = [&](int pos) {
    int c = 0;
    for (int p = 0; p <= pos; ++p) {
      c += fixed[static_cast<std::size_t>(p)] ? 1 : 0;
    }
    return c;
  };
  auto moving_index = [&](int pos) { return pos + 1 - fixed_index(pos); };
  std::vector<MixedLetter> out;
  // A moving strand at moving slot j passing under fixed strand f is
  // sigma_{j-1}^-1 ... sigma_1^-1 a_f^s sigma_1 ... sigma_{j-1}.
  auto emit_loop = [&](int f, int j, int s) {
    for (int t = j - 1; t >= 1; --t) {
      out.push_back(MixedLetter::moving(t, -1));
    }
    out.push_back(MixedLetter::loop(f, s));
    for (int t = 1; t <= j - 1; ++t) {
      out.push_back(MixedLetter::moving(t, 1));
    }
  };
  for (const Generator& g : w.letters()) {
    const int i = g.index - 1;
    const bool left = fixed[static_cast<std::size_t>(i)];
    const bool right = fixed[static_cast<std::size_t>(i) + 1];
    if (left && right) {
      out.push_back(MixedLetter::fixed(fixed_index(i), g.sign));
    } else if (!left && !right) {
      out.push_back(MixedLetter::moving(moving_index(i), g.sign));
    } else if (left && g.sign < 0) {
      emit_loop(fixed_index(i), moving_index(i + 1), -1);
    } else if (!left && g.sign > 0) {
      emit_loop(fixed_index(i + 1), moving_index(i), 1);
    }
    std::swap(fixed[static_cast<std::size_t>(i)],
              fixed[static_cast<std::size_t>(i) + 1]);
  }
  for (int p = 0; p < m; ++p) {
    if (!fixed[static_cast<std::size_t>(p)]) {
      throw RangeError("braid is not parted: fixed strands do not end in the "
                       "first positions");
    }
  }
  return MixedBraidWord(m, n, std::move(out));
}

}  // namespace mixbraid
