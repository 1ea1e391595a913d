#pragma once

#include <string>
#include <vector>

#include "mixbraid/manifold.hpp"
#include "mixbraid/mixed_word.hpp"

namespace mixbraid {

enum class TruthKind {
  rho,                   // index = loop i
  r,                     // index = component k, at n
  trefoil_r,             // combing of both parallels, at n
  trefoil_substitution,  // index = loop i, with sign, at n
  trefoil_band,          // empty beta1, beta2; sign; framing from the spec
};

struct TruthItem {
  TruthKind kind = TruthKind::rho;
  int index = 0;
  int n = 1;
  int sign = 1;
};

std::string label(const TruthItem& item);

/// The published closed form for `item` on a preset spec, transcribed
/// literally (inductive daisy-chain rules expanded for the concrete m).
/// Throws SpecError if the preset has no such entry.
MixedBraidWord expected(const ManifoldSpec& spec, const TruthItem& item);
std::string citation(const ManifoldSpec& spec, const TruthItem& item);

/// The computed counterpart of `item` (compute_rho, compute_r or the
/// non-pure band-move path).
MixedBraidWord computed(const ManifoldSpec& spec, const TruthItem& item);

/// Every table entry for the preset, n-indexed entries for n = 1..n_max.
std::vector<TruthItem> truth_items(const ManifoldSpec& spec, int n_max);

/// Substitution of the published trefoil band move applied letterwise to
/// an algebraic word in B_{2,n}, giving a word in B_{2,n+2}.
MixedBraidWord trefoil_substitute(const MixedBraidWord& beta);

/// The published trefoil band move beta1' s_{n+1}^-1 t_{2,n}^p s_n^sign
/// s_{n+1} beta2' r.
MixedBraidWord trefoil_band(const MixedBraidWord& beta1,
                            const MixedBraidWord& beta2, int sign, long long p);

struct VerifyEntry {
  std::string item;
  std::string citation;
  bool pass = false;
  std::string computed;
  std::string expected;
  std::string computed_nf;  // filled on failure
  std::string expected_nf;
};

struct VerifyReport {
  std::string preset;
  std::vector<VerifyEntry> entries;
  std::vector<std::string> notes;

  bool all_pass() const noexcept;
};

VerifyReport verify_preset(const std::string& name, int n_max = 3);

}  // namespace mixbraid
