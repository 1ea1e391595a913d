#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mixbraid/braid_word.hpp"

namespace mixbraid {

enum class ManifoldKind { complement, surgery };

/// A fixed (surgery) braid on m strands together with the closure
/// components it produces and, for surgery, one framing per component.
///
/// Components are kept canonical: each is sorted, and components are
/// ordered by their smallest strand. Component k (1-based) refers to that
/// order.
struct ManifoldSpec {
  std::string name;
  int m = 1;
  BraidWord fixed_word{1};
  std::vector<std::vector<int>> components;
  std::vector<long long> framings;
  ManifoldKind kind = ManifoldKind::complement;

  bool is_pure() const noexcept;
  int component_count() const noexcept {
    return static_cast<int>(components.size());
  }
  const std::vector<int>& component(int k) const;
  /// Component containing fixed strand i.
  int component_of(int strand) const;
  /// Framing of component k (surgery only).
  long long framing(int k) const;
};

/// Throws SpecError unless components are the orbits of the fixed word's
/// permutation and framings are present exactly for surgery specs.
void validate(const ManifoldSpec& spec);

/// Builds a spec from a fixed word, deriving components from the permutation.
ManifoldSpec make_spec(std::string name, const BraidWord& fixed_word,
                       std::vector<long long> framings = {},
                       ManifoldKind kind = ManifoldKind::complement);

/// Named presets: "unknot", "identity:M", "hopf", "dc:M", "borromean",
/// "trefoil". An optional "preset:" prefix is accepted, and a suffix
/// "/p1,p2,..." supplies framings and makes the spec a surgery spec.
ManifoldSpec preset(std::string_view name);

/// Fixed word of the daisy chain on m >= 2 strands.
BraidWord daisy_chain_word(int m);

/// JSON with fields m, fixed_word, components (optional), framings
/// (optional) and kind.
ManifoldSpec spec_from_json(std::string_view text);
std::string spec_to_json(const ManifoldSpec& spec);
ManifoldSpec load_spec(const std::string& path);

/// A preset name ("hopf", "preset:dc:4", ...) or a path to a JSON file.
ManifoldSpec resolve_spec(std::string_view name_or_path);

Permutation strand_permutation(const ManifoldSpec& spec);

/// Linking number of the closures of components j and k (j != k): half the
/// signed number of crossings between their strands in the fixed word.
long long linking_number(const ManifoldSpec& spec, int j, int k);

}  // namespace mixbraid
