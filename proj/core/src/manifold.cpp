#include "mixbraid/manifold.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mixbraid/errors.hpp"
#include "mixbraid/word_text.hpp"

namespace mixbraid {
namespace {

std::vector<std::vector<int>> orbits(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
  for (int s = 0; s < p.size(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) {
      continue;
    }
    std::vector<int> orbit;
    for (int t = s; !seen[static_cast<std::size_t>(t)]; t = p.image(t)) {
      seen[static_cast<std::size_t>(t)] = true;
      orbit.push_back(t + 1);
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

void canonicalize(std::vector<std::vector<int>>& components) {
  for (auto& c : components) {
    std::sort(c.begin(), c.end());
  }
  std::sort(components.begin(), components.end());
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw SpecError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

bool ManifoldSpec::is_pure() const noexcept {
  return std::all_of(components.begin(), components.end(),
                     [](const std::vector<int>& c) { return c.size() == 1; });
}

const std::vector<int>& ManifoldSpec::component(int k) const {
  if (k < 1 || k > component_count()) {
    throw RangeError("component " + std::to_string(k) + " out of range 1.." +
                     std::to_string(component_count()));
  }
  return components[static_cast<std::size_t>(k - 1)];
}

int ManifoldSpec::component_of(int strand) const {
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (std::find(components[c].begin(), components[c].end(), strand) !=
        components[c].end()) {
      return static_cast<int>(c) + 1;
    }
  }
  throw RangeError("strand " + std::to_string(strand) + " out of range");
}

long long ManifoldSpec::framing(int k) const {
  if (kind != ManifoldKind::surgery) {
    throw MoveError("spec '" + name + "' has no framings (complement spec)");
  }
  component(k);
  return framings[static_cast<std::size_t>(k - 1)];
}

void validate(const ManifoldSpec& spec) {
  if (spec.m < 1 || spec.fixed_word.strands() != spec.m) {
    throw SpecError("fixed word must live on m >= 1 strands");
  }
  std::vector<std::vector<int>> expected = orbits(permutation_of(spec.fixed_word));
  std::vector<std::vector<int>> given = spec.components;
  canonicalize(given);
  if (given != expected) {
    throw SpecError("components do not match the orbits of the fixed braid");
  }
  if (spec.kind == ManifoldKind::surgery) {
    if (spec.framings.size() != spec.components.size()) {
      throw SpecError("surgery spec needs one framing per component");
    }
  } else if (!spec.framings.empty()) {
    throw SpecError("complement spec must not carry framings");
  }
}

ManifoldSpec make_spec(std::string name, const BraidWord& fixed_word,
                       std::vector<long long> framings, ManifoldKind kind) {
  ManifoldSpec spec;
  spec.name = std::move(name);
  spec.m = fixed_word.strands();
  spec.fixed_word = fixed_word;
  spec.components = orbits(permutation_of(fixed_word));
  spec.framings = std::move(framings);
  spec.kind = kind;
  validate(spec);
  return spec;
}

BraidWord daisy_chain_word(int m) {
  if (m < 2) {
    throw SpecError("daisy chain needs m >= 2");
  }
  std::vector<Generator> letters;
  for (int start : {1, 2}) {
    for (int k = start; k < m; k += 2) {
      letters.push_back({k, 1});
      letters.push_back({k, 1});
    }
  }
  return BraidWord(m, std::move(letters));
}

ManifoldSpec preset(std::string_view name) {
  std::string_view full = name;
  if (full.substr(0, 7) == "preset:") {
    full.remove_prefix(7);
  }
  std::string_view base = full;
  std::vector<long long> framings;
  bool surgery = false;
  if (const auto slash = full.find('/'); slash != std::string_view::npos) {
    base = full.substr(0, slash);
    surgery = true;
    std::string_view rest = full.substr(slash + 1);
    while (true) {
      const auto comma = rest.find(',');
      framings.push_back(parse_int(rest.substr(0, comma), "framing"));
      if (comma == std::string_view::npos) {
        break;
      }
      rest.remove_prefix(comma + 1);
    }
  }
  std::string_view family = base;
  int param = 0;
  bool has_param = false;
  if (const auto colon = base.find(':'); colon != std::string_view::npos) {
    family = base.substr(0, colon);
    param = parse_int(base.substr(colon + 1), "preset parameter");
    has_param = true;
  }
  auto no_param = [&]() {
    if (has_param) {
      throw SpecError("preset '" + std::string(family) + "' takes no parameter");
    }
  };
  BraidWord word(1);
  if (family == "unknot") {
    no_param();
  } else if (family == "identity") {
    if (!has_param || param < 1) {
      throw SpecError("identity preset needs a strand count, e.g. identity:3");
    }
    word = BraidWord(param);
  } else if (family == "hopf") {
    no_param();
    word = parse_fixed_word("S1^2", 2);
  } else if (family == "dc") {
    if (!has_param || param < 2) {
      throw SpecError("dc preset needs m >= 2, e.g. dc:4");
    }
    word = daisy_chain_word(param);
  } else if (family == "borromean") {
    no_param();
    word = parse_fixed_word("S1^-1 S2 S1^-1 S2 S1^-1 S2", 3);
  } else if (family == "trefoil") {
    no_param();
    word = parse_fixed_word("S1^3", 2);
  } else {
    throw SpecError("unknown preset '" + std::string(name) + "'");
  }
  ManifoldSpec spec = make_spec(std::string(base), word, {},
                                ManifoldKind::complement);
  if (surgery) {
    if (framings.size() != spec.components.size()) {
      throw SpecError("preset '" + std::string(base) + "' needs " +
                      std::to_string(spec.components.size()) + " framing(s)");
    }
    spec.framings = std::move(framings);
    spec.kind = ManifoldKind::surgery;
    spec.name = std::string(full);
  }
  return spec;
}

ManifoldSpec spec_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const int m = j.at("m").get<int>();
    if (m < 1) {
      throw SpecError("m must be >= 1");
    }
    BraidWord word = parse_fixed_word(j.value("fixed_word", std::string()), m);
    ManifoldSpec spec;
    spec.name = j.value("name", std::string("custom"));
    spec.m = m;
    spec.fixed_word = word;
    if (j.contains("components")) {
      spec.components = j.at("components").get<std::vector<std::vector<int>>>();
      canonicalize(spec.components);
    } else {
      spec.components = orbits(permutation_of(word));
    }
    if (j.contains("framings")) {
      spec.framings = j.at("framings").get<std::vector<long long>>();
    }
    const std::string kind =
        j.value("kind", spec.framings.empty() ? "complement" : "surgery");
    if (kind == "complement") {
      spec.kind = ManifoldKind::complement;
    } else if (kind == "surgery") {
      spec.kind = ManifoldKind::surgery;
    } else {
      throw SpecError("kind must be \"complement\" or \"surgery\"");
    }
    validate(spec);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed spec: ") + e.what());
  } catch (const ParseError& e) {
    throw SpecError(std::string("bad fixed_word: ") + e.what());
  }
}

std::string spec_to_json(const ManifoldSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["m"] = spec.m;
  j["fixed_word"] = format_fixed_word(spec.fixed_word);
  j["components"] = spec.components;
  if (spec.kind == ManifoldKind::surgery) {
    j["framings"] = spec.framings;
  }
  j["kind"] = spec.kind == ManifoldKind::surgery ? "surgery" : "complement";
  return j.dump(2);
}

ManifoldSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SpecError("cannot open spec file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return spec_from_json(buf.str());
}

ManifoldSpec resolve_spec(std::string_view name_or_path) {
  if (name_or_path.substr(0, 7) == "preset:") {
    return preset(name_or_path);
  }
  std::ifstream probe{std::string(name_or_path)};
  if (probe) {
    return load_spec(std::string(name_or_path));
  }
  return preset(name_or_path);
}

Permutation strand_permutation(const ManifoldSpec& spec) {
  return permutation_of(spec.fixed_word);
}

long long linking_number(const ManifoldSpec& spec, int j, int k) {
  if (j == k) {
    throw RangeError("linking number needs two distinct components");
  }
  spec.component(j);
  spec.component(k);
  std::vector<int> at(static_cast<std::size_t>(spec.m));
  for (int p = 0; p < spec.m; ++p) {
    at[static_cast<std::size_t>(p)] = spec.component_of(p + 1);
  }
  long long signed_count = 0;
  for (const Generator& g : spec.fixed_word.letters()) {
    const auto left = static_cast<std::size_t>(g.index - 1);
    const int a = at[left];
    const int b = at[left + 1];
    if ((a == j && b == k) || (a == k && b == j)) {
      signed_count += g.sign;
    }
    std::swap(at[left], at[left + 1]);
  }
  return signed_count / 2;
}

}  // namespace mixbraid
