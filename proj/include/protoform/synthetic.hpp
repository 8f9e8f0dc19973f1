#pragma once

#include <string>
#include <vector>

#include "protoform/dataset.hpp"
#include "protoform/rules.hpp"

namespace protoform::data {

// Alphabets for sampling monosyllabic proto-forms. Empty strings in onsets /
// codas mean "no onset" / "no coda"; every other entry is one phoneme.
struct ProtoShape {
  std::vector<std::string> onsets;
  std::vector<std::string> nuclei;
  std::vector<std::string> codas;
  std::vector<std::string> tones;

  std::size_t capacity() const {
    return onsets.size() * nuclei.size() * codas.size() * tones.size();
  }
  static ProtoShape default_shape();
};

struct LanguageRules {
  std::string language;
  std::vector<SoundChangeRule> rules;
};

// Draws n_sets proto-forms from the shape (without replacement while
// possible) and derives each daughter by ordered rule application, so every
// daughter is an exact deterministic function of its proto-form. missing_rate
// deletes daughter cells at random but always leaves at least one per set.
Dataset generate_synthetic(const std::vector<LanguageRules>& family, std::size_t n_sets,
                           const ProtoShape& shape, std::uint64_t seed,
                           double missing_rate = 0.0);

// A ready-made four-daughter family where each daughter merges at least one
// proto contrast but the family jointly preserves all of them.
std::vector<LanguageRules> default_family();
ProtoShape default_family_shape();

}  // namespace protoform::data
