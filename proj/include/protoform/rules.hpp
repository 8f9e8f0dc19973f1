#pragma once

#include <optional>
#include <string>
#include <vector>

#include "protoform/dataset.hpp"
#include "protoform/phonology.hpp"

namespace protoform::data {

// One side of a rule environment: a literal phoneme, a feature-defined class
// (V = syllabic, C = non-syllabic segment, T = tone), or a word boundary.
struct ContextPattern {
  enum class Kind { literal, cls, boundary };
  Kind kind = Kind::literal;
  std::string text;  // literal text or class letter

  bool matches(const std::vector<Phoneme>& form, long index,
               const phon::FeatureTable& table) const;
};

// "target > replacement / left _ right". Application is simultaneous over the
// input: environments are evaluated on the unmodified form.
struct SoundChangeRule {
  std::string target;
  std::vector<std::string> replacement;  // empty = deletion
  std::optional<ContextPattern> left, right;

  Form apply(const Form& form, const phon::FeatureTable& table) const;
};

// Ordered application: each rule makes a full pass before the next.
Form apply_rules(const Form& form, const std::vector<SoundChangeRule>& rules,
                 const phon::FeatureTable& table);

// One rule per line: "target > replacement / left _ right". '#' starts a
// comment; replacement "0" or "∅" deletes; contexts are optional.
std::vector<SoundChangeRule> parse_rules(const std::string& text);
std::vector<SoundChangeRule> load_rules(const std::string& path);

}  // namespace protoform::data
