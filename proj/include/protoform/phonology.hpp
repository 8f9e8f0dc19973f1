#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "protoform/util/error.hpp"

namespace protoform::phon {

// One atomic IPA unit: a segment (possibly several codepoints, e.g. "tʰ")
// or a tone written with superscript digits ("²", "²¹").
struct Phoneme {
  enum class Kind : std::uint8_t { segment, tone };

  std::string text;
  Kind kind = Kind::segment;

  bool operator==(const Phoneme& o) const { return text == o.text; }
  bool operator!=(const Phoneme& o) const { return text != o.text; }
  bool is_tone() const { return kind == Kind::tone; }

  static Phoneme make(const std::string& text);
};

std::string join(const std::vector<Phoneme>& ps);

// Dense-id ordered set of phoneme texts (insertion order = id order).
class PhonemeInventory {
 public:
  int add(const std::string& text);  // returns id; idempotent for known texts
  bool contains(const std::string& text) const { return index_.count(text) > 0; }
  std::optional<int> lookup(const std::string& text) const;
  const Phoneme& at(int id) const { return entries_[id]; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Phoneme>& entries() const { return entries_; }

 private:
  std::vector<Phoneme> entries_;
  std::unordered_map<std::string, int> index_;
  std::size_t max_len_cp_ = 0;  // longest entry in codepoints

  friend std::vector<Phoneme> tokenize(const std::string&, const PhonemeInventory&, bool);
};

struct UnknownSymbol : DataError {
  UnknownSymbol(std::size_t codepoint_index, std::size_t byte_offset, const std::string& raw)
      : DataError("no inventory entry matches \"" + raw + "\" at codepoint " +
                  std::to_string(codepoint_index)),
        codepoint_index(codepoint_index),
        byte_offset(byte_offset) {}
  std::size_t codepoint_index;
  std::size_t byte_offset;
};

// Splits raw into grapheme clusters: base codepoint plus trailing combining
// marks and modifier letters; runs of superscript digits form tone clusters.
std::vector<Phoneme> cluster_graphemes(const std::string& raw);

// Greedy longest-match segmentation against the inventory. With
// permissive_unknown, an unmatched offset consumes one grapheme cluster and
// yields it as an out-of-inventory Phoneme; otherwise UnknownSymbol is thrown.
// Concatenating the output always reproduces raw.
std::vector<Phoneme> tokenize(const std::string& raw, const PhonemeInventory& inv,
                              bool permissive_unknown = false);

// Ternary articulatory feature vector; +1 / -1 / 0 (unspecified).
struct FeatureVector {
  std::vector<std::int8_t> values;

  int size() const { return static_cast<int>(values.size()); }
  bool operator==(const FeatureVector& o) const { return values == o.values; }
};

// Count of coordinates that differ.
int hamming(const FeatureVector& a, const FeatureVector& b);

struct MissingFeatureEntry : DataError {
  explicit MissingFeatureEntry(const std::string& segment)
      : DataError("no feature entry for segment \"" + segment + "\""), segment(segment) {}
  std::string segment;
};

// Segment -> feature vector table loaded from CSV (header: segment,f1..fF).
// The first feature column is syllabicity; tones map to the all-zero vector.
class FeatureTable {
 public:
  static FeatureTable load_csv(const std::string& path);
  static FeatureTable from_rows(int n_features,
                                const std::vector<std::pair<std::string, FeatureVector>>& rows);
  // The table shipped with the repo (data/features.csv next to the sources,
  // or $PROTOFORM_DATA/features.csv when set).
  static const FeatureTable& bundled();

  int n_features() const { return n_features_; }
  bool has(const std::string& segment) const { return rows_.count(segment) > 0; }

  // Exact lookup, then fallback to the diacritic-stripped base character when
  // fallback is enabled. Throws MissingFeatureEntry when nothing resolves.
  const FeatureVector& features(const Phoneme& p) const;

  // True when p is a nucleus-capable segment (syllabicity +). Tones and
  // unresolvable segments are not nuclear.
  bool is_nuclear(const Phoneme& p) const;

  void set_fallback(bool enabled) { fallback_ = enabled; }
  bool fallback_enabled() const { return fallback_; }
  // Number of lookups that resolved through the base-character fallback.
  mutable std::size_t fallback_hits = 0;

 private:
  int n_features_ = 0;
  std::unordered_map<std::string, FeatureVector> rows_;
  FeatureVector zero_;
  bool fallback_ = true;
};

// Constituents of a monosyllable. Concatenating
// onset+nucleus+coda+tone always reproduces the input tokens.
struct SyllableParts {
  std::vector<Phoneme> onset, nucleus, coda, tone;
  bool no_nucleus = false;       // no syllabic segment found; everything in onset
  bool extra_vowel_run = false;  // a second vowel run landed in the coda

  std::vector<Phoneme> concat() const;
};

// onset = initial run of non-syllabic segments, nucleus = first run of
// syllabic segments, coda = the rest up to trailing tones.
SyllableParts segment_syllable(const std::vector<Phoneme>& tokens, const FeatureTable& table);

}  // namespace protoform::phon
