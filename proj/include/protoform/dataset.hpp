#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "protoform/phonology.hpp"
#include "protoform/util/rng.hpp"

namespace protoform::data {

using phon::Phoneme;
using Form = std::vector<Phoneme>;

// One etymon: optional proto-form plus per-language daughter reflexes.
// daughters and augmented are indexed by Dataset::languages.
struct CognateSet {
  std::string gloss_id;
  std::optional<Form> proto;
  std::vector<std::optional<Form>> daughters;
  std::vector<std::uint8_t> augmented;  // 1 = cell was filled by a model

  int present_daughters() const {
    int n = 0;
    for (const auto& d : daughters)
      if (d) ++n;
    return n;
  }
};

struct Dataset {
  std::vector<std::string> languages;
  std::string proto_name = "Proto";
  std::vector<CognateSet> sets;
  phon::PhonemeInventory inventory;

  int language_index(const std::string& name) const;
  std::size_t size() const { return sets.size(); }
  // Rebuilds the inventory from every token in sets (insertion order).
  void rebuild_inventory();
};

// TSV interchange: header "GlossID\t<proto>\t<Lang1>...", empty cell = missing
// entry, UTF-8, LF. proto_column selects the proto column by header name.
// flag_column (optional) holds comma-joined language names of augmented cells.
Dataset load_tsv(const std::string& path, const std::string& proto_column,
                 const std::string& flag_column = "");
void write_tsv(const Dataset& ds, const std::string& path,
               const std::string& flag_column = "");

struct SplitSpec {
  std::uint64_t seed = 0;
  double train = 0.8, dev = 0.1, test = 0.1;

  void validate() const;
};

struct Splits {
  Dataset train, dev, test;
};

// Deterministic per-cognate-set partition; sizes within +-1 of the fractions.
Splits split(const Dataset& ds, const SplitSpec& spec);

// Answer key entry for masked-reflex evaluation.
struct MaskedEntry {
  std::size_t set_index;
  int language;
  Form form;
};

struct MaskResult {
  Dataset masked;
  std::vector<MaskedEntry> key;
  std::size_t skipped = 0;  // sets with fewer than 2 present daughters
};

// Hides one uniformly chosen present daughter per eligible set.
MaskResult mask_random_daughter(const Dataset& ds, std::uint64_t seed);

// Restores masked entries; inverse of mask_random_daughter.
Dataset unmask(const Dataset& masked, const std::vector<MaskedEntry>& key);

}  // namespace protoform::data
