#include "protoform/synthetic.hpp"

#include <algorithm>
#include <cstdio>

namespace protoform::data {

ProtoShape ProtoShape::default_shape() {
  ProtoShape s;
  s.onsets = {"p", "t", "k", "b", "d", "g"};
  s.nuclei = {"a", "e", "i", "o"};
  s.codas = {"", "n", "k"};
  s.tones = {"¹", "²"};
  return s;
}

Dataset generate_synthetic(const std::vector<LanguageRules>& family, std::size_t n_sets,
                           const ProtoShape& shape, std::uint64_t seed,
                           double missing_rate) {
  if (family.empty()) throw DataError("generate_synthetic: no languages");
  if (shape.onsets.empty() || shape.nuclei.empty() || shape.codas.empty() ||
      shape.tones.empty())
    throw DataError("generate_synthetic: empty alphabet in proto shape");
  const phon::FeatureTable& table = phon::FeatureTable::bundled();

  // Enumerate all possible proto-forms, then draw without replacement while
  // they last (wrapping around beyond capacity).
  std::vector<Form> protos;
  protos.reserve(shape.capacity());
  for (const auto& o : shape.onsets)
    for (const auto& nu : shape.nuclei)
      for (const auto& c : shape.codas)
        for (const auto& t : shape.tones) {
          Form f;
          if (!o.empty()) f.push_back(Phoneme::make(o));
          f.push_back(Phoneme::make(nu));
          if (!c.empty()) f.push_back(Phoneme::make(c));
          if (!t.empty()) f.push_back(Phoneme::make(t));
          protos.push_back(std::move(f));
        }
  Rng rng(seed);
  rng.shuffle(protos);

  Dataset ds;
  ds.proto_name = "Proto";
  for (const auto& lr : family) ds.languages.push_back(lr.language);
  for (std::size_t i = 0; i < n_sets; ++i) {
    const Form& proto = protos[i % protos.size()];
    CognateSet cs;
    char buf[16];
    std::snprintf(buf, sizeof(buf), "s%04zu", i);
    cs.gloss_id = buf;
    cs.proto = proto;
    cs.augmented.assign(family.size(), 0);
    for (const auto& lr : family)
      cs.daughters.push_back(apply_rules(proto, lr.rules, table));
    ds.sets.push_back(std::move(cs));
  }

  if (missing_rate > 0.0) {
    for (auto& cs : ds.sets) {
      for (std::size_t l = 0; l < cs.daughters.size(); ++l) {
        if (cs.present_daughters() <= 1) break;
        if (cs.daughters[l] && rng.bernoulli(missing_rate)) cs.daughters[l] = std::nullopt;
      }
    }
  }
  ds.rebuild_inventory();
  return ds;
}

namespace {

// Each daughter moves every proto nucleus into a private vowel set (so no
// daughter agrees with another on nuclei) and merges at least one contrast
// that the rest of the family preserves.
constexpr const char* kFamilyL1 =
    "b > p\n"
    "d > t\n"
    "g > k\n"
    "a > ɑ\ne > ɛ\ni > ɪ\no > ɔ\nu > ʊ\nə > ɐ\n";

constexpr const char* kFamilyL2 =
    "ŋ > n\n"
    "a > aː\ne > eː\ni > iː\no > oː\nu > uː\nə > əː\n";

constexpr const char* kFamilyL3 =
    "a > æ\ne > ø\ni > y\no > ɤ\nu > ɯ\nə > ɜ\n"
    "s > ʃ\n"
    "t > k / V _\n";

constexpr const char* kFamilyL4 =
    "² > ¹\n"
    "s > h\n"
    "a > ɒ\ne > œ\ni > ʏ\no > ɵ\nu > ʉ\nə > ɞ\n";

}  // namespace

std::vector<LanguageRules> default_family() {
  return {
      {"Lago", parse_rules(kFamilyL1)},
      {"Mira", parse_rules(kFamilyL2)},
      {"Nusa", parse_rules(kFamilyL3)},
      {"Orin", parse_rules(kFamilyL4)},
  };
}

ProtoShape default_family_shape() {
  ProtoShape s;
  s.onsets = {"p", "t", "k", "b", "d", "g", "m", "n", "s", "l"};
  s.nuclei = {"a", "e", "i", "o", "u", "ə"};
  s.codas = {"", "n", "ŋ", "t", "k"};
  s.tones = {"¹", "²"};
  return s;
}

}  // namespace protoform::data
