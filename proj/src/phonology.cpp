#include "protoform/phonology.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "protoform/util/utf8.hpp"

namespace protoform::phon {

namespace {

bool all_superscript_digits(const std::vector<char32_t>& cps) {
  if (cps.empty()) return false;
  return std::all_of(cps.begin(), cps.end(), utf8::is_superscript_digit);
}

}  // namespace

Phoneme Phoneme::make(const std::string& text) {
  Phoneme p;
  p.text = text;
  p.kind = all_superscript_digits(utf8::decode(text)) ? Kind::tone : Kind::segment;
  return p;
}

std::string join(const std::vector<Phoneme>& ps) {
  std::string out;
  for (const auto& p : ps) out += p.text;
  return out;
}

int PhonemeInventory::add(const std::string& text) {
  auto it = index_.find(text);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(entries_.size());
  entries_.push_back(Phoneme::make(text));
  index_.emplace(text, id);
  max_len_cp_ = std::max(max_len_cp_, utf8::length(text));
  return id;
}

std::optional<int> PhonemeInventory::lookup(const std::string& text) const {
  auto it = index_.find(text);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Phoneme> cluster_graphemes(const std::string& raw) {
  std::vector<char32_t> cps = utf8::decode(raw);
  std::vector<Phoneme> out;
  std::size_t i = 0;
  while (i < cps.size()) {
    std::vector<char32_t> cluster;
    if (utf8::is_superscript_digit(cps[i])) {
      while (i < cps.size() && utf8::is_superscript_digit(cps[i])) cluster.push_back(cps[i++]);
    } else {
      cluster.push_back(cps[i++]);
      while (i < cps.size() &&
             (utf8::is_combining_mark(cps[i]) || utf8::is_modifier_letter(cps[i])))
        cluster.push_back(cps[i++]);
    }
    out.push_back(Phoneme::make(utf8::encode(cluster)));
  }
  return out;
}

std::vector<Phoneme> tokenize(const std::string& raw, const PhonemeInventory& inv,
                              bool permissive_unknown) {
  if (inv.empty()) throw DataError("tokenize: empty inventory");
  std::vector<char32_t> cps = utf8::decode(raw);
  std::vector<Phoneme> out;
  std::size_t i = 0;
  std::size_t byte_offset = 0;
  while (i < cps.size()) {
    std::size_t max_len = std::min(inv.max_len_cp_, cps.size() - i);
    std::string matched;
    for (std::size_t len = max_len; len >= 1; --len) {
      std::string cand;
      for (std::size_t k = 0; k < len; ++k) cand += utf8::encode(cps[i + k]);
      if (inv.contains(cand)) {
        matched = cand;
        break;
      }
    }
    if (!matched.empty()) {
      out.push_back(inv.at(*inv.lookup(matched)));
      i += utf8::length(matched);
      byte_offset += matched.size();
      continue;
    }
    if (!permissive_unknown) throw UnknownSymbol(i, byte_offset, raw);
    // Consume one grapheme cluster as an out-of-inventory phoneme.
    std::string rest;
    for (std::size_t k = i; k < cps.size(); ++k) rest += utf8::encode(cps[k]);
    std::vector<Phoneme> clusters = cluster_graphemes(rest);
    out.push_back(clusters.front());
    i += utf8::length(clusters.front().text);
    byte_offset += clusters.front().text.size();
  }
  return out;
}

int hamming(const FeatureVector& a, const FeatureVector& b) {
  if (a.size() != b.size())
    throw DataError("hamming: feature vectors of different length");
  int d = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (a.values[i] != b.values[i]) ++d;
  return d;
}

FeatureTable FeatureTable::load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open feature table: " + path);
  std::string line;
  if (!std::getline(in, line)) throw DataError("feature table is empty: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  if (header.size() < 2 || header[0] != "segment")
    throw DataError("feature table header must start with 'segment': " + path);
  int nf = static_cast<int>(header.size()) - 1;
  std::vector<std::pair<std::string, FeatureVector>> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (static_cast<int>(cells.size()) != nf + 1)
      throw DataError("feature table line " + std::to_string(lineno) + ": expected " +
                      std::to_string(nf + 1) + " cells");
    FeatureVector fv;
    fv.values.reserve(nf);
    for (int i = 1; i <= nf; ++i) {
      if (cells[i] == "+")
        fv.values.push_back(1);
      else if (cells[i] == "-")
        fv.values.push_back(-1);
      else if (cells[i] == "0")
        fv.values.push_back(0);
      else
        throw DataError("feature table line " + std::to_string(lineno) +
                        ": bad value '" + cells[i] + "'");
    }
    rows.emplace_back(cells[0], std::move(fv));
  }
  return from_rows(nf, rows);
}

FeatureTable FeatureTable::from_rows(
    int n_features, const std::vector<std::pair<std::string, FeatureVector>>& rows) {
  FeatureTable t;
  t.n_features_ = n_features;
  t.zero_.values.assign(n_features, 0);
  for (const auto& [seg, fv] : rows) {
    if (fv.size() != n_features)
      throw DataError("feature row '" + seg + "' has wrong length");
    t.rows_[seg] = fv;
  }
  return t;
}

const FeatureTable& FeatureTable::bundled() {
  static FeatureTable table = [] {
    std::string path;
    if (const char* env = std::getenv("PROTOFORM_DATA")) {
      path = std::string(env) + "/features.csv";
      std::ifstream probe(path);
      if (!probe) path.clear();
    }
    if (path.empty()) path = std::string(PROTOFORM_DATA_DIR) + "/features.csv";
    return load_csv(path);
  }();
  return table;
}

namespace {

// Strip combining marks and modifier letters, keeping base codepoints.
std::string strip_diacritics(const std::string& text) {
  std::string out;
  for (char32_t cp : utf8::decode(text)) {
    if (utf8::is_combining_mark(cp) || utf8::is_modifier_letter(cp)) continue;
    out += utf8::encode(cp);
  }
  return out;
}

}  // namespace

const FeatureVector& FeatureTable::features(const Phoneme& p) const {
  if (p.is_tone()) return zero_;
  auto it = rows_.find(p.text);
  if (it != rows_.end()) return it->second;
  if (fallback_) {
    std::string base = strip_diacritics(p.text);
    if (!base.empty() && base != p.text) {
      auto fb = rows_.find(base);
      if (fb != rows_.end()) {
        ++fallback_hits;
        return fb->second;
      }
    }
  }
  throw MissingFeatureEntry(p.text);
}

bool FeatureTable::is_nuclear(const Phoneme& p) const {
  if (p.is_tone()) return false;
  try {
    return features(p).values.at(0) > 0;
  } catch (const MissingFeatureEntry&) {
    return false;  // unknown segments pattern as consonants
  }
}

std::vector<Phoneme> SyllableParts::concat() const {
  std::vector<Phoneme> out;
  out.insert(out.end(), onset.begin(), onset.end());
  out.insert(out.end(), nucleus.begin(), nucleus.end());
  out.insert(out.end(), coda.begin(), coda.end());
  out.insert(out.end(), tone.begin(), tone.end());
  return out;
}

SyllableParts segment_syllable(const std::vector<Phoneme>& tokens, const FeatureTable& table) {
  if (tokens.empty()) throw DataError("segment_syllable: empty token sequence");
  SyllableParts parts;
  // Trailing tone run.
  std::size_t end = tokens.size();
  while (end > 0 && tokens[end - 1].is_tone()) --end;
  parts.tone.assign(tokens.begin() + end, tokens.end());

  std::size_t i = 0;
  while (i < end && !table.is_nuclear(tokens[i])) parts.onset.push_back(tokens[i++]);
  if (i == end) {
    // No syllabic segment: report everything as onset and flag it.
    parts.no_nucleus = true;
    return parts;
  }
  while (i < end && table.is_nuclear(tokens[i])) parts.nucleus.push_back(tokens[i++]);
  while (i < end) {
    if (table.is_nuclear(tokens[i])) parts.extra_vowel_run = true;
    parts.coda.push_back(tokens[i++]);
  }
  return parts;
}

}  // namespace protoform::phon
