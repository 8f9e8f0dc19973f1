#include "protoform/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace protoform::data {

int Dataset::language_index(const std::string& name) const {
  for (std::size_t i = 0; i < languages.size(); ++i)
    if (languages[i] == name) return static_cast<int>(i);
  return -1;
}

void Dataset::rebuild_inventory() {
  inventory = phon::PhonemeInventory();
  auto add_form = [&](const std::optional<Form>& f) {
    if (!f) return;
    for (const auto& p : *f) inventory.add(p.text);
  };
  for (const auto& s : sets) {
    add_form(s.proto);
    for (const auto& d : s.daughters) add_form(d);
  }
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, '\t')) out.push_back(cell);
  if (!line.empty() && line.back() == '\t') out.push_back("");
  return out;
}

struct ParseError : DataError {
  ParseError(int line, int column, const std::string& what)
      : DataError("tsv line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + what) {}
};

}  // namespace

Dataset load_tsv(const std::string& path, const std::string& proto_column,
                 const std::string& flag_column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open dataset: " + path);
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty dataset file: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> header = split_tabs(line);
  if (header.size() < 2) throw ParseError(1, 1, "need gloss column plus data columns");

  Dataset ds;
  int proto_col = -1, flag_col = -1;
  std::vector<int> lang_cols;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (header[c] == proto_column) {
      proto_col = static_cast<int>(c);
    } else if (!flag_column.empty() && header[c] == flag_column) {
      flag_col = static_cast<int>(c);
    } else {
      lang_cols.push_back(static_cast<int>(c));
      ds.languages.push_back(header[c]);
    }
  }
  if (proto_col < 0)
    throw DataError("proto column '" + proto_column + "' not found in " + path);
  ds.proto_name = proto_column;

  // First pass: collect rows and build the inventory from grapheme clusters.
  struct Row {
    std::string gloss;
    std::string proto;
    std::vector<std::string> cells;
    std::string flags;
    int line;
  };
  std::vector<Row> raw_rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells = split_tabs(line);
    if (cells.size() != header.size())
      throw ParseError(lineno, static_cast<int>(cells.size()),
                       "expected " + std::to_string(header.size()) + " cells, got " +
                           std::to_string(cells.size()));
    Row r;
    r.gloss = cells[0];
    r.proto = cells[proto_col];
    for (int c : lang_cols) r.cells.push_back(cells[c]);
    if (flag_col >= 0) r.flags = cells[flag_col];
    r.line = lineno;
    raw_rows.push_back(std::move(r));
  }

  for (const auto& r : raw_rows) {
    for (const auto& cell : {r.proto}) {
      if (cell.empty()) continue;
      for (const auto& p : phon::cluster_graphemes(cell)) ds.inventory.add(p.text);
    }
    for (const auto& cell : r.cells) {
      if (cell.empty()) continue;
      for (const auto& p : phon::cluster_graphemes(cell)) ds.inventory.add(p.text);
    }
  }

  for (const auto& r : raw_rows) {
    CognateSet cs;
    cs.gloss_id = r.gloss;
    cs.augmented.assign(ds.languages.size(), 0);
    try {
      if (!r.proto.empty()) cs.proto = phon::tokenize(r.proto, ds.inventory);
      for (const auto& cell : r.cells) {
        if (cell.empty())
          cs.daughters.push_back(std::nullopt);
        else
          cs.daughters.push_back(phon::tokenize(cell, ds.inventory));
      }
    } catch (const phon::UnknownSymbol& e) {
      throw ParseError(r.line, 0, e.what());
    }
    if (cs.present_daughters() == 0)
      throw ParseError(r.line, 0, "cognate set has no daughter forms");
    if (flag_col >= 0 && !r.flags.empty()) {
      std::stringstream fs(r.flags);
      std::string lang;
      while (std::getline(fs, lang, ',')) {
        int li = ds.language_index(lang);
        if (li < 0) throw ParseError(r.line, 0, "flag column names unknown language " + lang);
        cs.augmented[li] = 1;
      }
    }
    ds.sets.push_back(std::move(cs));
  }
  return ds;
}

void write_tsv(const Dataset& ds, const std::string& path, const std::string& flag_column) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write dataset: " + path);
  out << "GlossID\t" << ds.proto_name;
  for (const auto& l : ds.languages) out << '\t' << l;
  if (!flag_column.empty()) out << '\t' << flag_column;
  out << '\n';
  for (const auto& s : ds.sets) {
    out << s.gloss_id << '\t' << (s.proto ? phon::join(*s.proto) : "");
    for (const auto& d : s.daughters) out << '\t' << (d ? phon::join(*d) : "");
    if (!flag_column.empty()) {
      std::string flags;
      for (std::size_t i = 0; i < s.daughters.size(); ++i) {
        if (i < s.augmented.size() && s.augmented[i]) {
          if (!flags.empty()) flags += ',';
          flags += ds.languages[i];
        }
      }
      out << '\t' << flags;
    }
    out << '\n';
  }
}

void SplitSpec::validate() const {
  if (!(train > 0 && train < 1) || !(dev > 0 && dev < 1) || !(test > 0 && test < 1))
    throw DataError("split fractions must each lie in (0,1)");
  if (std::fabs(train + dev + test - 1.0) > 1e-9)
    throw DataError("split fractions must sum to 1");
}

Splits split(const Dataset& ds, const SplitSpec& spec) {
  spec.validate();
  std::vector<std::size_t> order(ds.sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(spec.seed);
  rng.shuffle(order);

  std::size_t n = order.size();
  std::size_t n_train = static_cast<std::size_t>(std::llround(spec.train * n));
  std::size_t n_dev =
      static_cast<std::size_t>(std::llround((spec.train + spec.dev) * n)) - n_train;

  Splits out;
  for (Dataset* part : {&out.train, &out.dev, &out.test}) {
    part->languages = ds.languages;
    part->proto_name = ds.proto_name;
  }
  // 0 = train, 1 = dev, 2 = test; original file order kept within each part.
  std::vector<int> membership(n);
  for (std::size_t i = 0; i < n; ++i)
    membership[order[i]] = i < n_train ? 0 : (i < n_train + n_dev ? 1 : 2);
  for (std::size_t i = 0; i < n; ++i) {
    Dataset& part = membership[i] == 0 ? out.train : (membership[i] == 1 ? out.dev : out.test);
    part.sets.push_back(ds.sets[i]);
  }
  out.train.rebuild_inventory();
  out.dev.rebuild_inventory();
  out.test.rebuild_inventory();
  return out;
}

MaskResult mask_random_daughter(const Dataset& ds, std::uint64_t seed) {
  MaskResult res;
  res.masked = ds;
  Rng rng(seed);
  for (std::size_t i = 0; i < res.masked.sets.size(); ++i) {
    CognateSet& s = res.masked.sets[i];
    std::vector<int> present;
    for (std::size_t l = 0; l < s.daughters.size(); ++l)
      if (s.daughters[l]) present.push_back(static_cast<int>(l));
    if (present.size() < 2) {
      ++res.skipped;
      continue;
    }
    int lang = present[rng.uniform_index(present.size())];
    res.key.push_back({i, lang, *s.daughters[lang]});
    s.daughters[lang] = std::nullopt;
  }
  return res;
}

Dataset unmask(const Dataset& masked, const std::vector<MaskedEntry>& key) {
  Dataset out = masked;
  for (const auto& e : key) out.sets.at(e.set_index).daughters.at(e.language) = e.form;
  return out;
}

}  // namespace protoform::data
