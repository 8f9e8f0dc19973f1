#include "protoform/rules.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace protoform::data {

bool ContextPattern::matches(const std::vector<Phoneme>& form, long index,
                             const phon::FeatureTable& table) const {
  bool off_edge = index < 0 || index >= static_cast<long>(form.size());
  if (kind == Kind::boundary) return off_edge;
  if (off_edge) return false;
  const Phoneme& p = form[index];
  if (kind == Kind::literal) return p.text == text;
  if (text == "V") return table.is_nuclear(p);
  if (text == "C") return !p.is_tone() && !table.is_nuclear(p);
  if (text == "T") return p.is_tone();
  throw DataError("unknown phoneme class '" + text + "'");
}

Form SoundChangeRule::apply(const Form& form, const phon::FeatureTable& table) const {
  Form out;
  out.reserve(form.size());
  for (long i = 0; i < static_cast<long>(form.size()); ++i) {
    bool hit = form[i].text == target &&
               (!left || left->matches(form, i - 1, table)) &&
               (!right || right->matches(form, i + 1, table));
    if (hit) {
      for (const auto& r : replacement) out.push_back(Phoneme::make(r));
    } else {
      out.push_back(form[i]);
    }
  }
  return out;
}

Form apply_rules(const Form& form, const std::vector<SoundChangeRule>& rules,
                 const phon::FeatureTable& table) {
  Form cur = form;
  for (const auto& r : rules) cur = r.apply(cur, table);
  return cur;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

ContextPattern parse_context(const std::string& tok) {
  ContextPattern p;
  if (tok == "#") {
    p.kind = ContextPattern::Kind::boundary;
  } else if (tok == "V" || tok == "C" || tok == "T") {
    p.kind = ContextPattern::Kind::cls;
    p.text = tok;
  } else {
    p.kind = ContextPattern::Kind::literal;
    p.text = tok;
  }
  return p;
}

}  // namespace

std::vector<SoundChangeRule> parse_rules(const std::string& text) {
  std::vector<SoundChangeRule> rules;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw DataError("rules line " + std::to_string(lineno) + ": " + msg);
    };
    auto gt = std::find(toks.begin(), toks.end(), ">");
    if (gt == toks.end() || gt == toks.begin()) fail("expected 'target > replacement'");
    if (std::distance(toks.begin(), gt) != 1) fail("target must be a single phoneme");
    SoundChangeRule rule;
    rule.target = toks[0];
    auto slash = std::find(toks.begin(), toks.end(), "/");
    auto repl_end = slash;
    for (auto it = gt + 1; it != repl_end; ++it) {
      if (*it == "0" || *it == "∅") continue;
      rule.replacement.push_back(*it);
    }
    if (slash != toks.end()) {
      auto us = std::find(slash + 1, toks.end(), "_");
      if (us == toks.end()) fail("environment needs '_'");
      std::vector<std::string> lhs(slash + 1, us);
      std::vector<std::string> rhs(us + 1, toks.end());
      if (lhs.size() > 1 || rhs.size() > 1) fail("one pattern per context side");
      if (lhs.size() == 1) rule.left = parse_context(lhs[0]);
      if (rhs.size() == 1) rule.right = parse_context(rhs[0]);
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

std::vector<SoundChangeRule> load_rules(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open rules file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_rules(ss.str());
}

}  // namespace protoform::data
