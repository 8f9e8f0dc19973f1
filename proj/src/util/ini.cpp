#include "protoform/util/ini.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "protoform/util/error.hpp"

namespace protoform {

namespace {
std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}
}  // namespace

KeyValues KeyValues::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str());
}

KeyValues KeyValues::parse_string(const std::string& text) {
  KeyValues kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw DataError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (key.empty())
      throw DataError("config line " + std::to_string(lineno) + ": empty key");
    kv.set(key, val);
  }
  return kv;
}

void KeyValues::set(const std::string& key, const std::string& value) {
  if (!values_.count(key)) order_.push_back(key);
  values_[key] = value;
}

bool KeyValues::has(const std::string& key) const { return values_.count(key) > 0; }

std::optional<std::string> KeyValues::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string KeyValues::get_string(const std::string& key, const std::string& dflt) const {
  auto v = get(key);
  return v ? *v : dflt;
}

long KeyValues::get_int(const std::string& key, long dflt) const {
  auto v = get(key);
  if (!v) return dflt;
  try {
    std::size_t pos = 0;
    long r = std::stol(*v, &pos);
    if (pos != v->size()) throw std::invalid_argument("");
    return r;
  } catch (...) {
    throw DataError("config key '" + key + "': not an integer: " + *v);
  }
}

double KeyValues::get_double(const std::string& key, double dflt) const {
  auto v = get(key);
  if (!v) return dflt;
  try {
    std::size_t pos = 0;
    double r = std::stod(*v, &pos);
    if (pos != v->size()) throw std::invalid_argument("");
    return r;
  } catch (...) {
    throw DataError("config key '" + key + "': not a number: " + *v);
  }
}

bool KeyValues::get_bool(const std::string& key, bool dflt) const {
  auto v = get(key);
  if (!v) return dflt;
  if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
  if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
  throw DataError("config key '" + key + "': not a boolean: " + *v);
}

std::string KeyValues::serialize() const {
  std::string out;
  for (const auto& k : order_) {
    out += k;
    out += " = ";
    out += values_.at(k);
    out += "\n";
  }
  return out;
}

void KeyValues::write_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write config file: " + path);
  out << serialize();
}

std::vector<std::string> KeyValues::unknown_keys(
    const std::vector<std::string>& known) const {
  std::vector<std::string> out;
  for (const auto& k : order_)
    if (std::find(known.begin(), known.end(), k) == known.end()) out.push_back(k);
  return out;
}

}  // namespace protoform
