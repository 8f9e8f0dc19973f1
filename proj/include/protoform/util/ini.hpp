#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace protoform {

// Flat key=value configuration file. '#' and ';' start comments, blank lines
// are ignored, keys keep first-seen order for serialization.
class KeyValues {
 public:
  KeyValues() = default;

  static KeyValues parse_file(const std::string& path);
  static KeyValues parse_string(const std::string& text);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;
  std::optional<std::string> get(const std::string& key) const;

  std::string get_string(const std::string& key, const std::string& dflt) const;
  long get_int(const std::string& key, long dflt) const;
  double get_double(const std::string& key, double dflt) const;
  bool get_bool(const std::string& key, bool dflt) const;

  // Keys in insertion order.
  const std::vector<std::string>& keys() const { return order_; }
  // Canonical serialization: "key = value" lines in insertion order, LF.
  std::string serialize() const;
  void write_file(const std::string& path) const;

  // Keys present in this object but not in `known` (for config validation).
  std::vector<std::string> unknown_keys(const std::vector<std::string>& known) const;

 private:
  std::vector<std::string> order_;
  std::map<std::string, std::string> values_;
};

}  // namespace protoform
