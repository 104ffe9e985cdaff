#pragma once

#include <map>
#include <string>
#include <vector>

namespace fwcli {

// Flat INI-style experiment config: [section] headers, key = value lines,
// '#' or ';' comments. Keys are looked up as "section.key".
class Config {
 public:
  static Config load(const std::string& path);
  static Config from_string(const std::string& text);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  std::string get(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long get_long(const std::string& key, long fallback) const;

  void set(const std::string& key, const std::string& value);

  // Ordered "key = value" lines for echoing into output headers.
  std::vector<std::string> lines() const;

 private:
  std::map<std::string, std::string> values_;
  std::vector<std::string> order_;
};

}  // namespace fwcli
