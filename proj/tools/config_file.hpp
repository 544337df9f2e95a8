// Copyright (c) 2026 The fadgreen authors
// SPDX-License-Identifier: Apache-2.0
//
// Minimal sectioned key=value config reader ('#' comments).

#ifndef FADGREEN_TOOLS_CONFIG_FILE_HPP
#define FADGREEN_TOOLS_CONFIG_FILE_HPP

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

namespace fadg::tools {

class ConfigFile {
 public:
  ConfigFile() = default;

  static ConfigFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    ConfigFile cf;
    std::string line, section;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[' && line.back() == ']') {
        section = trim(line.substr(1, line.size() - 2));
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string::npos)
        throw std::runtime_error("config: malformed line '" + line + "'");
      cf.values_[section + "/" + trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return cf;
  }

  bool has(const std::string& section, const std::string& key) const {
    return values_.count(section + "/" + key) > 0;
  }
  std::string get(const std::string& section, const std::string& key,
                  const std::string& fallback = "") const {
    auto it = values_.find(section + "/" + key);
    return it == values_.end() ? fallback : it->second;
  }
  double get_double(const std::string& section, const std::string& key,
                    double fallback) const {
    auto it = values_.find(section + "/" + key);
    return it == values_.end() ? fallback : std::stod(it->second);
  }
  const std::map<std::string, std::string>& raw() const { return values_; }

 private:
  static std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
  }
  std::map<std::string, std::string> values_;  // "section/key" -> value
};

}  // namespace fadg::tools

#endif
