#include "viewcast/kv.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "viewcast/errors.hpp"

namespace viewcast::kv {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

Map parse(const std::string& text) {
  Map out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    }
    out[key] = value;
  }
  return out;
}

Map parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string serialize(const Map& m) {
  std::ostringstream out;
  for (const auto& [k, v] : m) out << k << " = " << v << "\n";
  return out.str();
}

bool has(const Map& m, const std::string& key) { return m.find(key) != m.end(); }

std::string get_str(const Map& m, const std::string& key) {
  const auto it = m.find(key);
  if (it == m.end()) throw ConfigError("missing config key: " + key);
  return it->second;
}

std::string get_str(const Map& m, const std::string& key, const std::string& fallback) {
  const auto it = m.find(key);
  return it == m.end() ? fallback : it->second;
}

namespace {

std::int64_t to_int(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const long long v = std::strtoll(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0') {
    throw ConfigError("config key '" + key + "': expected integer, got '" + value + "'");
  }
  return v;
}

double to_double(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0') {
    throw ConfigError("config key '" + key + "': expected number, got '" + value + "'");
  }
  return v;
}

}  // namespace

std::int64_t get_int(const Map& m, const std::string& key) { return to_int(key, get_str(m, key)); }

std::int64_t get_int(const Map& m, const std::string& key, std::int64_t fallback) {
  const auto it = m.find(key);
  return it == m.end() ? fallback : to_int(key, it->second);
}

double get_double(const Map& m, const std::string& key) { return to_double(key, get_str(m, key)); }

double get_double(const Map& m, const std::string& key, double fallback) {
  const auto it = m.find(key);
  return it == m.end() ? fallback : to_double(key, it->second);
}

bool get_bool(const Map& m, const std::string& key, bool fallback) {
  const auto it = m.find(key);
  if (it == m.end()) return fallback;
  const std::string v = it->second;
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("config key '" + key + "': expected boolean, got '" + v + "'");
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace viewcast::kv
