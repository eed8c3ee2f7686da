#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace viewcast::kv {

// Flat `key = value` text block. Blank lines and '#' comments are ignored.
// Configs, synth recipes and feature specs all serialize through this.
using Map = std::map<std::string, std::string>;

Map parse(const std::string& text);
Map parse_file(const std::filesystem::path& path);
std::string serialize(const Map& m);

bool has(const Map& m, const std::string& key);

std::string get_str(const Map& m, const std::string& key);
std::string get_str(const Map& m, const std::string& key, const std::string& fallback);
std::int64_t get_int(const Map& m, const std::string& key);
std::int64_t get_int(const Map& m, const std::string& key, std::int64_t fallback);
double get_double(const Map& m, const std::string& key);
double get_double(const Map& m, const std::string& key, double fallback);
bool get_bool(const Map& m, const std::string& key, bool fallback);

std::vector<std::string> split_list(const std::string& s, char sep = ',');
std::string trim(const std::string& s);

}  // namespace viewcast::kv
