#pragma once

// The acceptance battery, read from fixtures/battery.txt ("n gamma" per line).

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef TRILIE_FIXTURE_DIR
#define TRILIE_FIXTURE_DIR "tests/fixtures"
#endif

namespace trilie::testing {

struct BatteryEntry {
  int n = 0;
  std::string gamma;
};

inline std::string fixture_path(const std::string& name) { return std::string(TRILIE_FIXTURE_DIR) + "/" + name; }

inline std::vector<BatteryEntry> load_battery() {
  std::ifstream in(fixture_path("battery.txt"));
  if (!in) throw std::runtime_error("cannot open " + fixture_path("battery.txt"));
  std::vector<BatteryEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    BatteryEntry e;
    fields >> e.n >> e.gamma;
    out.push_back(e);
  }
  return out;
}

/// "1/2,-3/2" -> "1d2_m3d2".
inline std::string gamma_slug(const std::string& gamma) {
  std::string s;
  for (char c : gamma) {
    if (c == ',') {
      s += '_';
    } else if (c == '-') {
      s += 'm';
    } else if (c == '/') {
      s += 'd';
    } else {
      s += c;
    }
  }
  return s;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace trilie::testing
