#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef FLATPARK_FIXTURE_DIR
#error "FLATPARK_FIXTURE_DIR must be defined"
#endif

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(FLATPARK_FIXTURE_DIR) + "/" + name; }

inline std::string slurp(const std::string& name) {
  std::ifstream in(path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Rows of an integer CSV, skipping '#' comments and the header line.
inline std::vector<std::vector<long long>> csv_rows(const std::string& name) {
  std::istringstream in(slurp(name));
  std::vector<std::vector<long long>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<long long> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stoll(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fixtures
