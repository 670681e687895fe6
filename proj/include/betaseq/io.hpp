#pragma once

// Point-file serialization.  CSV: one point per line, coordinates as decimal
// literals joined by single commas, '\n' endings, no header unless requested
// (the header line is "dim=<s> generator=<provenance>").  JSONL: one
// self-describing record per line.

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sequence.hpp"

namespace betaseq {

inline std::string format_double(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

inline void write_points_csv(std::ostream& os, const PointSet& ps, int precision,
                             bool header = false) {
  if (header) os << "dim=" << ps.dimension << " generator=" << ps.provenance << "\n";
  for (std::int64_t i = 0; i < ps.size(); ++i) {
    for (int d = 0; d < ps.dimension; ++d) {
      if (d) os << ',';
      os << format_double(ps.at(i, d), precision);
    }
    os << '\n';
  }
}

inline void write_points_jsonl(std::ostream& os, const PointSet& ps, int precision) {
  for (std::int64_t i = 0; i < ps.size(); ++i) {
    os << "{\"x\":[";
    for (int d = 0; d < ps.dimension; ++d) {
      if (d) os << ',';
      os << format_double(ps.at(i, d), precision);
    }
    os << "]}\n";
  }
}

inline PointSet read_points_csv(std::istream& is) {
  PointSet ps;
  ps.dimension = 0;
  std::string line;
  std::int64_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line.rfind("dim=", 0) == 0) continue;  // optional header
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      std::string cell = line.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": bad coordinate '" + cell + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (ps.dimension == 0)
      ps.dimension = static_cast<int>(row.size());
    else if (static_cast<int>(row.size()) != ps.dimension)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(ps.dimension) + " coordinates");
    ps.coords.insert(ps.coords.end(), row.begin(), row.end());
  }
  if (ps.coords.empty()) throw std::invalid_argument("no points in input");
  ps.provenance = "file";
  return ps;
}

}  // namespace betaseq
