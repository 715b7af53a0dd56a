#pragma once

#include <string>
#include <vector>

#include "bozk/grid.hpp"

namespace bozk {

// 17 significant digits: round-trips every double
std::string fmt17(double a);

// Columns are "name[unit]".  Cells are preformatted strings.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  void add(std::vector<std::string> row);
  std::string str() const;
};

// write to "<path>.tmp" then rename over <path>; creates parent directories
void write_atomic(const std::string& path, const std::string& bytes);
void write_csv(const std::string& path, const CsvTable& t);

// "BOZK", u32 version, u32 nx, u32 ny, f64 Lx, f64 Ly, nx*ny f64 (x fastest),
// all little-endian
inline constexpr unsigned kSnapshotVersion = 1;
std::string encode_snapshot(const RealField& u);
RealField decode_snapshot(const std::string& bytes);
void write_snapshot(const std::string& path, const RealField& u);
RealField read_snapshot(const std::string& path);

}  // namespace bozk
