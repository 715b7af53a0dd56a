#include "bozk/output.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bozk/error.hpp"

namespace bozk {

namespace fs = std::filesystem;

std::string fmt17(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

void CsvTable::add(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw std::logic_error("csv row width mismatch");
  rows.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string s;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) s += ',';
      s += cells[k];
    }
    s += '\n';
  };
  line(columns);
  for (const auto& r : rows) line(r);
  return s;
}

void write_atomic(const std::string& path, const std::string& bytes) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string());
    f.write(bytes.data(), std::streamsize(bytes.size()));
    f.flush();
    if (!f) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, p);
}

void write_csv(const std::string& path, const CsvTable& t) { write_atomic(path, t.str()); }

namespace {

template <class T>
void put_le(std::string& out, T v) {
  unsigned char b[sizeof(T)];
  std::memcpy(b, &v, sizeof(T));
  if constexpr (std::endian::native == std::endian::big)
    for (std::size_t k = 0; k < sizeof(T) / 2; ++k) std::swap(b[k], b[sizeof(T) - 1 - k]);
  out.append(reinterpret_cast<const char*>(b), sizeof(T));
}

template <class T>
T get_le(const std::string& in, std::size_t& pos) {
  if (pos + sizeof(T) > in.size()) throw ConfigError("snapshot truncated");
  unsigned char b[sizeof(T)];
  std::memcpy(b, in.data() + pos, sizeof(T));
  if constexpr (std::endian::native == std::endian::big)
    for (std::size_t k = 0; k < sizeof(T) / 2; ++k) std::swap(b[k], b[sizeof(T) - 1 - k]);
  pos += sizeof(T);
  T v;
  std::memcpy(&v, b, sizeof(T));
  return v;
}

}  // namespace

std::string encode_snapshot(const RealField& u) {
  const Grid2D& g = u.grid;
  std::string s = "BOZK";
  put_le<std::uint32_t>(s, kSnapshotVersion);
  put_le<std::uint32_t>(s, std::uint32_t(g.nx));
  put_le<std::uint32_t>(s, std::uint32_t(g.ny));
  put_le<double>(s, g.Lx);
  put_le<double>(s, g.Ly);
  for (double a : u.v) put_le<double>(s, a);
  return s;
}

RealField decode_snapshot(const std::string& bytes) {
  if (bytes.size() < 4 || bytes.compare(0, 4, "BOZK") != 0)
    throw ConfigError("not a BOZK snapshot");
  std::size_t pos = 4;
  auto version = get_le<std::uint32_t>(bytes, pos);
  if (version != kSnapshotVersion)
    throw ConfigError("unsupported snapshot version " + std::to_string(version));
  int nx = int(get_le<std::uint32_t>(bytes, pos));
  int ny = int(get_le<std::uint32_t>(bytes, pos));
  double Lx = get_le<double>(bytes, pos);
  double Ly = get_le<double>(bytes, pos);
  Grid2D g = make_grid(nx, ny, Lx, Ly);
  if (bytes.size() != pos + g.size() * sizeof(double))
    throw ConfigError("snapshot size does not match its header");
  RealField u(g);
  for (double& a : u.v) a = get_le<double>(bytes, pos);
  return u;
}

void write_snapshot(const std::string& path, const RealField& u) {
  write_atomic(path, encode_snapshot(u));
}

RealField read_snapshot(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open snapshot " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return decode_snapshot(os.str());
}

}  // namespace bozk
