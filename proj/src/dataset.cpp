#include "mimest/dataset.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "mimest/errors.hpp"
#include "mimest/io.hpp"

namespace mimest {

namespace {
constexpr uint32_t kBinaryMagic = 0x4D494453;  // "MIDS"
constexpr uint32_t kBinaryVersion = 1;

void write_u64le(std::ostream& os, uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

uint64_t read_u64le(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
  return v;
}
}  // namespace

PairedDataset PairedDataset::rows(const std::vector<int>& idx) const {
  PairedDataset out;
  out.x.resize(static_cast<Eigen::Index>(idx.size()), x.cols());
  out.y.resize(static_cast<Eigen::Index>(idx.size()), y.cols());
  for (size_t i = 0; i < idx.size(); ++i) {
    out.x.row(static_cast<Eigen::Index>(i)) = x.row(idx[i]);
    out.y.row(static_cast<Eigen::Index>(i)) = y.row(idx[i]);
  }
  return out;
}

void write_dataset_csv(const PairedDataset& ds, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoFailure("cannot open for writing: " + path);
  for (int j = 0; j < ds.dx(); ++j) os << (j ? "," : "") << "x_" << j;
  for (int j = 0; j < ds.dy(); ++j) os << ",y_" << j;
  os << "\n";
  for (int i = 0; i < ds.n(); ++i) {
    for (int j = 0; j < ds.dx(); ++j) {
      if (j) os << ",";
      os << format_double(ds.x(i, j));
    }
    for (int j = 0; j < ds.dy(); ++j) os << "," << format_double(ds.y(i, j));
    os << "\n";
  }
  if (!os) throw IoFailure("write failed: " + path);
}

PairedDataset read_dataset_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoFailure("cannot open: " + path);
  std::string line;
  if (!std::getline(is, line)) throw IoFailure("empty dataset file: " + path);
  int dx = 0, dy = 0;
  {
    std::stringstream header(line);
    std::string col;
    while (std::getline(header, col, ',')) {
      if (col.rfind("x_", 0) == 0)
        ++dx;
      else if (col.rfind("y_", 0) == 0)
        ++dy;
      else
        throw IoFailure("unexpected dataset column '" + col + "' in " + path);
    }
  }
  if (dx < 1 || dy < 1) throw IoFailure("dataset header must list x_* and y_* columns: " + path);
  std::vector<double> values;
  int n = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    int count = 0;
    while (std::getline(row, cell, ',')) {
      values.push_back(parse_double(cell));
      ++count;
    }
    if (count != dx + dy) throw IoFailure("row width mismatch in " + path);
    ++n;
  }
  PairedDataset ds;
  ds.x.resize(n, dx);
  ds.y.resize(n, dy);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < dx; ++j) ds.x(i, j) = values[static_cast<size_t>(i) * (dx + dy) + j];
    for (int j = 0; j < dy; ++j) ds.y(i, j) = values[static_cast<size_t>(i) * (dx + dy) + dx + j];
  }
  return ds;
}

void write_dataset_binary(const PairedDataset& ds, const std::string& path) {
  static_assert(std::endian::native == std::endian::little, "little-endian host expected");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoFailure("cannot open for writing: " + path);
  write_u64le(os, (static_cast<uint64_t>(kBinaryVersion) << 32) | kBinaryMagic);
  write_u64le(os, static_cast<uint64_t>(ds.n()));
  write_u64le(os, static_cast<uint64_t>(ds.dx()));
  write_u64le(os, static_cast<uint64_t>(ds.dy()));
  std::vector<double> row(static_cast<size_t>(ds.dx() + ds.dy()));
  for (int i = 0; i < ds.n(); ++i) {
    for (int j = 0; j < ds.dx(); ++j) row[static_cast<size_t>(j)] = ds.x(i, j);
    for (int j = 0; j < ds.dy(); ++j) row[static_cast<size_t>(ds.dx() + j)] = ds.y(i, j);
    os.write(reinterpret_cast<const char*>(row.data()),
             static_cast<std::streamsize>(row.size() * sizeof(double)));
  }
  if (!os) throw IoFailure("write failed: " + path);
}

PairedDataset read_dataset_binary(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoFailure("cannot open: " + path);
  const uint64_t tag = read_u64le(is);
  if ((tag & 0xFFFFFFFFull) != kBinaryMagic)
    throw IoFailure("not a dataset binary file: " + path);
  if ((tag >> 32) != kBinaryVersion) throw IoFailure("unsupported dataset version in " + path);
  const auto n = static_cast<Eigen::Index>(read_u64le(is));
  const auto dx = static_cast<Eigen::Index>(read_u64le(is));
  const auto dy = static_cast<Eigen::Index>(read_u64le(is));
  PairedDataset ds;
  ds.x.resize(n, dx);
  ds.y.resize(n, dy);
  std::vector<double> row(static_cast<size_t>(dx + dy));
  for (Eigen::Index i = 0; i < n; ++i) {
    is.read(reinterpret_cast<char*>(row.data()),
            static_cast<std::streamsize>(row.size() * sizeof(double)));
    if (!is) throw IoFailure("truncated dataset file: " + path);
    for (Eigen::Index j = 0; j < dx; ++j) ds.x(i, j) = row[static_cast<size_t>(j)];
    for (Eigen::Index j = 0; j < dy; ++j) ds.y(i, j) = row[static_cast<size_t>(dx + j)];
  }
  return ds;
}

namespace {
bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}
}  // namespace

void write_dataset(const PairedDataset& ds, const std::string& path, const std::string& format) {
  if (format == "csv" || (format.empty() && has_suffix(path, ".csv")))
    write_dataset_csv(ds, path);
  else if (format == "bin" || format.empty())
    write_dataset_binary(ds, path);
  else
    throw ConfigInvalid("unknown dataset format '" + format + "' (use csv or bin)");
}

PairedDataset read_dataset(const std::string& path) {
  if (has_suffix(path, ".csv")) return read_dataset_csv(path);
  return read_dataset_binary(path);
}

}  // namespace mimest
