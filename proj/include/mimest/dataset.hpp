#pragma once

#include <string>

#include "mimest/linalg.hpp"

namespace mimest {

// n paired observations (x in R^dx, y in R^dy) drawn from a joint distribution.
struct PairedDataset {
  Matrix x;  // n x dx
  Matrix y;  // n x dy

  int n() const { return static_cast<int>(x.rows()); }
  int dx() const { return static_cast<int>(x.cols()); }
  int dy() const { return static_cast<int>(y.cols()); }

  PairedDataset rows(const std::vector<int>& idx) const;
};

// CSV with header x_0..x_{dx-1},y_0..y_{dy-1}; values round-trip exactly.
void write_dataset_csv(const PairedDataset& ds, const std::string& path);
PairedDataset read_dataset_csv(const std::string& path);

// Little-endian float64 binary with a small header; bit-exact round trip.
void write_dataset_binary(const PairedDataset& ds, const std::string& path);
PairedDataset read_dataset_binary(const std::string& path);

// Dispatch on extension: .csv / anything else is treated as binary.
void write_dataset(const PairedDataset& ds, const std::string& path, const std::string& format);
PairedDataset read_dataset(const std::string& path);

}  // namespace mimest
