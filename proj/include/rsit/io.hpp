#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rsit/propagation/propagate.hpp"

namespace rsit::io {

/// Minimal CSV writer; numbers use %.12g so identical values give identical bytes.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
  CsvWriter& operator<<(double x);
  CsvWriter& operator<<(long x);
  CsvWriter& operator<<(int x) { return *this << static_cast<long>(x); }
  CsvWriter& operator<<(const std::string& s);
  void end_row();

 private:
  std::ofstream out_;
  std::size_t cols_ = 0;
  std::size_t col_ = 0;
  void sep();
};

void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& j);

/// Little-endian field dump:
///   bytes 0-7   magic "RSITFLD1"
///   bytes 8-15  uint64 n_z
///   bytes 16-23 uint64 n_t
///   then n_z * n_t (re, im) float32 pairs, row-major with one row per z node.
void write_field_dump(const std::filesystem::path& path, const Eigen::MatrixXcd& field);
Eigen::MatrixXcf read_field_dump(const std::filesystem::path& path);

/// Grids and solver settings of a run, enough to reproduce it.
nlohmann::ordered_json run_metadata(const PropagationResult& r);

}  // namespace rsit::io
