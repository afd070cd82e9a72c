#include "rsit/io.hpp"

#include <array>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace rsit::io {

namespace {
constexpr char kMagic[8] = {'R', 'S', 'I', 'T', 'F', 'L', 'D', '1'};

void put_u64(std::ofstream& out, std::uint64_t v) {
  std::array<char, 8> b;
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b.data(), 8);
}

void put_f32(std::ofstream& out, float f) {
  std::uint32_t v;
  std::memcpy(&v, &f, 4);
  std::array<char, 4> b;
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b.data(), 4);
}

std::uint64_t get_u64(std::ifstream& in) {
  std::array<unsigned char, 8> b{};
  in.read(reinterpret_cast<char*>(b.data()), 8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

float get_f32(std::ifstream& in) {
  std::array<unsigned char, 4> b{};
  in.read(reinterpret_cast<char*>(b.data()), 4);
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
  float f;
  std::memcpy(&f, &v, 4);
  return f;
}

nlohmann::ordered_json vec(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}
}  // namespace

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : out_(path), cols_(header.size()) {
  if (!out_) throw std::runtime_error("cannot write " + path.string());
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << '\n';
}

void CsvWriter::sep() {
  if (col_++ > 0) out_ << ',';
}

CsvWriter& CsvWriter::operator<<(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  sep();
  out_ << buf;
  return *this;
}

CsvWriter& CsvWriter::operator<<(long x) {
  sep();
  out_ << x;
  return *this;
}

CsvWriter& CsvWriter::operator<<(const std::string& s) {
  sep();
  if (s.find_first_of(",\"\n") == std::string::npos) {
    out_ << s;
  } else {
    out_ << '"';
    for (char c : s) out_ << (c == '"' ? "\"\"" : std::string(1, c));
    out_ << '"';
  }
  return *this;
}

void CsvWriter::end_row() {
  if (col_ != cols_) throw std::logic_error("csv row has wrong number of columns");
  out_ << '\n';
  col_ = 0;
}

void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

void write_field_dump(const std::filesystem::path& path, const Eigen::MatrixXcd& field) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(kMagic, 8);
  put_u64(out, static_cast<std::uint64_t>(field.rows()));
  put_u64(out, static_cast<std::uint64_t>(field.cols()));
  for (Eigen::Index i = 0; i < field.rows(); ++i)
    for (Eigen::Index j = 0; j < field.cols(); ++j) {
      put_f32(out, static_cast<float>(field(i, j).real()));
      put_f32(out, static_cast<float>(field(i, j).imag()));
    }
}

Eigen::MatrixXcf read_field_dump(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0)
    throw std::runtime_error(path.string() + " is not a field dump");
  const auto nz = static_cast<Eigen::Index>(get_u64(in));
  const auto nt = static_cast<Eigen::Index>(get_u64(in));
  Eigen::MatrixXcf f(nz, nt);
  for (Eigen::Index i = 0; i < nz; ++i)
    for (Eigen::Index j = 0; j < nt; ++j) {
      const float re = get_f32(in);
      const float im = get_f32(in);
      f(i, j) = {re, im};
    }
  if (!in) throw std::runtime_error(path.string() + " is truncated");
  return f;
}

nlohmann::ordered_json run_metadata(const PropagationResult& r) {
  const auto& m = r.meta;
  nlohmann::ordered_json j;
  j["solver"] = m.solver;
  j["level"] = std::string(to_string(m.level));
  j["n_z"] = m.n_z;
  j["n_v"] = m.n_v;
  j["dt_s"] = m.dt;
  j["dt_out_s"] = m.dt_out;
  j["window_s"] = m.window;
  j["steps"] = m.steps;
  j["wall_seconds"] = m.wall_seconds;
  j["z_nodes_m"] = vec(r.z);
  j["velocity_nodes_m_s"] = vec(m.velocity_nodes);
  j["velocity_weights"] = vec(m.velocity_weights);
  return j;
}

}  // namespace rsit::io
