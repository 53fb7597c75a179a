#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fracaim/errors.hpp"
#include "fracaim/harness.hpp"

namespace fracaim {

namespace {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

void emit_csv(const Trajectory& x, const Trajectory& x_tilde, const std::string& path) {
  if (!(x.grid() == x_tilde.grid()) || x.dim() != x_tilde.dim())
    throw std::invalid_argument("emit_csv: trajectories must share grid and dimension");

  std::string out;
  out.reserve(x.grid().count() * (x.dim() * 2 + 1) * 16);
  out += "t";
  for (std::size_t i = 1; i <= x.dim(); ++i) out += ",x_" + std::to_string(i);
  for (std::size_t i = 1; i <= x.dim(); ++i) out += ",xt_" + std::to_string(i);
  out += "\n";

  for (std::size_t k = 0; k < x.grid().count(); ++k) {
    out += format_value(x.grid().node(k));
    for (std::size_t i = 0; i < x.dim(); ++i)
      out += "," + format_value(x[k][static_cast<Eigen::Index>(i)]);
    for (std::size_t i = 0; i < x.dim(); ++i)
      out += "," + format_value(x_tilde[k][static_cast<Eigen::Index>(i)]);
    out += "\n";
  }
  write_text_file(path, out);
}

void emit_trajectory_csv(const Trajectory& x, const std::string& path) {
  std::string out = "t";
  for (std::size_t i = 1; i <= x.dim(); ++i) out += ",x_" + std::to_string(i);
  out += "\n";
  for (std::size_t k = 0; k < x.grid().count(); ++k) {
    out += format_value(x.grid().node(k));
    for (std::size_t i = 0; i < x.dim(); ++i)
      out += "," + format_value(x[k][static_cast<Eigen::Index>(i)]);
    out += "\n";
  }
  write_text_file(path, out);
}

std::pair<Trajectory, Trajectory> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);

  std::string line;
  if (!std::getline(in, line)) throw IoError("empty CSV: " + path);
  const auto header = split_fields(line);
  if (header.size() < 3 || header[0] != "t" || (header.size() - 1) % 2 != 0)
    throw IoError("malformed CSV header: " + path);
  const std::size_t dim = (header.size() - 1) / 2;

  std::vector<double> times;
  std::vector<Vector> xs, xts;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != header.size()) throw IoError("malformed CSV row: " + path);
    times.push_back(std::stod(fields[0]));
    Vector a(static_cast<Eigen::Index>(dim)), b(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
      a[static_cast<Eigen::Index>(i)] = std::stod(fields[1 + i]);
      b[static_cast<Eigen::Index>(i)] = std::stod(fields[1 + dim + i]);
    }
    xs.push_back(std::move(a));
    xts.push_back(std::move(b));
  }
  if (times.size() < 2) throw IoError("CSV needs at least two rows: " + path);

  const double step = times[1] - times[0];
  UniformGrid grid(times.back(), step);
  if (grid.count() != times.size()) throw IoError("CSV rows do not form a uniform grid: " + path);
  return {Trajectory(grid, dim, std::move(xs)), Trajectory(grid, dim, std::move(xts))};
}

}  // namespace fracaim
