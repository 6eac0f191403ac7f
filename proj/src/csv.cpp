#include "geofuse/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace geofuse {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out) fail(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path.string() + "' for reading");
  return in;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  if (!fields.empty() && !fields.back().empty() && fields.back().back() == '\r')
    fields.back().pop_back();
  return fields;
}

double parse_field(const std::string& field, int row, int col) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  while (ptr != last && (*ptr == ' ' || *ptr == '\t')) ++ptr;
  if (ec != std::errc{} || ptr != last)
    fail(ErrorCode::UnparseableNumber, "'" + field + "' at row " + std::to_string(row) +
                                           ", column " + std::to_string(col));
  return value;
}

}  // namespace

void write_matrix_csv(const std::filesystem::path& path, const SquareMatrix& m) {
  auto out = open_out(path);
  const int n = m.size();
  std::string line;
  for (int i = 0; i < n; ++i) {
    line.clear();
    for (int j = 0; j < n; ++j) {
      if (j) line += ',';
      line += format_double(m(i, j));
    }
    line += '\n';
    out << line;
  }
}

SquareMatrix read_matrix_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int row_no = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto fields = split_line(line);
    std::vector<double> row;
    row.reserve(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c)
      row.push_back(parse_field(fields[c], row_no, static_cast<int>(c)));
    rows.push_back(std::move(row));
    ++row_no;
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) fail(ErrorCode::EmptyInput, "'" + path.string() + "' holds no rows");
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      fail(ErrorCode::NonSquare, "row " + std::to_string(i) + " of '" + path.string() +
                                     "' has " + std::to_string(rows[i].size()) +
                                     " fields, expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

void write_channels_csv(const std::filesystem::path& path, const MultiTimeSeries& ts) {
  for (const Channel& ch : ts.channels())
    if (ch.dim != 1)
      fail(ErrorCode::InvalidArgument,
           "channels CSV holds scalar channels only; '" + ch.name + "' has dim " +
               std::to_string(ch.dim));
  auto out = open_out(path);
  std::string line;
  for (int i = 0; i < ts.channel_count(); ++i) {
    if (i) line += ',';
    const std::string& name = ts.channel(i).name;
    line += name.empty() ? ("channel_" + std::to_string(i)) : name;
  }
  line += '\n';
  out << line;
  for (int t = 0; t < ts.sample_count(); ++t) {
    line.clear();
    for (int i = 0; i < ts.channel_count(); ++i) {
      if (i) line += ',';
      line += format_double(ts.channel(i).values[static_cast<std::size_t>(t)]);
    }
    line += '\n';
    out << line;
  }
}

MultiTimeSeries read_channels_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line))
    fail(ErrorCode::EmptyInput, "'" + path.string() + "' has no header");
  auto names = split_line(line);
  const int m = static_cast<int>(names.size());
  std::vector<std::vector<double>> columns(names.size());
  int row_no = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto fields = split_line(line);
    if (static_cast<int>(fields.size()) != m)
      fail(ErrorCode::SizeMismatch, "row " + std::to_string(row_no) + " has " +
                                        std::to_string(fields.size()) +
                                        " fields, expected " + std::to_string(m));
    for (int c = 0; c < m; ++c)
      columns[static_cast<std::size_t>(c)].push_back(
          parse_field(fields[static_cast<std::size_t>(c)], row_no, c));
    ++row_no;
  }
  return MultiTimeSeries::from_scalar_columns(std::move(names), columns);
}

void write_points_csv(const std::filesystem::path& path,
                      std::span<const std::array<double, 3>> points) {
  auto out = open_out(path);
  for (const auto& p : points)
    out << format_double(p[0]) << ',' << format_double(p[1]) << ','
        << format_double(p[2]) << '\n';
}

void write_rect_csv(const std::filesystem::path& path, std::span<const double> values,
                    int rows, int cols) {
  if (values.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    fail(ErrorCode::SizeMismatch, "value buffer does not match rows*cols");
  auto out = open_out(path);
  std::string line;
  for (int r = 0; r < rows; ++r) {
    line.clear();
    for (int c = 0; c < cols; ++c) {
      if (c) line += ',';
      line += format_double(values[static_cast<std::size_t>(r) * cols + c]);
    }
    line += '\n';
    out << line;
  }
}

}  // namespace geofuse
