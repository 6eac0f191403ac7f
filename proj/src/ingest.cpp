#include "geofuse/ingest.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace geofuse {
namespace ingest {

const std::vector<std::string>& motionsense_channels() {
  static const std::vector<std::string> names = {
      "attitude.roll",      "attitude.pitch",     "attitude.yaw",
      "gravity.x",          "gravity.y",          "gravity.z",
      "rotationRate.x",     "rotationRate.y",     "rotationRate.z",
      "userAcceleration.x", "userAcceleration.y", "userAcceleration.z"};
  return names;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
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

void standardize_channel(std::vector<double>& values) {
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  const double sd = values.size() > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;
  for (double& v : values) v = sd > 0.0 ? (v - mean) / sd : 0.0;
}

}  // namespace

MultiTimeSeries load_motionsense(const std::filesystem::path& file,
                                 const TrialSpec& spec) {
  if (spec.max_rows < 1) fail(ErrorCode::InvalidArgument, "max_rows must be >= 1");
  if (spec.channels.empty()) fail(ErrorCode::EmptyInput, "no channels requested");
  std::ifstream in(file, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + file.string() + "'");

  std::string line;
  if (!std::getline(in, line))
    fail(ErrorCode::EmptyInput, "'" + file.string() + "' has no header row");
  const auto header = split_csv_line(line);

  std::vector<int> column_of;
  column_of.reserve(spec.channels.size());
  for (const std::string& name : spec.channels) {
    int found = -1;
    for (std::size_t c = 0; c < header.size(); ++c)
      if (header[c] == name) {
        found = static_cast<int>(c);
        break;
      }
    if (found < 0) fail(ErrorCode::MissingColumn, name);
    column_of.push_back(found);
  }

  std::vector<std::vector<double>> columns(spec.channels.size());
  for (auto& col : columns) col.reserve(static_cast<std::size_t>(spec.max_rows));
  int row_no = 0;
  while (row_no < spec.max_rows && std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    for (std::size_t c = 0; c < column_of.size(); ++c) {
      const int src = column_of[c];
      if (src >= static_cast<int>(fields.size()))
        fail(ErrorCode::SizeMismatch, "row " + std::to_string(row_no) +
                                          " is shorter than the header");
      const std::string& field = fields[static_cast<std::size_t>(src)];
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc{} || ptr != field.data() + field.size())
        fail(ErrorCode::UnparseableNumber, "'" + field + "' at data row " +
                                               std::to_string(row_no) + ", column " +
                                               std::to_string(src));
      columns[c].push_back(value);
    }
    ++row_no;
  }
  if (row_no < spec.max_rows)
    fail(ErrorCode::TooFewRows, "'" + file.string() + "' holds " +
                                    std::to_string(row_no) + " data rows, need " +
                                    std::to_string(spec.max_rows));

  if (spec.standardize)
    for (auto& col : columns) standardize_channel(col);

  return MultiTimeSeries::from_scalar_columns(
      std::vector<std::string>(spec.channels.begin(), spec.channels.end()), columns);
}

std::filesystem::path trial_path(const std::filesystem::path& root,
                                 const std::string& activity, int subject) {
  return root / activity / ("sub_" + std::to_string(subject) + ".csv");
}

}  // namespace ingest
}  // namespace geofuse
