#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace rydephase {

struct Column {
  std::string name;
  std::vector<double> values;
};

// Columns of equal length sharing one grid (the first column).
struct Table {
  std::vector<Column> columns;

  std::size_t rows() const { return columns.empty() ? 0 : columns.front().values.size(); }
};

// Shortest decimal representation that round-trips; "nan"/"inf" otherwise.
std::string format_number(double value);

std::string render_csv(const Table& table);
void emit_csv(const std::filesystem::path& path, const Table& table);

// Pretty-printed with sorted keys, so equal documents give equal bytes.
void emit_json(const std::filesystem::path& path, const nlohmann::json& doc);

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool markers = false;  // dots instead of a polyline
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<PlotSeries> series;
};

std::string render_svg(const PlotSpec& plot);
void emit_svg(const std::filesystem::path& path, const PlotSpec& plot);

}  // namespace rydephase
