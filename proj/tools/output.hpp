#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include "ginimds/metrics.hpp"
#include "json.hpp"

namespace cli {

/// Writes content to a temporary file in the target directory, then renames
/// it over the destination.
void atomic_write(const std::filesystem::path& path, const std::string& content);

/// Coordinates as CSV with header c1..cp and 17 significant digits.
std::string coords_csv(const ginimds::Matrix& coords);

/// 2-D (or 1-D strip) scatter plot; one marker per row, colored by label
/// when labels are given.
std::string scatter_svg(const ginimds::Matrix& coords, const std::vector<int>* labels);

/// Named wall-clock phases for the run manifest.
class Timings {
public:
  void start(const std::string& phase);
  void stop();
  nlohmann::json to_json() const;

private:
  std::vector<std::pair<std::string, double>> done_;
  std::string current_;
  std::chrono::steady_clock::time_point begin_;
  bool running_ = false;
};

}  // namespace cli
