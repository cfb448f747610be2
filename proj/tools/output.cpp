#include "output.hpp"

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cli {

namespace fs = std::filesystem;

void atomic_write(const fs::path& path, const std::string& content) {
  const fs::path dir = path.parent_path().empty() ? fs::path(".") : path.parent_path();
  fs::create_directories(dir);
  const fs::path tmp = dir / (".tmp-" + path.filename().string() + "-" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw ginimds::InvalidInput("cannot write '" + tmp.string() + "'");
  }
  fs::rename(tmp, path);
}

std::string coords_csv(const ginimds::Matrix& coords) {
  std::ostringstream out;
  for (Eigen::Index j = 0; j < coords.cols(); ++j) {
    if (j > 0) out << ',';
    out << 'c' << (j + 1);
  }
  out << '\n';
  char buf[64];
  for (Eigen::Index i = 0; i < coords.rows(); ++i) {
    for (Eigen::Index j = 0; j < coords.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", coords(i, j));
      if (j > 0) out << ',';
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

std::string scatter_svg(const ginimds::Matrix& coords, const std::vector<int>* labels) {
  static const char* kPalette[] = {"#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee",
                                   "#aa3377", "#bbbbbb", "#000000", "#e79f00", "#009e73"};
  constexpr int width = 640, height = 480, margin = 40;

  const Eigen::Index n = coords.rows();
  const bool two_d = coords.cols() >= 2;
  double xmin = coords.col(0).minCoeff(), xmax = coords.col(0).maxCoeff();
  double ymin = two_d ? coords.col(1).minCoeff() : -1.0;
  double ymax = two_d ? coords.col(1).maxCoeff() : 1.0;
  if (xmax - xmin < 1e-12) xmax = xmin + 1.0;
  if (ymax - ymin < 1e-12) ymax = ymin + 1.0;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  char buf[160];
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = coords(i, 0);
    const double y = two_d ? coords(i, 1) : 0.0;
    const double cx = margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin);
    const double cy = height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin);
    const char* color =
        labels ? kPalette[static_cast<std::size_t>((*labels)[static_cast<std::size_t>(i)] % 10)]
               : kPalette[0];
    std::snprintf(buf, sizeof(buf),
                  "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"%s\" fill-opacity=\"0.8\"/>\n",
                  cx, cy, color);
    out << buf;
  }
  out << "</svg>\n";
  return out.str();
}

void Timings::start(const std::string& phase) {
  stop();
  current_ = phase;
  begin_ = std::chrono::steady_clock::now();
  running_ = true;
}

void Timings::stop() {
  if (!running_) return;
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - begin_).count();
  done_.emplace_back(current_, seconds);
  running_ = false;
}

nlohmann::json Timings::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  double total = 0.0;
  for (const auto& [name, seconds] : done_) {
    j[name + "_s"] = seconds;
    total += seconds;
  }
  j["total_s"] = total;
  return j;
}

}  // namespace cli
