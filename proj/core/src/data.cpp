#include "ginimds/data.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "ginimds/rng.hpp"

namespace ginimds {

namespace {

std::vector<std::string> split_csv_line(const std::string& line, long row_number) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", row_number, static_cast<long>(fields.size()) + 1);
  fields.push_back(std::move(field));
  return fields;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_cell(const std::string& raw, long row, long col) {
  const std::string cell = trim(raw);
  if (cell.empty()) throw ParseError("empty cell", row, col);
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size() || errno == ERANGE) {
    throw ParseError("cannot parse '" + cell + "' as a number", row, col);
  }
  if (!std::isfinite(value)) {
    throw ParseError("non-finite value '" + cell + "'", row, col);
  }
  return value;
}

Vector column_std(const Matrix& X) {
  const Eigen::Index n = X.rows();
  Vector sigma(X.cols());
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    const double mean = X.col(j).mean();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = X(i, j) - mean;
      acc += d * d;
    }
    sigma(j) = std::sqrt(acc / static_cast<double>(n));  // population std
  }
  return sigma;
}

double column_median(const Matrix& X, Eigen::Index j) {
  std::vector<double> v(X.col(j).data(), X.col(j).data() + X.rows());
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size();
  return (m % 2 == 1) ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

}  // namespace

const char* to_string(Standardization s) {
  switch (s) {
    case Standardization::none: return "none";
    case Standardization::mean_unit: return "mean_unit";
    case Standardization::median_unit: return "median_unit";
  }
  return "?";
}

const char* to_string(ContaminationMode m) {
  switch (m) {
    case ContaminationMode::multiply_by_factor_sigma: return "multiply_by_factor_sigma";
    case ContaminationMode::add_factor_sigma: return "add_factor_sigma";
  }
  return "?";
}

Dataset load_csv(const std::filesystem::path& path, bool has_header,
                 const std::optional<LabelColumn>& label_column) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("load_csv: cannot open '" + path.string() + "'");

  std::vector<std::vector<std::string>> rows;
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && rows.empty() && !has_header) continue;  // leading blank lines
    if (line.empty()) continue;
    rows.push_back(split_csv_line(line, line_number));
  }
  if (rows.empty()) throw ParseError("empty file", 1, 1);

  std::vector<std::string> header;
  if (has_header) {
    header = rows.front();
    rows.erase(rows.begin());
    if (rows.empty()) throw ParseError("no data rows after header", 2, 1);
  }

  const std::size_t columns = has_header ? header.size() : rows.front().size();
  const long first_data_row = has_header ? 2 : 1;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != columns) {
      throw ParseError("ragged row: expected " + std::to_string(columns) + " fields, found " +
                           std::to_string(rows[r].size()),
                       first_data_row + static_cast<long>(r), static_cast<long>(rows[r].size()));
    }
  }

  int label_index = -1;
  if (label_column.has_value()) {
    if (std::holds_alternative<int>(*label_column)) {
      label_index = std::get<int>(*label_column);
      if (label_index < 0 || static_cast<std::size_t>(label_index) >= columns) {
        throw InvalidConfig("load_csv: label column index out of range");
      }
    } else {
      const std::string& name = std::get<std::string>(*label_column);
      if (!has_header) throw InvalidConfig("load_csv: label column by name requires a header");
      for (std::size_t c = 0; c < header.size(); ++c) {
        if (trim(header[c]) == name) {
          label_index = static_cast<int>(c);
          break;
        }
      }
      if (label_index < 0) throw InvalidConfig("load_csv: no header column named '" + name + "'");
    }
  }

  const std::size_t feature_count = columns - (label_index >= 0 ? 1 : 0);
  if (feature_count == 0) throw InvalidConfig("load_csv: no feature columns left");

  Dataset ds;
  ds.X.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(feature_count));
  std::vector<int> labels;
  std::map<std::string, int> label_codes;  // first-appearance order via running counter
  std::vector<std::string> label_order;

  for (std::size_t r = 0; r < rows.size(); ++r) {
    const long row_number = first_data_row + static_cast<long>(r);
    Eigen::Index feature = 0;
    for (std::size_t c = 0; c < columns; ++c) {
      if (static_cast<int>(c) == label_index) {
        const std::string cell = trim(rows[r][c]);
        if (cell.empty()) throw ParseError("empty label", row_number, static_cast<long>(c) + 1);
        auto it = label_codes.find(cell);
        if (it == label_codes.end()) {
          it = label_codes.emplace(cell, static_cast<int>(label_order.size())).first;
          label_order.push_back(cell);
        }
        labels.push_back(it->second);
      } else {
        ds.X(static_cast<Eigen::Index>(r), feature++) =
            parse_cell(rows[r][c], row_number, static_cast<long>(c) + 1);
      }
    }
  }

  if (label_index >= 0) ds.labels = std::move(labels);
  if (has_header) {
    std::vector<std::string> names;
    for (std::size_t c = 0; c < columns; ++c) {
      if (static_cast<int>(c) != label_index) names.push_back(trim(header[c]));
    }
    ds.feature_names = std::move(names);
  }
  return ds;
}

void write_csv(const Dataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("write_csv: cannot open '" + path.string() + "' for writing");

  const bool with_labels = ds.labels.has_value();
  if (ds.feature_names.has_value()) {
    for (int j = 0; j < ds.dim(); ++j) {
      if (j > 0) out << ',';
      out << (*ds.feature_names)[static_cast<std::size_t>(j)];
    }
    if (with_labels) out << ",label";
    out << '\n';
  }

  char buf[64];
  for (int i = 0; i < ds.n(); ++i) {
    for (int j = 0; j < ds.dim(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", ds.X(i, j));
      if (j > 0) out << ',';
      out << buf;
    }
    if (with_labels) out << ',' << (*ds.labels)[static_cast<std::size_t>(i)];
    out << '\n';
  }
  if (!out) throw InvalidInput("write_csv: write failed for '" + path.string() + "'");
}

Dataset standardize(const Dataset& ds, Standardization mode, bool allow_zero_scale) {
  if (mode == Standardization::none) {
    Dataset out = ds;
    out.standardization = Standardization::none;
    return out;
  }
  const int d = ds.dim();
  if (ds.n() < 1 || d < 1) throw InvalidInput("standardize: empty dataset");

  Dataset out = ds;
  out.centers.resize(d);
  out.scales.resize(d);
  const Vector sigma = column_std(ds.X);
  for (int j = 0; j < d; ++j) {
    if (sigma(j) <= 0.0 && !allow_zero_scale) {
      const std::string name = ds.feature_names.has_value()
                                   ? (*ds.feature_names)[static_cast<std::size_t>(j)]
                                   : std::to_string(j);
      throw DegenerateInput("standardize: feature '" + name + "' has zero variance");
    }
    out.centers(j) = (mode == Standardization::mean_unit) ? ds.X.col(j).mean()
                                                          : column_median(ds.X, j);
    out.scales(j) = sigma(j) > 0.0 ? sigma(j) : 1.0;
    for (int i = 0; i < ds.n(); ++i) {
      out.X(i, j) = (ds.X(i, j) - out.centers(j)) / out.scales(j);
    }
  }
  out.standardization = mode;
  return out;
}

Contaminated contaminate(const Dataset& ds, const ContaminationSpec& spec) {
  if (spec.fraction < 0.0 || spec.fraction > 1.0) {
    throw InvalidConfig("contaminate: fraction must lie in [0, 1]");
  }
  const int n = ds.n();
  const int count = static_cast<int>(std::lround(spec.fraction * n));

  Contaminated out;
  out.data = ds;
  if (count == 0) return out;

  std::vector<int> indices(static_cast<std::size_t>(n));
  std::iota(indices.begin(), indices.end(), 0);
  Rng rng(spec.seed);
  // Partial Fisher-Yates: the first `count` slots are a uniform draw
  // without replacement.
  for (int i = 0; i < count; ++i) {
    const int j = i + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - i)));
    std::swap(indices[static_cast<std::size_t>(i)], indices[static_cast<std::size_t>(j)]);
  }
  out.rows.assign(indices.begin(), indices.begin() + count);
  std::sort(out.rows.begin(), out.rows.end());

  const Vector sigma = column_std(ds.X);
  for (const int i : out.rows) {
    for (int j = 0; j < ds.dim(); ++j) {
      if (spec.mode == ContaminationMode::multiply_by_factor_sigma) {
        out.data.X(i, j) = ds.X(i, j) * (spec.factor * sigma(j));
      } else {
        out.data.X(i, j) = ds.X(i, j) + spec.factor * sigma(j);
      }
    }
  }
  return out;
}

std::vector<FeatureKind> SimSpec::default_recipe() {
  return {FeatureKind::gaussian_with_outliers, FeatureKind::cauchy, FeatureKind::weibull_half,
          FeatureKind::pareto_two,             FeatureKind::student_t_two,
          FeatureKind::log_normal};
}

Dataset gen_heavy_tailed(const SimSpec& spec) {
  const int n = spec.n;
  const int d = static_cast<int>(spec.recipe.size());
  if (n < 2) throw InvalidConfig("gen_heavy_tailed: need n >= 2");
  if (d < 1) throw InvalidConfig("gen_heavy_tailed: empty recipe");

  Dataset ds;
  ds.X.resize(n, d);
  for (int j = 0; j < d; ++j) {
    Rng rng(mix_seed(spec.seed, static_cast<std::uint64_t>(j)));
    switch (spec.recipe[static_cast<std::size_t>(j)]) {
      case FeatureKind::gaussian_with_outliers: {
        for (int i = 0; i < n; ++i) ds.X(i, j) = rng.normal();
        // Exactly round(5% of n) entries redrawn at sigma = 10, positions
        // from a separate substream.
        const int outliers = static_cast<int>(std::lround(0.05 * n));
        Rng pos_rng(mix_seed(spec.seed, static_cast<std::uint64_t>(d + j)));
        std::vector<int> idx(static_cast<std::size_t>(n));
        std::iota(idx.begin(), idx.end(), 0);
        for (int i = 0; i < outliers; ++i) {
          const int k = i + static_cast<int>(pos_rng.uniform_below(static_cast<std::uint64_t>(n - i)));
          std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(k)]);
          ds.X(idx[static_cast<std::size_t>(i)], j) = 10.0 * rng.normal();
        }
        break;
      }
      case FeatureKind::cauchy:
        for (int i = 0; i < n; ++i) ds.X(i, j) = rng.cauchy();
        break;
      case FeatureKind::weibull_half:
        for (int i = 0; i < n; ++i) ds.X(i, j) = rng.weibull(0.5);
        break;
      case FeatureKind::pareto_two:
        for (int i = 0; i < n; ++i) ds.X(i, j) = rng.pareto(2.0);
        break;
      case FeatureKind::student_t_two:
        for (int i = 0; i < n; ++i) ds.X(i, j) = rng.student_t2();
        break;
      case FeatureKind::log_normal:
        for (int i = 0; i < n; ++i) ds.X(i, j) = rng.log_normal(1.5);
        break;
    }
  }

  const double median = column_median(ds.X, 0);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = ds.X(i, 0) > median ? 1 : 0;
  ds.labels = std::move(labels);
  return ds;
}

}  // namespace ginimds
