#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ginimds/metrics.hpp"

namespace ginimds {

enum class Standardization { none, mean_unit, median_unit };

const char* to_string(Standardization s);

/// Numeric feature matrix with optional integer labels and the
/// centers/scales applied by standardize (kept for inversion).
struct Dataset {
  Matrix X;
  std::optional<std::vector<int>> labels;
  std::optional<std::vector<std::string>> feature_names;
  Standardization standardization = Standardization::none;
  Vector centers;  // empty unless standardized
  Vector scales;

  int n() const noexcept { return static_cast<int>(X.rows()); }
  int dim() const noexcept { return static_cast<int>(X.cols()); }
};

/// Label column selector: 0-based index or header name.
using LabelColumn = std::variant<int, std::string>;

/// Reads a rectangular numeric CSV (RFC 4180 subset: UTF-8, comma separator,
/// '.' decimal, LF or CRLF, optional quoting). The label column may hold
/// integers or arbitrary strings; labels are factorized to 0..C-1 in order
/// of first appearance. Throws ParseError with the 1-based cell location on
/// ragged rows, non-numeric or non-finite feature cells, or an empty file.
Dataset load_csv(const std::filesystem::path& path, bool has_header,
                 const std::optional<LabelColumn>& label_column = {});

/// Writes features (and labels, as a final "label" column) with 17
/// significant digits, so load_csv(write_csv(ds)) round-trips bit-exactly.
/// A header row is written when feature names are present.
void write_csv(const Dataset& ds, const std::filesystem::path& path);

/// Subtracts the per-feature mean or median and divides by the per-feature
/// population standard deviation. A zero-variance feature raises
/// DegenerateInput naming the feature unless allow_zero_scale is set (the
/// feature is then centered only).
Dataset standardize(const Dataset& ds, Standardization mode, bool allow_zero_scale = false);

enum class ContaminationMode {
  multiply_by_factor_sigma,  // x <- x * (factor * sigma_j)
  add_factor_sigma,          // x <- x + factor * sigma_j
};

const char* to_string(ContaminationMode m);

struct ContaminationSpec {
  double fraction = 0.0;  // in [0, 1]
  double factor = 10.0;
  std::uint64_t seed = 0;
  ContaminationMode mode = ContaminationMode::multiply_by_factor_sigma;
};

struct Contaminated {
  Dataset data;
  std::vector<int> rows;  // ascending indices of altered rows
};

/// Draws round(fraction * n) rows without replacement (seeded) and rescales
/// every feature of each drawn row by factor times that feature's
/// pre-contamination population standard deviation.
Contaminated contaminate(const Dataset& ds, const ContaminationSpec& spec);

/// Column generators for the heavy-tailed simulation.
enum class FeatureKind {
  gaussian_with_outliers,  // N(0,1), 5% of entries redrawn from N(0, 10^2)
  cauchy,                  // C(0,1)
  weibull_half,            // Weibull, shape 0.5, scale 1
  pareto_two,              // Pareto, shape 2, minimum 1
  student_t_two,           // Student-t, 2 dof
  log_normal,              // log-N(0, 1.5^2)
};

struct SimSpec {
  int n = 500;
  std::uint64_t seed = 0;
  std::vector<FeatureKind> recipe = default_recipe();

  /// The six generators above, in order.
  static std::vector<FeatureKind> default_recipe();
};

/// Generates an n x d matrix with one independent heavy-tailed sample per
/// column (column j uses the RNG substream mix_seed(seed, j); the outlier
/// positions of a gaussian_with_outliers column use mix_seed(seed, d + j)).
/// Binary labels indicate rows whose first feature exceeds its median.
Dataset gen_heavy_tailed(const SimSpec& spec);

}  // namespace ginimds
