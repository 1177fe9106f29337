#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "mjue/orthopoly.hpp"

namespace mjue {

enum class StudyKind { density, bulk, edge, gap, recurrence, asymptotics };

std::string to_string(StudyKind kind);
StudyKind parse_study_kind(const std::string& name);

/// `count` equally spaced points from lo to hi inclusive.
struct Linspace {
  double lo = 0.0;
  double hi = 1.0;
  int count = 2;
  friend bool operator==(const Linspace&, const Linspace&) = default;
};

/// Evaluation grid given either as "lo:hi:count" or as an explicit list.
struct GridSpec {
  std::variant<Linspace, std::vector<double>> spec;

  std::vector<double> points() const;
  /// Parses "lo:hi:count" or a comma separated list.
  static GridSpec parse(const std::string& text);
  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct WeightSpec {
  double alpha = 0.0;
  double beta = 0.0;
  /// Builtin preset name or "@path" to a Chebyshev series JSON file.
  std::string h = "one";

  ModifiedJacobiWeight build() const;
  friend bool operator==(const WeightSpec&, const WeightSpec&) = default;
};

struct ExperimentConfig {
  StudyKind study = StudyKind::density;
  WeightSpec weight;
  std::optional<std::vector<int>> n;     // absent: study default
  std::optional<GridSpec> grid;          // absent: study default
  std::optional<std::vector<double>> s;  // gap sizes; absent: default
  int m = 64;                       // initial Nystrom size
  double x = 0.3;                   // bulk centre
  std::string out;                  // CSV path; empty: no file
  double tol = 0.3;                 // acceptance band half-width on the fitted order

  /// n list, grid and s list with study defaults filled in.
  std::vector<int> n_values() const;
  std::vector<double> grid_points() const;
  std::vector<double> s_values() const;

  /// Throws ConfigError on a non-increasing n list, n < 2, or a grid
  /// outside the admissible domain of the study. An explicitly empty n list
  /// is an empty study.
  void validate() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig read_config(const std::string& path);

struct RateFit {
  double order = 0.0;     // p in e = C n^{-p}
  double constant = 0.0;  // C
  double residual = 0.0;  // RMS residual of the log-log fit
};

/// Least squares on log e = log C - p log n. Needs at least two points, all
/// errors positive.
RateFit fit_convergence_rate(std::span<const std::pair<double, double>> errors);

struct ConvergenceSample {
  int n = 0;
  double max_err = 0.0;  // over the full grid
  double fit_err = 0.0;  // over the grid with oscillation nodes removed
  double target = 0.0;   // limiting value at the point of max_err
};

struct ConvergenceReport {
  StudyKind study = StudyKind::density;
  std::vector<ConvergenceSample> samples;
  RateFit fit;
  double expected_order = 1.0;
  double band = 0.3;
  bool pass = false;
};

/// Builds the report from samples: fits fit_err against n and checks
/// |p - expected| <= band. With fewer than two samples no fit is made and the
/// report passes vacuously.
ConvergenceReport make_report(StudyKind study, std::vector<ConvergenceSample> samples,
                              double band, double expected_order = 1.0);

/// max over the grid of |K_n(x,x)/n - xi(x)|.
ConvergenceReport run_density_study(const ExperimentConfig& cfg);
/// max over the (u,v) grid of |scaled_bulk - sine kernel|; points with u-v
/// within 0.02 of a nonzero integer are left out of the fit.
ConvergenceReport run_bulk_study(const ExperimentConfig& cfg);
/// max over the (u,v) grid of |D_n(u,v) - J_alpha(u,v)| / (uv)^{alpha/2}.
ConvergenceReport run_edge_study(const ExperimentConfig& cfg);

struct GapRow {
  double s = 0.0;
  int n = 0;
  double p_finite = 0.0;
  double p_limit = 0.0;
  double abs_diff = 0.0;
};

struct GapReport {
  std::vector<GapRow> rows;  // ordered by s, then n
  /// |finite - limit| strictly decreasing in n for every s.
  bool monotone = true;
};

GapReport run_gap_study(const ExperimentConfig& cfg);

struct AsymptoticsRow {
  int n = 0;
  double bulk_err = 0.0;  // max over x of |exact - leading| / envelope
  double edge_err = 0.0;  // max over u of |exact - leading| / |exact|
};

struct AsymptoticsReport {
  std::vector<AsymptoticsRow> rows;
  std::vector<double> bulk_ratios;  // err(2n)/err(n) for consecutive rows
  std::vector<double> edge_ratios;
  bool pass = false;  // every ratio within 0.5 +- 0.15
};

/// Leading-order formulas for 2^n pi_n against exact orthopoly values. The
/// bulk error is sampled on 1801 points of [-0.9, 0.9] where |cos phase| > 0.2
/// and normalized by the amplitude of the formula; the edge error is relative
/// at x = 1 - u/(2n^2) for u on the configured grid.
AsymptoticsReport run_asymptotics_study(const ExperimentConfig& cfg);

/// The recurrence table with N = largest n + 1.
RecurrenceTable run_recurrence_study(const ExperimentConfig& cfg);

/// Shortest decimal that reads back to the same double.
std::string format_number(double v);

void emit_csv(const ConvergenceReport& report, const std::string& path);
void emit_csv(const GapReport& report, const std::string& path);
void emit_csv(const AsymptoticsReport& report, const std::string& path);
void emit_csv(const RecurrenceTable& table, const std::string& path);

std::string to_csv(const ConvergenceReport& report);
std::string to_csv(const GapReport& report);
std::string to_csv(const AsymptoticsReport& report);
std::string to_csv(const RecurrenceTable& table);

}  // namespace mjue
