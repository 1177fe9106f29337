#include "mjue/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mjue/asymptotics.hpp"
#include "mjue/errors.hpp"
#include "mjue/fredholm.hpp"
#include "mjue/kernels.hpp"

namespace mjue {
namespace {

constexpr double kNodeExclusion = 0.02;
constexpr double kRatioTarget = 0.5;
constexpr double kRatioBand = 0.15;
constexpr int kBulkSamples = 1801;
constexpr double kPhaseFloor = 0.2;

// One table for the largest n serves every smaller n.
RecurrenceTable shared_table(const ModifiedJacobiWeight& w, const std::vector<int>& ns) {
  return recurrence_table(w, ns.back() + 1);
}

// Near a zero of sin(pi d)/(pi d), i.e. d close to a nonzero integer.
bool near_sine_node(double d) {
  const double k = std::round(d);
  return k != 0.0 && std::abs(d - k) < kNodeExclusion;
}

}  // namespace

RateFit fit_convergence_rate(std::span<const std::pair<double, double>> errors) {
  if (errors.size() < 2) throw DomainError("fit_convergence_rate: need at least two points");
  double sx = 0.0;
  double sy = 0.0;
  for (const auto& [n, e] : errors) {
    if (!(n > 0.0)) throw DomainError("fit_convergence_rate: n must be positive");
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw DomainError("fit_convergence_rate: errors must be positive and finite");
    }
    sx += std::log(n);
    sy += std::log(e);
  }
  const double k = static_cast<double>(errors.size());
  const double mx = sx / k;
  const double my = sy / k;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [n, e] : errors) {
    const double dx = std::log(n) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(e) - my);
  }
  if (sxx == 0.0) throw DomainError("fit_convergence_rate: all n are equal");
  const double slope = sxy / sxx;
  RateFit fit;
  fit.order = -slope;
  fit.constant = std::exp(my - slope * mx);
  double rss = 0.0;
  for (const auto& [n, e] : errors) {
    const double r = std::log(e) - (my + slope * (std::log(n) - mx));
    rss += r * r;
  }
  fit.residual = std::sqrt(rss / k);
  return fit;
}

ConvergenceReport make_report(StudyKind study, std::vector<ConvergenceSample> samples,
                              double band, double expected_order) {
  ConvergenceReport report;
  report.study = study;
  report.samples = std::move(samples);
  report.band = band;
  report.expected_order = expected_order;
  if (report.samples.size() < 2) {
    report.pass = true;
    return report;
  }
  std::vector<std::pair<double, double>> pts;
  for (const auto& s : report.samples) pts.emplace_back(s.n, s.fit_err);
  report.fit = fit_convergence_rate(pts);
  report.pass = std::abs(report.fit.order - expected_order) <= band;
  return report;
}

ConvergenceReport run_density_study(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<int> ns = cfg.n_values();
  const std::vector<double> grid = cfg.grid_points();
  std::vector<ConvergenceSample> samples;
  if (!ns.empty() && !grid.empty()) {
    const ModifiedJacobiWeight w = cfg.weight.build();
    const RecurrenceTable table = shared_table(w, ns);
    for (int n : ns) {
      const KernelContext ctx(w, table, n);
      ConvergenceSample s{n, -1.0, 0.0, 0.0};
      for (double x : grid) {
        const double target = arcsine_density(x);
        const double e = std::abs(kernel_cd(ctx, x, x) / n - target);
        if (e > s.max_err) {
          s.max_err = e;
          s.target = target;
        }
      }
      s.fit_err = s.max_err;
      samples.push_back(s);
    }
  }
  return make_report(StudyKind::density, std::move(samples), cfg.tol);
}

ConvergenceReport run_bulk_study(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<int> ns = cfg.n_values();
  const std::vector<double> grid = cfg.grid_points();
  std::vector<ConvergenceSample> samples;
  if (!ns.empty() && !grid.empty()) {
    const ModifiedJacobiWeight w = cfg.weight.build();
    const RecurrenceTable table = shared_table(w, ns);
    for (int n : ns) {
      const KernelContext ctx(w, table, n);
      ConvergenceSample s{n, -1.0, 0.0, 0.0};
      for (double u : grid) {
        for (double v : grid) {
          const double target = sine_kernel(u, v);
          double e = 0.0;
          try {
            e = std::abs(scaled_bulk(ctx, cfg.x, u, v) - target);
          } catch (const DomainError& err) {
            throw ConfigError(err.what());
          }
          if (e > s.max_err) {
            s.max_err = e;
            s.target = target;
          }
          if (!near_sine_node(u - v)) s.fit_err = std::max(s.fit_err, e);
        }
      }
      samples.push_back(s);
    }
  }
  return make_report(StudyKind::bulk, std::move(samples), cfg.tol);
}

ConvergenceReport run_edge_study(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<int> ns = cfg.n_values();
  const std::vector<double> grid = cfg.grid_points();
  std::vector<ConvergenceSample> samples;
  if (!ns.empty() && !grid.empty()) {
    const ModifiedJacobiWeight w = cfg.weight.build();
    const double alpha = w.alpha();
    const RecurrenceTable table = shared_table(w, ns);
    const Matrix limit = bessel_kernel_reduced_matrix(alpha, grid);
    for (int n : ns) {
      const KernelContext ctx(w, table, n);
      const Matrix finite = scaled_edge_reduced_matrix(ctx, grid);
      ConvergenceSample s{n, -1.0, 0.0, 0.0};
      for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < grid.size(); ++j) {
          const double e = std::abs(finite(i, j) - limit(i, j));
          if (!std::isfinite(e)) throw NumericalError("edge study: non-finite kernel value");
          if (e > s.max_err) {
            s.max_err = e;
            s.target = std::pow(grid[i] * grid[j], 0.5 * alpha) * limit(i, j);
          }
        }
      }
      s.fit_err = s.max_err;
      samples.push_back(s);
    }
  }
  return make_report(StudyKind::edge, std::move(samples), cfg.tol);
}

GapReport run_gap_study(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<int> ns = cfg.n_values();
  GapReport report;
  if (ns.empty()) return report;
  const ModifiedJacobiWeight w = cfg.weight.build();
  const RecurrenceTable table = shared_table(w, ns);
  std::vector<KernelContext> contexts;
  contexts.reserve(ns.size());
  for (int n : ns) contexts.emplace_back(w, table, n);

  for (double s : cfg.s_values()) {
    const double limit = bessel_gap_probability(w.alpha(), s, cfg.m);
    double prev = 0.0;
    for (std::size_t k = 0; k < ns.size(); ++k) {
      GapRow row;
      row.s = s;
      row.n = ns[k];
      row.p_finite = finite_gap_probability(contexts[k], s, cfg.m);
      row.p_limit = limit;
      row.abs_diff = std::abs(row.p_finite - limit);
      if (k > 0 && !(row.abs_diff < prev)) report.monotone = false;
      prev = row.abs_diff;
      report.rows.push_back(row);
    }
  }
  return report;
}

AsymptoticsReport run_asymptotics_study(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<int> ns = cfg.n_values();
  const std::vector<double> us = cfg.grid_points();
  AsymptoticsReport report;
  if (ns.empty()) {
    report.pass = true;
    return report;
  }
  const ModifiedJacobiWeight w = cfg.weight.build();
  const SzegoData data = SzegoData::from_weight(w);
  const RecurrenceTable table = shared_table(w, ns);
  const double lo = -1.0 + kRegionDelta;
  const double step = 2.0 * (1.0 - kRegionDelta) / (kBulkSamples - 1);

  for (int n : ns) {
    AsymptoticsRow row;
    row.n = n;
    for (int i = 0; i < kBulkSamples; ++i) {
      const double x = i + 1 == kBulkSamples ? 1.0 - kRegionDelta : lo + i * step;
      const double phase =
          (n + 0.5) * std::acos(x) + psi_phase(data, x) - 0.25 * std::numbers::pi;
      const double c = std::cos(phase);
      if (std::abs(c) <= kPhaseFloor) continue;
      const double leading = bulk_pi_asymptotic_scaled(data, n, x);
      const double envelope = std::abs(leading / c);
      row.bulk_err = std::max(row.bulk_err,
                              std::abs(scaled_monic_value(table, n, x) - leading) / envelope);
    }
    for (double u : us) {
      const double x = 1.0 - u / (2.0 * n * n);
      const double exact = scaled_monic_value(table, n, x);
      const double leading = edge_pi_asymptotic_scaled(data, n, x);
      row.edge_err = std::max(row.edge_err, std::abs(exact - leading) / std::abs(exact));
    }
    report.rows.push_back(row);
  }

  report.pass = true;
  for (std::size_t k = 1; k < report.rows.size(); ++k) {
    const double rb = report.rows[k].bulk_err / report.rows[k - 1].bulk_err;
    const double re = report.rows[k].edge_err / report.rows[k - 1].edge_err;
    report.bulk_ratios.push_back(rb);
    report.edge_ratios.push_back(re);
    for (double r : {rb, re}) {
      if (!(std::abs(r - kRatioTarget) <= kRatioBand)) report.pass = false;
    }
  }
  return report;
}

RecurrenceTable run_recurrence_study(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::vector<int> ns = cfg.n_values();
  if (ns.empty()) return RecurrenceTable{};
  return recurrence_table(cfg.weight.build(), ns.back() + 1);
}

}  // namespace mjue
