// Acceptance suite: one line per criterion with the measured quantity, the
// threshold and the wall time. Pass criterion numbers to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "mjue/asymptotics.hpp"
#include "mjue/fredholm.hpp"
#include "mjue/harness.hpp"
#include "mjue/kernels.hpp"
#include "mjue/quadrature.hpp"
#include "mjue/special_functions.hpp"
#include "pv_oracle.hpp"

using namespace mjue;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct TestWeight {
  double alpha;
  double beta;
  const char* h;
};

constexpr TestWeight kWeights[] = {{0.0, 0.0, "one"}, {0.3, -0.4, "exp"}, {-0.5, -0.5, "runge"}};

ModifiedJacobiWeight make(const TestWeight& t) {
  return ModifiedJacobiWeight(t.alpha, t.beta, builtin_h(t.h));
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = lo + (hi - lo) * i / (count - 1);
  return out;
}

// Gauss-Jacobi rule for the singular part with h folded into the weights.
QuadratureRule weight_rule(const ModifiedJacobiWeight& w, int m) {
  QuadratureRule r = gauss_jacobi_rule(m, w.alpha(), w.beta());
  for (std::size_t i = 0; i < r.size(); ++i) r.weights[i] *= w.h()(r.nodes[i]);
  return r;
}

// 1. |int p_j p_k w - delta_jk| <= 1e-10 for j, k <= 40.
Outcome orthonormality() {
  double worst = 0.0;
  for (const auto& tw : kWeights) {
    const ModifiedJacobiWeight w = make(tw);
    const RecurrenceTable table = recurrence_table(w, 41);
    const QuadratureRule r = weight_rule(w, 257);
    std::vector<std::vector<double>> p(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) p[i] = eval_orthonormal(table, 40, r.nodes[i]).values;
    for (int j = 0; j <= 40; ++j) {
      for (int k = 0; k <= j; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) s += r.weights[i] * p[i][j] * p[i][k];
        worst = std::max(worst, std::abs(s - (j == k ? 1.0 : 0.0)));
      }
    }
  }
  return {worst <= 1e-10, fmt("max |<p_j,p_k> - delta_jk| = %.2e (limit 1e-10)", worst)};
}

// 2. CD form vs sum, trace, reproducing property.
Outcome kernel_identities() {
  const std::vector<double> grid = {-0.9, -0.6, -0.3, 0.0, 0.3, 0.6, 0.9};
  double cd = 0.0;
  double tr = 0.0;
  double rep = 0.0;
  for (const auto& tw : kWeights) {
    const ModifiedJacobiWeight w = make(tw);
    for (int n : {5, 20, 100}) {
      const KernelContext ctx(w, n);
      // Off-diagonal values are measured against sqrt(K(x,x) K(y,y)), which
      // bounds |K(x,y)| and stays away from the zeros of the kernel.
      std::vector<double> diag(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) diag[i] = kernel_sum(ctx, grid[i], grid[i]);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < grid.size(); ++j) {
          const double scale = std::sqrt(diag[i] * diag[j]);
          cd = std::max(cd, std::abs(kernel_cd(ctx, grid[i], grid[j]) -
                                     kernel_sum(ctx, grid[i], grid[j])) / scale);
        }
      }

      const QuadratureRule r = weight_rule(w, n + 64);
      std::vector<std::vector<double>> p(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) p[i] = eval_orthonormal(ctx.table(), n - 1, r.nodes[i]).values;
      double trace = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += p[i][k] * p[i][k];
        trace += r.weights[i] * s;
      }
      tr = std::max(tr, std::abs(trace - n) / n);

      // int K(x,t) K(t,y) dt with the weight carried by the rule
      for (std::size_t a = 0; a < grid.size(); a += 2) {
        for (std::size_t b = 1; b < grid.size(); b += 2) {
          const double x = grid[a];
          const double y = grid[b];
          const auto px = eval_orthonormal(ctx.table(), n - 1, x).values;
          const auto py = eval_orthonormal(ctx.table(), n - 1, y).values;
          double integral = 0.0;
          for (std::size_t i = 0; i < r.size(); ++i) {
            double sx = 0.0;
            double sy = 0.0;
            for (int k = 0; k < n; ++k) {
              sx += px[k] * p[i][k];
              sy += py[k] * p[i][k];
            }
            integral += r.weights[i] * sx * sy;
          }
          integral *= std::sqrt(weight_eval(w, x) * weight_eval(w, y));
          const double scale = std::sqrt(diag[a] * diag[b]);
          rep = std::max(rep, std::abs(integral - kernel_cd(ctx, x, y)) / scale);
        }
      }
    }
  }
  const bool pass = cd <= 1e-10 && tr <= 1e-9 && rep <= 1e-8;
  return {pass, fmt("CD vs sum %.2e (1e-10), trace %.2e (1e-9), reproducing %.2e (1e-8)", cd, tr, rep)};
}

// 3. Density study.
Outcome density_rate() {
  ExperimentConfig cfg;
  cfg.study = StudyKind::density;
  cfg.n = std::vector<int>{50, 100, 200, 400};
  cfg.grid = GridSpec{std::vector<double>{-0.8, 0.0, 0.5}};
  const ConvergenceReport r = run_density_study(cfg);

  ExperimentConfig origin = cfg;
  origin.grid = GridSpec{std::vector<double>{0.0}};
  const ConvergenceReport o = run_density_study(origin);
  bool monotone = true;
  for (std::size_t k = 1; k < o.samples.size(); ++k) {
    if (!(o.samples[k].max_err < o.samples[k - 1].max_err)) monotone = false;
  }
  const bool pass = r.pass && monotone;
  return {pass, fmt("p = %.3f over {-0.8,0,0.5} (band [0.7,1.3]); x=0: p = %.3f, monotone %s",
                    r.fit.order, o.fit.order) +
                    (monotone ? "yes" : "no")};
}

// 4. Bulk study.
Outcome bulk_rate() {
  ExperimentConfig cfg;
  cfg.study = StudyKind::bulk;
  cfg.weight = {0.3, -0.4, "exp"};
  cfg.x = 0.3;
  cfg.n = std::vector<int>{50, 100, 200, 400};
  cfg.grid = GridSpec{Linspace{-2.0, 2.0, 9}};
  const ConvergenceReport r = run_bulk_study(cfg);
  return {r.pass, fmt("p = %.3f after node exclusion (band [0.7,1.3])", r.fit.order)};
}

// 5. Edge study for six weights, plus the uniform bound on the reduced kernel.
Outcome edge_rate() {
  double p_lo = 1e300;
  double p_hi = -1e300;
  double bound_ratio = 0.0;
  double bound_spread = 0.0;
  bool decreasing = true;
  const std::vector<double> probe = {1e-3, 1e-2, 0.1, 1.0, 5.0, 10.0};
  for (double a : {-0.5, 0.5, 2.0}) {
    for (auto [b, h] : {std::pair{0.0, "one"}, {-0.4, "exp"}}) {
      ExperimentConfig cfg;
      cfg.study = StudyKind::edge;
      cfg.weight = {a, b, h};
      cfg.n = std::vector<int>{50, 100, 200, 400};
      cfg.grid = GridSpec{Linspace{0.5, 10.0, 20}};
      const ConvergenceReport r = run_edge_study(cfg);
      p_lo = std::min(p_lo, r.fit.order);
      p_hi = std::max(p_hi, r.fit.order);
      for (std::size_t k = 1; k < r.samples.size(); ++k) {
        if (!(r.samples[k].max_err < r.samples[k - 1].max_err)) decreasing = false;
      }
      // sup |D_n| / (uv)^{alpha/2} on (0,10]^2 across n
      const ModifiedJacobiWeight w(a, b, builtin_h(h));
      const RecurrenceTable table = recurrence_table(w, 401);
      const Matrix lim = bessel_kernel_reduced_matrix(a, probe);
      double lim_sup = 0.0;
      for (std::size_t i = 0; i < probe.size(); ++i)
        for (std::size_t j = 0; j < probe.size(); ++j) lim_sup = std::max(lim_sup, std::abs(lim(i, j)));
      double lo = 1e300;
      double hi = 0.0;
      for (int n : {50, 100, 200, 400}) {
        const Matrix m = scaled_edge_reduced_matrix(KernelContext(w, table, n), probe);
        double sup = 0.0;
        for (std::size_t i = 0; i < probe.size(); ++i)
          for (std::size_t j = 0; j < probe.size(); ++j) sup = std::max(sup, std::abs(m(i, j)));
        lo = std::min(lo, sup);
        hi = std::max(hi, sup);
      }
      bound_spread = std::max(bound_spread, hi / lo - 1.0);
      bound_ratio = std::max(bound_ratio, hi / lim_sup);
    }
  }
  const bool pass = p_lo >= 0.7 && p_hi <= 1.3 && decreasing && bound_ratio <= 2.0;
  return {pass, fmt("p in [%.3f, %.3f] over 6 weights (band [0.7,1.3]); reduced sup <= %.3f x limit sup (2), "
                    "spread in n %.2e",
                    p_lo, p_hi, bound_ratio, bound_spread) +
                    (decreasing ? "; errors decreasing" : "; errors NOT decreasing")};
}

// 6. Gap probabilities.
Outcome gap_convergence() {
  ExperimentConfig cfg;
  cfg.study = StudyKind::gap;
  cfg.weight = {0.3, -0.4, "exp"};
  cfg.n = std::vector<int>{25, 50, 100, 200};
  cfg.s = std::vector<double>{0.5, 2.0, 8.0};
  const GapReport r = run_gap_study(cfg);

  double self = 0.0;
  const ReducedKernel k = bessel_reduced_kernel(0.3);
  for (double s : {0.5, 2.0, 8.0}) {
    self = std::max(self, std::abs(nystrom_matrix_determinant(k, 0.3, s, 64) -
                                   nystrom_matrix_determinant(k, 0.3, s, 128)));
  }
  const SeriesOracleResult series = fredholm_series_oracle(k, 0.3, 0.5, 6);
  const double cross = std::abs(series.value - bessel_gap_probability(0.3, 0.5));
  const bool pass = r.monotone && self <= 1e-8 && cross <= 1e-6 && series.converged;
  return {pass, std::string("differences strictly decreasing: ") + (r.monotone ? "yes" : "no") +
                    fmt("; m vs 2m %.2e (1e-8); series at s=0.5 %.2e (1e-6)", self, cross)};
}

// 7. Szego function and phase.
Outcome szego_phase() {
  const std::vector<double> grid = linspace(-0.95, 0.95, 21);
  double product = 0.0;
  double limit = 0.0;
  double pv = 0.0;
  double closed = 0.0;
  for (const auto& tw : kWeights) {
    const ModifiedJacobiWeight w = make(tw);
    const SzegoData d = SzegoData::from_weight(w);
    const std::string h = tw.h;
    auto logh = [&w](double t) { return std::log(w.h()(t)); };
    for (double x : grid) {
      const double wx = weight_eval(w, x);
      product = std::max(product, std::abs(szego_boundary(d, x, Side::above) *
                                           szego_boundary(d, x, Side::below) - wx) / wx);
      // D_+ D_- from exterior values extrapolated to the cut
      auto side = [&](double sgn) {
        auto at = [&](double e) { return szego_exterior(d, Complex(x, sgn * e)); };
        const Complex a1 = at(4e-5);
        const Complex a2 = at(2e-5);
        const Complex a3 = at(1e-5);
        return (8.0 * a3 - 6.0 * a2 + a1) / 3.0;
      };
      limit = std::max(limit, std::abs(side(1.0) * side(-1.0) - wx) / wx);

      const double th = std::acos(x);
      const double jac = 0.5 * (tw.alpha * (th - std::numbers::pi) + tw.beta * th);
      const double oracle_psi = jac + 0.5 * std::sqrt(1 - x * x) * oracle::pv_hilbert(logh, x);
      pv = std::max(pv, std::abs(psi_phase(d, x) - oracle_psi));
      if (h == "one") closed = std::max(closed, std::abs(psi_phase(d, x) - jac));
    }
  }
  // h = 1 Szego closed form (z-1)^{a/2} (z+1)^{b/2} / phi^{(a+b)/2}
  const SzegoData jd = SzegoData::from_weight(ModifiedJacobiWeight(0.3, -0.4, builtin_h("one")));
  for (Complex z : {Complex(2.0, 0.0), Complex(0.3, 0.4), Complex(-1.7, -0.2)}) {
    const Complex phi = z + std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
    const Complex ref = std::pow(z - 1.0, 0.15) * std::pow(z + 1.0, -0.2) * std::pow(phi, 0.05);
    closed = std::max(closed, std::abs(szego_exterior(jd, z) - ref) / std::abs(ref));
  }
  const bool pass = product <= 1e-9 && limit <= 1e-9 && pv <= 1e-7 && closed <= 1e-13;
  return {pass, fmt("D+D- = w %.2e, via exterior limit %.2e (1e-9); psi vs PV %.2e (1e-7); h=1 closed form %.2e (1e-13)",
                    product, limit, pv, closed)};
}

// 8. Leading-order asymptotics.
Outcome asymptotic_ratios() {
  std::string detail;
  bool pass = true;
  for (const auto& tw : {kWeights[0], kWeights[1]}) {
    ExperimentConfig cfg;
    cfg.study = StudyKind::asymptotics;
    cfg.weight = {tw.alpha, tw.beta, tw.h};
    cfg.n = std::vector<int>{50, 100, 200};
    const AsymptoticsReport r = run_asymptotics_study(cfg);
    pass = pass && r.pass;
    detail += fmt("(%g,%g,", tw.alpha, tw.beta) + tw.h + ") bulk " +
              fmt("%.3f/%.3f edge %.3f/%.3f; ", r.bulk_ratios[0], r.bulk_ratios[1],
                  r.edge_ratios[0], r.edge_ratios[1]);
  }
  // For the third test weight the bulk formula is exact, so there is no ratio.
  ExperimentConfig cfg;
  cfg.study = StudyKind::asymptotics;
  cfg.weight = {-0.5, -0.5, "runge"};
  cfg.n = std::vector<int>{50, 100, 200};
  const AsymptoticsReport r = run_asymptotics_study(cfg);
  double bulk = 0.0;
  for (const auto& row : r.rows) bulk = std::max(bulk, row.bulk_err);
  detail += fmt("runge bulk exact to %.1e (band 0.5 +- 0.15)", bulk);
  return {pass, detail};
}

// 9. Special functions.
Outcome bessel_checks() {
  double closed = 0.0;
  for (double z : linspace(0.01, 100.0, 2001)) {
    const double c = std::sqrt(2.0 / (std::numbers::pi * z));
    const double jp = c * std::sin(z);
    const double jm = c * std::cos(z);
    closed = std::max(closed, std::abs(bessel_eval(0.5, z).value - jp) / std::max(std::abs(jp), c));
    closed = std::max(closed, std::abs(bessel_eval(-0.5, z).value - jm) / std::max(std::abs(jm), c));
  }
  double rec = 0.0;
  for (double a : {0.3, 0.5, 1.0, 2.5, 4.0}) {
    for (double z : linspace(0.5, 50.0, 400)) {
      const double jm = bessel_eval(a - 1.0, z).value;
      const double j = bessel_eval(a, z).value;
      const double jp = bessel_eval(a + 1.0, z).value;
      const double scale = std::abs(jm) + std::abs(jp) + std::abs(2.0 * a / z * j);
      rec = std::max(rec, std::abs(jm + jp - 2.0 * a / z * j) / scale);
    }
  }
  return {closed <= 1e-12 && rec <= 1e-9,
          fmt("J(+-1/2) vs closed form %.2e (1e-12); recurrence residual %.2e (1e-9)", closed, rec)};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "orthonormality", 10, orthonormality},
      {2, "kernel identities", 30, kernel_identities},
      {3, "density rate", 60, density_rate},
      {4, "bulk rate", 120, bulk_rate},
      {5, "edge rate", 180, edge_rate},
      {6, "gap probabilities", 120, gap_convergence},
      {7, "Szego and phase", 60, szego_phase},
      {8, "asymptotic ratios", 60, asymptotic_ratios},
      {9, "Bessel functions", 60, bessel_checks},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = out.pass && in_time;
    if (!pass) ++failures;
    std::printf("[%s] %d %-18s %s; %.2f s (budget %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), secs, c.budget_s);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
