#include "mjue/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "mjue/asymptotics.hpp"
#include "mjue/errors.hpp"
#include "mjue/special_functions.hpp"

namespace mjue {

KernelContext::KernelContext(ModifiedJacobiWeight weight, int n)
    : weight_(std::move(weight)), n_(n) {
  if (n < 1) throw DomainError("KernelContext: n must be >= 1");
  table_ = recurrence_table(weight_, n + 1);
}

KernelContext::KernelContext(ModifiedJacobiWeight weight, RecurrenceTable table, int n)
    : weight_(std::move(weight)), table_(std::move(table)), n_(n) {
  if (n < 1) throw DomainError("KernelContext: n must be >= 1");
  if (table_.N < n + 1) {
    throw DomainError("KernelContext: table holds " + std::to_string(table_.N) +
                      " coefficients, need n + 1 = " + std::to_string(n + 1));
  }
}

namespace {

void require_open_interval(double x, const char* what) {
  if (!(std::abs(x) < 1.0)) throw DomainError(std::string(what) + ": points must lie in (-1,1)");
}

// Polynomial part sum_{j<n} p_j(x) p_j(y) from precomputed (p_{n-1}, p_n) pairs;
// x_minus_y is passed separately so edge callers can supply it exactly.
double cd_quotient(double sb, const OrthonormalPair& px, const OrthonormalPair& py,
                   double x_minus_y) {
  return sb * (px.p * py.p_prev - px.p_prev * py.p) / x_minus_y;
}

double cd_confluent(double sb, const OrthonormalPair& p) {
  return sb * (p.dp * p.p_prev - p.dp_prev * p.p);
}

bool near_diagonal_x(double x, double y) { return std::abs(x - y) < 1e-8 * (1.0 + std::abs(x)); }

bool near_diagonal_uv(double u, double v) { return std::abs(u - v) < kDiagonalSplit * (u + v); }

// 1 - x for the edge variable, kept exact.
double edge_offset(int n, double u) { return u / (2.0 * n * n); }

void require_edge_range(const KernelContext& ctx, double u, double v) {
  const double top = 4.0 * ctx.n() * ctx.n();
  if (!(u > 0.0 && v > 0.0)) throw DomainError("scaled_edge: u and v must be positive");
  if (!(u < top && v < top)) throw DomainError("scaled_edge: u and v must stay below 4 n^2");
}

// (2n^2)^{-1-alpha} (1+x)^{beta/2} sqrt(h(x)) for x = 1 - t: the factor of
// sqrt(w(x)) left after removing (1-x)^{alpha/2} = t^{alpha/2}, with the
// 1/(2n^2) scaling and (2n^2)^{-alpha} split evenly over both points.
double edge_factor(const KernelContext& ctx, double t) {
  const double two_n2 = 2.0 * ctx.n() * ctx.n();
  const ModifiedJacobiWeight& w = ctx.weight();
  return std::pow(two_n2, -0.5 - 0.5 * w.alpha()) * std::pow(2.0 - t, 0.5 * w.beta()) *
         std::sqrt(w.h()(1.0 - t));
}

// Entire parts at z = sqrt(u): G_alpha(z) and G_{alpha+1}(z) = -G'_alpha(z)/z.
struct EntireParts {
  double g = 0.0;
  double g_next = 0.0;
};

EntireParts entire_parts(double alpha, double u) {
  const double z = std::sqrt(u);
  const BesselEval e = bessel_eval(alpha, z);
  EntireParts out{e.entire_part, 0.0};
  out.g_next = z > 0.0 ? -e.entire_part_derivative / z
                       : 1.0 / (std::exp2(alpha + 1.0) * std::tgamma(alpha + 2.0));
  return out;
}

// With A(u) = G(sqrt u) and B(u) = alpha G(z) + z G'(z) = alpha G - u G_{alpha+1}:
// H(u,v) = (A(u) B(v) - A(v) B(u)) / (2 (u - v)).
double reduced_offdiag(double alpha, double u, const EntireParts& pu, double v,
                       const EntireParts& pv) {
  const double bu = alpha * pu.g - u * pu.g_next;
  const double bv = alpha * pv.g - v * pv.g_next;
  return (pu.g * bv - pv.g * bu) / (2.0 * (u - v));
}

// Divided difference at the midpoint c: (A'(c) B(c) - A(c) B'(c)) / 2 with
// A' = -G_{alpha+1}/2 and B' = (alpha G_{alpha+1} - G)/2.
double reduced_diag(double alpha, double c, const EntireParts& p) {
  return 0.25 * (p.g * p.g - 2.0 * alpha * p.g * p.g_next + c * p.g_next * p.g_next);
}

}  // namespace

double kernel_sum(const KernelContext& ctx, double x, double y) {
  require_open_interval(x, "kernel_sum");
  require_open_interval(y, "kernel_sum");
  const int n = ctx.n();
  const OrthonormalValues px = eval_orthonormal(ctx.table(), n - 1, x);
  const OrthonormalValues py = eval_orthonormal(ctx.table(), n - 1, y);
  double s = 0.0;
  for (int j = 0; j < n; ++j) s += px.values[j] * py.values[j];
  return std::sqrt(weight_eval(ctx.weight(), x) * weight_eval(ctx.weight(), y)) * s;
}

double kernel_cd(const KernelContext& ctx, double x, double y) {
  require_open_interval(x, "kernel_cd");
  require_open_interval(y, "kernel_cd");
  const int n = ctx.n();
  const double sb = std::sqrt(ctx.table().b[n]);
  const double ww = std::sqrt(weight_eval(ctx.weight(), x) * weight_eval(ctx.weight(), y));
  if (near_diagonal_x(x, y)) {
    const OrthonormalPair p = orthonormal_pair(ctx.table(), n, 0.5 * (x + y));
    return ww * cd_confluent(sb, p);
  }
  const OrthonormalPair px = orthonormal_pair(ctx.table(), n, x);
  const OrthonormalPair py = orthonormal_pair(ctx.table(), n, y);
  return ww * cd_quotient(sb, px, py, x - y);
}

double scaled_bulk(const KernelContext& ctx, double x, double u, double v) {
  const double scale = ctx.n() * arcsine_density(x);
  const double xs = x + u / scale;
  const double ys = x + v / scale;
  if (!(std::abs(xs) < 1.0 && std::abs(ys) < 1.0)) {
    throw DomainError("scaled_bulk: shifted arguments leave (-1,1)");
  }
  return kernel_cd(ctx, xs, ys) / scale;
}

double scaled_edge_reduced(const KernelContext& ctx, double u, double v) {
  require_edge_range(ctx, u, v);
  const int n = ctx.n();
  const double sb = std::sqrt(ctx.table().b[n]);
  const double tu = edge_offset(n, u);
  const double tv = edge_offset(n, v);
  const double factor = edge_factor(ctx, tu) * edge_factor(ctx, tv);
  if (near_diagonal_uv(u, v)) {
    const OrthonormalPair p = orthonormal_pair_near_one(ctx.table(), n, 0.5 * (tu + tv));
    return factor * cd_confluent(sb, p);
  }
  const OrthonormalPair px = orthonormal_pair_near_one(ctx.table(), n, tu);
  const OrthonormalPair py = orthonormal_pair_near_one(ctx.table(), n, tv);
  return factor * cd_quotient(sb, px, py, tv - tu);
}

double scaled_edge(const KernelContext& ctx, double u, double v) {
  return std::pow(u * v, 0.5 * ctx.weight().alpha()) * scaled_edge_reduced(ctx, u, v);
}

Matrix scaled_edge_reduced_matrix(const KernelContext& ctx, std::span<const double> nodes) {
  const std::size_t m = nodes.size();
  const int n = ctx.n();
  const double sb = std::sqrt(ctx.table().b[n]);
  std::vector<double> t(m);
  std::vector<double> factor(m);
  std::vector<OrthonormalPair> pairs(m);
  for (std::size_t i = 0; i < m; ++i) {
    require_edge_range(ctx, nodes[i], nodes[i]);
    t[i] = edge_offset(n, nodes[i]);
    factor[i] = edge_factor(ctx, t[i]);
    pairs[i] = orthonormal_pair_near_one(ctx.table(), n, t[i]);
  }
  Matrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    out(i, i) = factor[i] * factor[i] * cd_confluent(sb, pairs[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      double s = 0.0;
      if (near_diagonal_uv(nodes[i], nodes[j])) {
        s = cd_confluent(sb, orthonormal_pair_near_one(ctx.table(), n, 0.5 * (t[i] + t[j])));
      } else {
        s = cd_quotient(sb, pairs[i], pairs[j], t[j] - t[i]);
      }
      out(i, j) = out(j, i) = factor[i] * factor[j] * s;
    }
  }
  return out;
}

double sine_kernel(double u, double v) {
  const double d = std::numbers::pi * (u - v);
  if (std::abs(u - v) < 1e-6) return 1.0 - d * d / 6.0;
  return std::sin(d) / d;
}

double bessel_kernel_reduced(double alpha, double u, double v) {
  if (!(u >= 0.0 && v >= 0.0)) throw DomainError("bessel_kernel: u and v must be >= 0");
  if (u == v || near_diagonal_uv(u, v)) {
    const double c = 0.5 * (u + v);
    return reduced_diag(alpha, c, entire_parts(alpha, c));
  }
  return reduced_offdiag(alpha, u, entire_parts(alpha, u), v, entire_parts(alpha, v));
}

double bessel_kernel(double alpha, double u, double v) {
  if (!(u > 0.0 && v > 0.0)) throw DomainError("bessel_kernel: u and v must be positive");
  if (near_diagonal_uv(u, v)) {
    return std::pow(u * v, 0.5 * alpha) * bessel_kernel_reduced(alpha, u, v);
  }
  const double su = std::sqrt(u);
  const double sv = std::sqrt(v);
  const BesselEval ju = bessel_eval(alpha, su);
  const BesselEval jv = bessel_eval(alpha, sv);
  return (ju.value * sv * jv.derivative - jv.value * su * ju.derivative) / (2.0 * (u - v));
}

Matrix bessel_kernel_reduced_matrix(double alpha, std::span<const double> nodes) {
  const std::size_t m = nodes.size();
  std::vector<EntireParts> parts(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(nodes[i] >= 0.0)) throw DomainError("bessel_kernel: nodes must be >= 0");
    parts[i] = entire_parts(alpha, nodes[i]);
  }
  Matrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    out(i, i) = reduced_diag(alpha, nodes[i], parts[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      out(i, j) = out(j, i) = near_diagonal_uv(nodes[i], nodes[j])
                                  ? bessel_kernel_reduced(alpha, nodes[i], nodes[j])
                                  : reduced_offdiag(alpha, nodes[i], parts[i], nodes[j], parts[j]);
    }
  }
  return out;
}

}  // namespace mjue
